// Copyright 2026 The streamcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "streamcut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "streamcut/random.hpp"

namespace streamcut {

Graph::Graph(VertexId vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  const std::size_t n = vertex_count_;
  std::vector<std::size_t> out_count(n, 0);
  in_degree_.assign(n, 0);
  for (const Edge& e : edges_) {
    if (e.source >= n || e.target >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    ++out_count[e.source];
    ++in_degree_[e.target];
  }

  out_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] = out_offsets_[v] + out_count[v];
  }
  out_ids_.resize(edges_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_ids_[cursor[edges_[i].source]++] = i;
  }

  nbr_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    nbr_offsets_[v + 1] = nbr_offsets_[v] + out_count[v] + in_degree_[v];
  }
  nbrs_.resize(nbr_offsets_[n]);
  std::vector<std::size_t> fill(nbr_offsets_.begin(), nbr_offsets_.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t id : out_edge_ids(static_cast<VertexId>(v))) {
      nbrs_[fill[v]++] = edges_[id].target;
    }
  }
  for (const Edge& e : edges_) {
    nbrs_[fill[e.target]++] = e.source;
  }
}

std::vector<std::uint64_t> Graph::total_degrees() const {
  std::vector<std::uint64_t> out(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) out[v] = total_degree(v);
  return out;
}

void Graph::set_external_ids(std::vector<std::uint64_t> ids) {
  if (!ids.empty() && ids.size() != vertex_count_) {
    throw std::invalid_argument("external id table size mismatch");
  }
  external_ids_ = std::move(ids);
}

namespace {

bool parse_u64(std::string_view token, std::uint64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    if (tokens.size() != 2 || !parse_u64(tokens[0], s) ||
        !parse_u64(tokens[1], t)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) +
                                    ": expected \"source target\", got \"" +
                                    line + "\"");
    }
    raw.emplace_back(s, t);
  }
  if (raw.empty()) throw ParseError(line_no, "edge list is empty");

  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [s, t] : raw) {
    ids.push_back(s);
    ids.push_back(t);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<VertexId>::max()) {
    throw ParseError(line_no, "too many distinct vertices");
  }
  auto dense = [&ids](std::uint64_t id) {
    return static_cast<VertexId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [s, t] : raw) edges.push_back({dense(s), dense(t)});

  const bool identity = ids.back() + 1 == ids.size();
  Graph graph(static_cast<VertexId>(ids.size()), std::move(edges));
  if (!identity) graph.set_external_ids(std::move(ids));
  return graph;
}

Graph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  for (const Edge& e : graph.edges()) {
    out << graph.external_id(e.source) << ' ' << graph.external_id(e.target)
        << '\n';
  }
}

std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::Rnd: return "rnd";
    case OrderKind::BFS: return "bfs";
    case OrderKind::DFS: return "dfs";
  }
  return "?";
}

std::optional<OrderKind> parse_order(std::string_view name) noexcept {
  if (name == "rnd") return OrderKind::Rnd;
  if (name == "bfs") return OrderKind::BFS;
  if (name == "dfs") return OrderKind::DFS;
  return std::nullopt;
}

namespace {

constexpr std::uint64_t kStartSalt = 0x5354415254ULL;
constexpr std::uint64_t kPermSalt = 0x5045524DULL;
constexpr std::uint64_t kShuffleSalt = 0x53485546ULL;

template <typename T, typename R>
void shuffle(std::vector<T>& items, R& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

void traverse_bfs(const Graph& g, VertexId root, std::vector<char>& seen,
                  std::vector<VertexId>& order) {
  std::size_t head = order.size();
  seen[root] = 1;
  order.push_back(root);
  while (head < order.size()) {
    const VertexId v = order[head++];
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
}

// Iterative preorder DFS; visits neighbors in the same order a recursive
// walk over neighbors(v) would.
void traverse_dfs(const Graph& g, VertexId root, std::vector<char>& seen,
                  std::vector<VertexId>& order) {
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  seen[root] = 1;
  order.push_back(root);
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    auto nbrs = g.neighbors(top.v);
    if (top.next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const VertexId w = nbrs[top.next++];
    if (!seen[w]) {
      seen[w] = 1;
      order.push_back(w);
      stack.push_back({w, 0});
    }
  }
}

}  // namespace

std::vector<VertexId> vertex_order(const Graph& graph, StreamOrder order,
                                   std::optional<VertexId> start) {
  const VertexId n = graph.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot stream an empty graph");
  if (start && *start >= n) throw std::invalid_argument("start vertex out of range");

  std::vector<VertexId> result;
  result.reserve(n);
  if (order.kind == OrderKind::Rnd) {
    for (VertexId v = 0; v < n; ++v) result.push_back(v);
    Rng rng(derive_seed(order.seed, kPermSalt));
    shuffle(result, rng);
    return result;
  }

  VertexId root = 0;
  if (start) {
    root = *start;
  } else {
    Rng rng(derive_seed(order.seed, kStartSalt));
    root = static_cast<VertexId>(rng.below(n));
  }
  std::vector<char> seen(n, 0);
  VertexId lowest = 0;
  for (;;) {
    if (order.kind == OrderKind::BFS) {
      traverse_bfs(graph, root, seen, result);
    } else {
      traverse_dfs(graph, root, seen, result);
    }
    while (lowest < n && seen[lowest]) ++lowest;
    if (lowest == n) break;
    root = lowest;
  }
  return result;
}

std::vector<StreamEvent> build_stream(const Graph& graph, StreamOrder order,
                                      std::optional<VertexId> start) {
  const auto vertices = vertex_order(graph, order, start);
  const std::uint64_t shuffle_seed = derive_seed(order.seed, kShuffleSalt);
  const auto edges = graph.edges();

  std::vector<StreamEvent> stream;
  stream.reserve(vertices.size());
  for (VertexId v : vertices) {
    StreamEvent event{v, {}};
    auto ids = graph.out_edge_ids(v);
    event.out_edges.reserve(ids.size());
    for (std::size_t id : ids) event.out_edges.push_back(edges[id]);
    if (event.out_edges.size() > 1) {
      FastRng rng(derive_seed(shuffle_seed, v));
      shuffle(event.out_edges, rng);
    }
    stream.push_back(std::move(event));
  }
  return stream;
}

}  // namespace streamcut
