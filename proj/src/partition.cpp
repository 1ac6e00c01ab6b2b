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

#include "streamcut/partition.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace streamcut {

namespace {

constexpr std::uint64_t kEdgeHashSalt = 0x45444745ULL;
constexpr std::uint64_t kRowHashSalt = 0x524F57ULL;
constexpr std::uint64_t kColHashSalt = 0x434F4CULL;
constexpr std::uint64_t kRngSalt = 0x524E47ULL;

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::Random: return "random";
    case Algorithm::Grid: return "grid";
    case Algorithm::Balance: return "balance";
    case Algorithm::RandomDegree: return "random-degree";
    case Algorithm::Degree: return "degree";
    case Algorithm::DegreeIO: return "degree-io";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

void write_assignment_log(std::ostream& out, const Graph& graph,
                          const AssignmentLog& log) {
  for (const Assignment& a : log) {
    out << graph.external_id(a.edge.source) << ' '
        << graph.external_id(a.edge.target) << ' ' << a.partition << '\n';
  }
}

GridShape grid_shape(std::uint32_t partitions) {
  if (partitions == 0) throw std::invalid_argument("partition count must be positive");
  std::uint32_t rows = 1;
  for (std::uint32_t r = 1; std::uint64_t{r} * r <= partitions; ++r) {
    if (partitions % r == 0) rows = r;
  }
  return {rows, partitions / rows};
}

// ---------------------------------------------------------------------------
// PartitionState

PartitionState::PartitionState(std::uint32_t partitions, VertexId vertex_count,
                               std::uint64_t seed)
    : partitions_(partitions),
      vertex_count_(vertex_count),
      words_((partitions + 63) / 64),
      edge_counts_(partitions, 0),
      replicas_(std::size_t{vertex_count} * words_, 0),
      in_degree_(vertex_count, 0),
      out_degree_(vertex_count, 0),
      arrived_(vertex_count, 0),
      buffer_(vertex_count),
      grid_(grid_shape(partitions)),
      edge_hash_(derive_seed(seed, kEdgeHashSalt)),
      row_hash_(derive_seed(seed, kRowHashSalt)),
      col_hash_(derive_seed(seed, kColHashSalt)),
      rng_(derive_seed(seed, kRngSalt)) {
  scratch_.reserve(partitions);
}

std::uint64_t PartitionState::min_edges() const noexcept {
  return *std::min_element(edge_counts_.begin(), edge_counts_.end());
}

bool PartitionState::guard_active() const noexcept {
  if (assigned_total_ < partitions_) return false;
  const double average =
      static_cast<double>(assigned_total_) / static_cast<double>(partitions_);
  return static_cast<double>(max_edges_) / average >= kImbalanceThreshold;
}

std::uint32_t PartitionState::replica_count(VertexId v) const noexcept {
  std::uint32_t count = 0;
  for (std::uint64_t w : replica_words(v)) count += std::popcount(w);
  return count;
}

std::vector<PartitionId> PartitionState::replicas(VertexId v) const {
  std::vector<PartitionId> out;
  for (PartitionId k = 0; k < partitions_; ++k) {
    if (has_replica(v, k)) out.push_back(k);
  }
  return out;
}

void PartitionState::commit(const Edge& e, PartitionId k) {
  const std::uint64_t bit = std::uint64_t{1} << (k & 63);
  replicas_[std::size_t{e.source} * words_ + (k >> 6)] |= bit;
  replicas_[std::size_t{e.target} * words_ + (k >> 6)] |= bit;
  max_edges_ = std::max(max_edges_, ++edge_counts_[k]);
  ++assigned_total_;
}

void PartitionState::mark_arrived(VertexId v, std::uint64_t out_degree) {
  arrived_[v] = 1;
  out_degree_[v] = out_degree;
}

std::optional<std::uint64_t> PartitionState::out_degree(VertexId v) const noexcept {
  if (!arrived_[v]) return std::nullopt;
  return out_degree_[v];
}

void PartitionState::buffer_edge(VertexId awaited, const Edge& e) {
  buffer_[awaited].push_back(e);
  ++buffered_;
}

std::vector<Edge> PartitionState::take_buffer(VertexId awaited) {
  std::vector<Edge> out;
  out.swap(buffer_[awaited]);
  buffered_ -= out.size();
  return out;
}

// ---------------------------------------------------------------------------
// Heuristics

double balance_score(PartitionId k, const PartitionState& state) {
  const double max_edges = static_cast<double>(state.max_edges());
  const double min_edges = static_cast<double>(state.min_edges());
  return (max_edges - static_cast<double>(state.edge_count(k))) /
         (max_edges - min_edges + 1.0);
}

namespace {

PartitionId pick_uniform(std::span<const PartitionId> candidates, Rng& rng) {
  if (candidates.size() == 1) return candidates.front();
  return candidates[rng.below(candidates.size())];
}

// argmax balance(k) == argmin |P(k)|.
PartitionId least_loaded(PartitionState& state) {
  auto& cand = state.scratch();
  cand.clear();
  const auto counts = state.edge_counts();
  std::uint64_t best = ~std::uint64_t{0};
  for (PartitionId k = 0; k < counts.size(); ++k) {
    if (counts[k] < best) {
      best = counts[k];
      cand.clear();
    }
    if (counts[k] == best) cand.push_back(k);
  }
  return pick_uniform(cand, state.rng());
}

// Maximizes w_u*1{k in A(u)} + w_v*1{k in A(v)} + balance(k).
//
// balance(k) lies in [0, 1), so the integer indicator part decides first and
// balance only orders partitions of equal indicator weight; among those the
// maximizer is the least-loaded one. The heaviest indicator class is
// A(u) ∩ A(v) when non-empty, otherwise the replica set of the endpoint with
// the larger weight (both sets when the weights are equal). With no replicas
// at all every weight is 0 and this reduces to least_loaded().
PartitionId best_scored(const Edge& e, PartitionState& state,
                        std::uint32_t weight_u, std::uint32_t weight_v) {
  if (state.guard_active()) return least_loaded(state);

  const auto words_u = state.replica_words(e.source);
  const auto words_v = state.replica_words(e.target);
  bool any_both = false;
  bool any_u = false;
  bool any_v = false;
  for (std::size_t w = 0; w < words_u.size(); ++w) {
    any_both |= (words_u[w] & words_v[w]) != 0;
    any_u |= words_u[w] != 0;
    any_v |= words_v[w] != 0;
  }
  if (!any_u && !any_v) return least_loaded(state);

  enum class Pick { Both, U, V, Either } pick;
  if (any_both) {
    pick = Pick::Both;
  } else if (weight_u == weight_v || !any_u || !any_v) {
    pick = Pick::Either;
  } else {
    pick = weight_u > weight_v ? Pick::U : Pick::V;
  }

  const auto counts = state.edge_counts();
  auto& cand = state.scratch();
  cand.clear();
  std::uint64_t best_load = ~std::uint64_t{0};
  for (std::size_t w = 0; w < words_u.size(); ++w) {
    std::uint64_t bits = 0;
    switch (pick) {
      case Pick::Both: bits = words_u[w] & words_v[w]; break;
      case Pick::U: bits = words_u[w]; break;
      case Pick::V: bits = words_v[w]; break;
      case Pick::Either: bits = words_u[w] | words_v[w]; break;
    }
    while (bits != 0) {
      const PartitionId k = static_cast<PartitionId>(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
      const std::uint64_t load = counts[k];
      if (load < best_load) {
        best_load = load;
        cand.clear();
      }
      if (load == best_load) cand.push_back(k);
    }
  }
  return pick_uniform(cand, state.rng());
}

enum class DegreeView { InOnly, Total };

PartitionId degree_scored(const Edge& e, PartitionState& state, DegreeView view) {
  const std::uint64_t du = view == DegreeView::Total ? state.total_degree(e.source)
                                                     : state.in_degree(e.source);
  const std::uint64_t dv = view == DegreeView::Total ? state.total_degree(e.target)
                                                     : state.in_degree(e.target);
  const std::uint32_t weight_u = 1 + (du <= dv ? 1 : 0);
  const std::uint32_t weight_v = 1 + (dv <= du ? 1 : 0);
  return best_scored(e, state, weight_u, weight_v);
}

PartitionId place(const Edge& e, PartitionState& state, PartitionId k) {
  state.commit(e, k);
  return k;
}

}  // namespace

PartitionId assign_random(const Edge& e, PartitionState& state) {
  const auto k = static_cast<PartitionId>(state.edge_hash()(e.source, e.target) %
                                          state.partitions());
  return place(e, state, k);
}

PartitionId assign_grid(const Edge& e, PartitionState& state) {
  const GridShape shape = state.grid();
  const auto row_u = static_cast<std::uint32_t>(state.row_hash()(e.source) % shape.rows);
  const auto col_u = static_cast<std::uint32_t>(state.col_hash()(e.source) % shape.cols);
  const auto row_v = static_cast<std::uint32_t>(state.row_hash()(e.target) % shape.rows);
  const auto col_v = static_cast<std::uint32_t>(state.col_hash()(e.target) % shape.cols);

  // C(u) ∩ C(v), partition = row * cols + col. The cells (row_u, col_v) and
  // (row_v, col_u) always qualify, so the set is never empty.
  auto& cand = state.scratch();
  cand.clear();
  auto add = [&](std::uint32_t r, std::uint32_t c) {
    if ((r == row_v || c == col_v)) cand.push_back(r * shape.cols + c);
  };
  for (std::uint32_t c = 0; c < shape.cols; ++c) add(row_u, c);
  for (std::uint32_t r = 0; r < shape.rows; ++r) {
    if (r != row_u) add(r, col_u);
  }
  std::sort(cand.begin(), cand.end());
  return place(e, state, pick_uniform(cand, state.rng()));
}

PartitionId assign_balance(const Edge& e, PartitionState& state) {
  return place(e, state, best_scored(e, state, 1, 1));
}

PartitionId assign_random_degree(const Edge& e, PartitionState& state,
                                 std::span<const std::uint64_t> full_degrees) {
  if (e.source >= full_degrees.size() || e.target >= full_degrees.size()) {
    throw std::out_of_range("random-degree: missing degree for edge endpoint");
  }
  const VertexId lower =
      full_degrees[e.target] < full_degrees[e.source] ? e.target : e.source;
  const auto k =
      static_cast<PartitionId>(state.edge_hash()(lower) % state.partitions());
  return place(e, state, k);
}

PartitionId assign_degree(const Edge& e, PartitionState& state) {
  state.observe_in_edge(e.target);
  return place(e, state, degree_scored(e, state, DegreeView::InOnly));
}

std::optional<PartitionId> assign_degree_io(const Edge& e, PartitionState& state) {
  state.observe_in_edge(e.target);
  if (state.arrived(e.target)) {
    return place(e, state, degree_scored(e, state, DegreeView::Total));
  }
  const auto out_u = state.out_degree(e.source).value_or(0);
  if (out_u >= state.partitions()) {
    state.buffer_edge(e.target, e);
    return std::nullopt;
  }
  return place(e, state, degree_scored(e, state, DegreeView::InOnly));
}

AssignmentLog on_vertex_arrival(const StreamEvent& event, PartitionState& state) {
  AssignmentLog out;
  state.mark_arrived(event.vertex, event.out_edges.size());
  for (const Edge& e : state.take_buffer(event.vertex)) {
    out.push_back({e, place(e, state, degree_scored(e, state, DegreeView::Total))});
  }
  for (const Edge& e : event.out_edges) {
    if (auto k = assign_degree_io(e, state)) out.push_back({e, *k});
  }
  return out;
}

AssignmentLog flush_stream(PartitionState& state) {
  AssignmentLog out;
  for (VertexId v = 0; v < state.vertex_count() && state.buffered_count() > 0; ++v) {
    for (const Edge& e : state.take_buffer(v)) {
      out.push_back({e, place(e, state, degree_scored(e, state, DegreeView::Total))});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Driver

StreamPartitioner::StreamPartitioner(Algorithm algorithm,
                                     std::uint32_t partitions,
                                     VertexId vertex_count, std::uint64_t seed,
                                     std::vector<std::uint64_t> full_degrees)
    : algorithm_(algorithm),
      state_(partitions, vertex_count, seed),
      full_degrees_(std::move(full_degrees)) {
  if (algorithm == Algorithm::RandomDegree && full_degrees_.size() < vertex_count) {
    throw std::invalid_argument("random-degree requires a full degree table");
  }
}

void StreamPartitioner::process(const StreamEvent& event, AssignmentLog& out) {
  switch (algorithm_) {
    case Algorithm::DegreeIO: {
      auto placed = on_vertex_arrival(event, state_);
      out.insert(out.end(), placed.begin(), placed.end());
      return;
    }
    case Algorithm::Random:
      for (const Edge& e : event.out_edges) out.push_back({e, assign_random(e, state_)});
      return;
    case Algorithm::Grid:
      for (const Edge& e : event.out_edges) out.push_back({e, assign_grid(e, state_)});
      return;
    case Algorithm::Balance:
      for (const Edge& e : event.out_edges) out.push_back({e, assign_balance(e, state_)});
      return;
    case Algorithm::RandomDegree:
      for (const Edge& e : event.out_edges) {
        out.push_back({e, assign_random_degree(e, state_, full_degrees_)});
      }
      return;
    case Algorithm::Degree:
      for (const Edge& e : event.out_edges) out.push_back({e, assign_degree(e, state_)});
      return;
  }
}

void StreamPartitioner::finish(AssignmentLog& out) {
  if (algorithm_ != Algorithm::DegreeIO) return;
  auto placed = flush_stream(state_);
  out.insert(out.end(), placed.begin(), placed.end());
}

RunResult run_partition(std::span<const StreamEvent> stream,
                        Algorithm algorithm, std::uint32_t partitions,
                        std::uint64_t seed,
                        std::vector<std::uint64_t> full_degrees) {
  VertexId vertex_count = 0;
  std::size_t edge_total = 0;
  for (const StreamEvent& event : stream) {
    vertex_count = std::max(vertex_count, event.vertex + 1);
    for (const Edge& e : event.out_edges) {
      vertex_count = std::max({vertex_count, e.source + 1, e.target + 1});
    }
    edge_total += event.out_edges.size();
  }
  StreamPartitioner partitioner(algorithm, partitions, vertex_count, seed,
                                std::move(full_degrees));
  AssignmentLog log;
  log.reserve(edge_total);
  for (const StreamEvent& event : stream) partitioner.process(event, log);
  partitioner.finish(log);
  return {std::move(log), std::move(partitioner.state())};
}

RunResult run_partition(const Graph& graph, StreamOrder order,
                        Algorithm algorithm, std::uint32_t partitions,
                        std::uint64_t seed) {
  const auto stream = build_stream(graph, order);
  std::vector<std::uint64_t> degrees;
  if (algorithm == Algorithm::RandomDegree) degrees = graph.total_degrees();
  StreamPartitioner partitioner(algorithm, partitions, graph.vertex_count(), seed,
                                std::move(degrees));
  AssignmentLog log;
  log.reserve(graph.edge_count());
  for (const StreamEvent& event : stream) partitioner.process(event, log);
  partitioner.finish(log);
  return {std::move(log), std::move(partitioner.state())};
}

}  // namespace streamcut
