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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace streamcut {

/// Dense vertex index in [0, vertex_count). External ids from edge-list files
/// are kept in Graph::external_id().
using VertexId = std::uint32_t;

struct Edge {
  VertexId source = 0;
  VertexId target = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable edge multiset with CSR out-adjacency and degree tables.
///
/// Degrees follow the undirected convention: total_degree = in + out, so a
/// self-loop contributes 2 to its vertex.
class Graph {
 public:
  Graph() = default;

  /// Builds from dense indices. Every endpoint must be < vertex_count.
  /// Throws std::invalid_argument otherwise.
  Graph(VertexId vertex_count, std::vector<Edge> edges);

  VertexId vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Indices into edges() of the out-edges of v, in input order.
  std::span<const std::size_t> out_edge_ids(VertexId v) const noexcept {
    return {out_ids_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }

  /// Undirected neighbor list: out-neighbors then in-neighbors, each in edge
  /// order. A self-loop appears twice.
  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {nbrs_.data() + nbr_offsets_[v],
            nbr_offsets_[v + 1] - nbr_offsets_[v]};
  }

  std::uint64_t out_degree(VertexId v) const noexcept {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::uint64_t in_degree(VertexId v) const noexcept { return in_degree_[v]; }
  std::uint64_t total_degree(VertexId v) const noexcept {
    return in_degree(v) + out_degree(v);
  }

  std::vector<std::uint64_t> total_degrees() const;

  /// External identifier of a dense vertex (identity unless loaded from a
  /// file with sparse ids).
  std::uint64_t external_id(VertexId v) const noexcept {
    return external_ids_.empty() ? v : external_ids_[v];
  }
  void set_external_ids(std::vector<std::uint64_t> ids);

 private:
  VertexId vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<std::size_t> out_ids_;
  std::vector<std::size_t> nbr_offsets_{0};
  std::vector<VertexId> nbrs_;
  std::vector<std::uint64_t> in_degree_;
  std::vector<std::uint64_t> external_ids_;
};

/// Reads "source target" lines; '#' lines and blank lines are skipped.
/// External ids are compacted to dense indices in ascending id order, so the
/// lowest external id is dense index 0. Duplicate lines are kept.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::filesystem::path& path);

/// Writes the graph in the same format load_edge_list reads, using external
/// ids.
void write_edge_list(std::ostream& out, const Graph& graph);

enum class OrderKind { Rnd, BFS, DFS };

std::string_view to_string(OrderKind kind) noexcept;
std::optional<OrderKind> parse_order(std::string_view name) noexcept;

struct StreamOrder {
  OrderKind kind = OrderKind::Rnd;
  std::uint64_t seed = 0;
};

struct StreamEvent {
  VertexId vertex = 0;
  std::vector<Edge> out_edges;
};

/// Vertex arrival order. BFS and DFS walk the undirected graph from `start`
/// (seeded uniform pick when absent) and restart from the lowest unvisited
/// index when a component is exhausted.
std::vector<VertexId> vertex_order(const Graph& graph, StreamOrder order,
                                   std::optional<VertexId> start = {});

/// One event per vertex, out-edges permuted with a seed derived from
/// (order.seed, vertex). Throws std::invalid_argument on an empty graph.
std::vector<StreamEvent> build_stream(const Graph& graph, StreamOrder order,
                                      std::optional<VertexId> start = {});

}  // namespace streamcut
