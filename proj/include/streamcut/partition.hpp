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
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "streamcut/graph.hpp"
#include "streamcut/random.hpp"

namespace streamcut {

using PartitionId = std::uint32_t;

enum class Algorithm { Random, Grid, Balance, RandomDegree, Degree, DegreeIO };

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::Random,       Algorithm::Grid,   Algorithm::Balance,
    Algorithm::RandomDegree, Algorithm::Degree, Algorithm::DegreeIO};

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// Max-to-average load ratio at which the greedy heuristics stop scoring
/// replicas and place the edge purely for balance.
inline constexpr double kImbalanceThreshold = 1.1;

struct Assignment {
  Edge edge;
  PartitionId partition = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

using AssignmentLog = std::vector<Assignment>;

/// One "source target partition" line per entry, using the graph's external
/// ids.
void write_assignment_log(std::ostream& out, const Graph& graph,
                          const AssignmentLog& log);

/// rows = largest divisor of p not above sqrt(p); cols = p / rows.
struct GridShape {
  std::uint32_t rows = 1;
  std::uint32_t cols = 1;
};
GridShape grid_shape(std::uint32_t partitions);

/// Streaming state shared by all heuristics: partition loads, replica sets
/// A(v), the observed degree table and the DegreeIO edge buffer.
class PartitionState {
 public:
  PartitionState(std::uint32_t partitions, VertexId vertex_count,
                 std::uint64_t seed);

  std::uint32_t partitions() const noexcept { return partitions_; }
  VertexId vertex_count() const noexcept { return vertex_count_; }

  std::span<const std::uint64_t> edge_counts() const noexcept {
    return edge_counts_;
  }
  std::uint64_t edge_count(PartitionId k) const noexcept {
    return edge_counts_[k];
  }
  std::uint64_t max_edges() const noexcept { return max_edges_; }
  std::uint64_t min_edges() const noexcept;
  std::uint64_t assigned_total() const noexcept { return assigned_total_; }

  /// True when the load guard forces a balance-only placement.
  bool guard_active() const noexcept;

  bool has_replica(VertexId v, PartitionId k) const noexcept {
    return (replica_words(v)[k >> 6] >> (k & 63)) & 1U;
  }
  std::span<const std::uint64_t> replica_words(VertexId v) const noexcept {
    return {replicas_.data() + std::size_t{v} * words_, words_};
  }
  std::uint32_t replica_count(VertexId v) const noexcept;
  std::vector<PartitionId> replicas(VertexId v) const;

  /// Adds e to partition k: bumps its load and inserts k into A(u) and A(v).
  void commit(const Edge& e, PartitionId k);

  // Degree table. In-degrees are observed from the stream; out-degrees become
  // known when the vertex's event arrives.
  void observe_in_edge(VertexId v) { ++in_degree_[v]; }
  std::uint64_t in_degree(VertexId v) const noexcept { return in_degree_[v]; }
  void mark_arrived(VertexId v, std::uint64_t out_degree);
  bool arrived(VertexId v) const noexcept { return arrived_[v] != 0; }
  std::optional<std::uint64_t> out_degree(VertexId v) const noexcept;
  /// Observed in-degree plus out-degree, with out-degree 0 before arrival.
  std::uint64_t total_degree(VertexId v) const noexcept {
    return in_degree_[v] + out_degree_[v];
  }

  void buffer_edge(VertexId awaited, const Edge& e);
  std::vector<Edge> take_buffer(VertexId awaited);
  std::size_t buffered_count() const noexcept { return buffered_; }

  GridShape grid() const noexcept { return grid_; }
  const HashFunction& edge_hash() const noexcept { return edge_hash_; }
  const HashFunction& row_hash() const noexcept { return row_hash_; }
  const HashFunction& col_hash() const noexcept { return col_hash_; }
  Rng& rng() noexcept { return rng_; }

  /// Scratch space for candidate lists; avoids per-edge allocation.
  std::vector<PartitionId>& scratch() noexcept { return scratch_; }

 private:
  std::uint32_t partitions_;
  VertexId vertex_count_;
  std::size_t words_;
  std::vector<std::uint64_t> edge_counts_;
  std::uint64_t max_edges_ = 0;
  std::uint64_t assigned_total_ = 0;
  std::vector<std::uint64_t> replicas_;
  std::vector<std::uint64_t> in_degree_;
  std::vector<std::uint64_t> out_degree_;
  std::vector<char> arrived_;
  std::vector<std::vector<Edge>> buffer_;
  std::size_t buffered_ = 0;
  GridShape grid_;
  HashFunction edge_hash_;
  HashFunction row_hash_;
  HashFunction col_hash_;
  Rng rng_;
  std::vector<PartitionId> scratch_;
};

/// (maxedges - |P(k)|) / (maxedges - minedges + 1), from current loads.
double balance_score(PartitionId k, const PartitionState& state);

PartitionId assign_random(const Edge& e, PartitionState& state);
PartitionId assign_grid(const Edge& e, PartitionState& state);
PartitionId assign_balance(const Edge& e, PartitionState& state);

/// Hashes the lower-degree endpoint (source on ties) using full graph
/// degrees. Throws std::out_of_range if an endpoint has no degree entry.
PartitionId assign_random_degree(const Edge& e, PartitionState& state,
                                 std::span<const std::uint64_t> full_degrees);

/// Records the target's in-edge, then places e by observed in-degrees.
PartitionId assign_degree(const Edge& e, PartitionState& state);

/// Records the target's in-edge, then either places e or, when the source
/// has out-degree >= p and the target has not arrived, buffers it.
/// Requires the source's event to have been announced via mark_arrived.
std::optional<PartitionId> assign_degree_io(const Edge& e,
                                            PartitionState& state);

/// DegreeIO arrival: records the vertex's out-degree, drains edges buffered
/// on it, then handles its own out-edges.
AssignmentLog on_vertex_arrival(const StreamEvent& event, PartitionState& state);

/// Assigns whatever is still buffered, treating never-arrived vertices as
/// out-degree 0. Buffers are drained in ascending awaited-vertex order.
AssignmentLog flush_stream(PartitionState& state);

/// Single-pass driver for any algorithm.
class StreamPartitioner {
 public:
  /// full_degrees is required (size >= vertex_count) for RandomDegree.
  StreamPartitioner(Algorithm algorithm, std::uint32_t partitions,
                    VertexId vertex_count, std::uint64_t seed,
                    std::vector<std::uint64_t> full_degrees = {});

  void process(const StreamEvent& event, AssignmentLog& out);
  void finish(AssignmentLog& out);

  Algorithm algorithm() const noexcept { return algorithm_; }
  const PartitionState& state() const noexcept { return state_; }
  PartitionState& state() noexcept { return state_; }

 private:
  Algorithm algorithm_;
  PartitionState state_;
  std::vector<std::uint64_t> full_degrees_;
};

struct RunResult {
  AssignmentLog log;
  PartitionState state;
};

/// Vertex count is inferred as one past the largest id in the stream.
RunResult run_partition(std::span<const StreamEvent> stream,
                        Algorithm algorithm, std::uint32_t partitions,
                        std::uint64_t seed,
                        std::vector<std::uint64_t> full_degrees = {});

/// Convenience overload: builds the stream and, for RandomDegree, the degree
/// table from the graph.
RunResult run_partition(const Graph& graph, StreamOrder order,
                        Algorithm algorithm, std::uint32_t partitions,
                        std::uint64_t seed);

}  // namespace streamcut
