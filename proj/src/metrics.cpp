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

#include "streamcut/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace streamcut {

double replication_factor(const PartitionState& state) {
  std::uint64_t replicas = 0;
  std::uint64_t covered = 0;
  for (VertexId v = 0; v < state.vertex_count(); ++v) {
    const std::uint32_t count = state.replica_count(v);
    if (count == 0) continue;
    replicas += count;
    ++covered;
  }
  if (covered == 0) throw std::domain_error("replication factor of an empty assignment");
  return static_cast<double>(replicas) / static_cast<double>(covered);
}

double imbalance_factor(const PartitionState& state) {
  if (state.assigned_total() == 0) {
    throw std::domain_error("imbalance factor of an empty assignment");
  }
  return static_cast<double>(state.partitions()) *
         static_cast<double>(state.max_edges()) /
         static_cast<double>(state.assigned_total());
}

double improvement(double baseline_lambda, double algorithm_lambda) {
  if (!(baseline_lambda > 0.0)) throw std::domain_error("baseline lambda must be positive");
  return (baseline_lambda - algorithm_lambda) / baseline_lambda * 100.0;
}

RatioTable compute_ratio_table(const Graph& graph) {
  RatioTable ratio(graph.vertex_count(), 1.0);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const auto nbrs = graph.neighbors(v);
    if (nbrs.empty()) continue;
    const std::uint64_t dv = graph.total_degree(v);
    std::uint64_t lower_or_tied = 0;
    for (VertexId u : nbrs) {
      if (dv <= graph.total_degree(u)) ++lower_or_tied;
    }
    ratio[v] = static_cast<double>(lower_or_tied) / static_cast<double>(dv);
  }
  return ratio;
}

namespace {

template <typename ExposedEdges>
double predict(const Graph& graph, std::uint32_t partitions, ExposedEdges exposed) {
  if (partitions == 0) throw std::invalid_argument("partition count must be positive");
  const double p = partitions;
  const double keep = 1.0 - 1.0 / p;
  double sum = 0.0;
  std::uint64_t vertices = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (graph.total_degree(v) == 0) continue;
    ++vertices;
    sum += 1.0 - std::pow(keep, exposed(v));
  }
  if (vertices == 0) return 1.0;
  return 1.0 + (p - 1.0) / static_cast<double>(vertices) * sum;
}

}  // namespace

double predict_random_degree(const Graph& graph, std::uint32_t partitions) {
  const RatioTable ratio = compute_ratio_table(graph);
  return predict(graph, partitions, [&](VertexId v) {
    return (1.0 - ratio[v]) * static_cast<double>(graph.total_degree(v));
  });
}

double predict_random(const Graph& graph, std::uint32_t partitions) {
  return predict(graph, partitions, [&](VertexId v) {
    return static_cast<double>(graph.total_degree(v));
  });
}

}  // namespace streamcut
