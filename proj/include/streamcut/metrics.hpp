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
#include <vector>

#include "streamcut/graph.hpp"
#include "streamcut/partition.hpp"

namespace streamcut {

/// Mean |A(v)| over vertices holding at least one replica. Throws
/// std::domain_error if nothing was assigned.
double replication_factor(const PartitionState& state);

/// p * maxedges / |E|. Throws std::domain_error if nothing was assigned.
double imbalance_factor(const PartitionState& state);

/// Percent reduction of `algorithm_lambda` relative to `baseline_lambda`;
/// negative when the algorithm replicates more. Throws std::domain_error for
/// a non-positive baseline.
double improvement(double baseline_lambda, double algorithm_lambda);

/// Per-vertex fraction of incident edges (u,v) with D(v) <= D(u), undirected
/// degrees. Isolated vertices get 1.
using RatioTable = std::vector<double>;
RatioTable compute_ratio_table(const Graph& graph);

/// Closed-form expected replication factor of degree-aware hashing:
///
///   1 + (p-1)/|V| * sum_v (1 - (1 - 1/p)^((1 - Ratio(v)) * D(v)))
///
/// |V| counts vertices with D(v) > 0.
double predict_random_degree(const Graph& graph, std::uint32_t partitions);

/// Same expression with Ratio(v) = 0, the plain edge-hashing case.
double predict_random(const Graph& graph, std::uint32_t partitions);

}  // namespace streamcut
