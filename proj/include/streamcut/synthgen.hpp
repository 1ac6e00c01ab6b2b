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
#include "streamcut/random.hpp"

namespace streamcut {

/// Truncated Zipf law on {1, ..., max_degree}: P(d) ∝ d^-exponent.
class ZipfSampler {
 public:
  /// Throws std::invalid_argument unless exponent > 1 and max_degree >= 1.
  ZipfSampler(double exponent, std::uint64_t max_degree);

  double exponent() const noexcept { return exponent_; }
  std::uint64_t max_degree() const noexcept { return cdf_.size(); }

  /// Exact normalized probability of d (0 outside the support).
  double pmf(std::uint64_t d) const noexcept;

  /// Inverse-CDF draw.
  std::uint64_t operator()(Rng& rng) const;

 private:
  double exponent_;
  double norm_;
  std::vector<double> cdf_;
};

/// Single draw; builds the table each call. Prefer ZipfSampler for loops.
std::uint64_t sample_zipf(double exponent, std::uint64_t max_degree, Rng& rng);

struct SyntheticSpec {
  VertexId vertex_count = 100000;
  double alpha = 2.2;   // out-degree exponent of the first half
  double beta = 2.2;    // in-degree exponent of the second half
  std::uint64_t max_degree = 0;  // 0 means vertex_count - 1
  std::uint64_t seed = 1;

  std::uint64_t effective_max_degree() const noexcept {
    return max_degree == 0 ? std::uint64_t{vertex_count} - 1 : max_degree;
  }
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SyntheticSpec& spec);

/// Union of two graphs on the same vertex set: Zipf(alpha) out-degrees with
/// uniform targets, then Zipf(beta) in-degrees with uniform sources. Self-loops
/// are redrawn; duplicate edges are kept. Vertex v has dense id v.
/// Zipf(alpha) out-degrees per vertex, uniform targets.
std::vector<Edge> generate_out_half(const SyntheticSpec& spec);
/// Zipf(beta) in-degrees per vertex, uniform sources.
std::vector<Edge> generate_in_half(const SyntheticSpec& spec);

/// Out-half followed by in-half.
Graph generate(const SyntheticSpec& spec);

}  // namespace streamcut
