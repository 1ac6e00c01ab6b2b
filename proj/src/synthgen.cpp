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

#include "streamcut/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace streamcut {

ZipfSampler::ZipfSampler(double exponent, std::uint64_t max_degree)
    : exponent_(exponent), norm_(0.0) {
  if (!(exponent > 1.0)) {
    throw std::invalid_argument("zipf exponent must be > 1, got " +
                                std::to_string(exponent));
  }
  if (max_degree < 1) throw std::invalid_argument("zipf max_degree must be >= 1");
  cdf_.resize(max_degree);
  double acc = 0.0;
  for (std::uint64_t d = 1; d <= max_degree; ++d) {
    acc += std::pow(static_cast<double>(d), -exponent);
    cdf_[d - 1] = acc;
  }
  norm_ = acc;
  for (double& c : cdf_) c /= norm_;
  cdf_.back() = 1.0;
}

double ZipfSampler::pmf(std::uint64_t d) const noexcept {
  if (d < 1 || d > cdf_.size()) return 0.0;
  return std::pow(static_cast<double>(d), -exponent_) / norm_;
}

std::uint64_t ZipfSampler::operator()(Rng& rng) const {
  const double u = rng.uniform();
  // First d with CDF(d) > u.
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return static_cast<std::uint64_t>(it - cdf_.begin()) + 1;
}

std::uint64_t sample_zipf(double exponent, std::uint64_t max_degree, Rng& rng) {
  return ZipfSampler(exponent, max_degree)(rng);
}

void validate(const SyntheticSpec& spec) {
  if (spec.vertex_count < 2) throw std::invalid_argument("vertex count must be >= 2");
  if (!(spec.alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
  if (!(spec.beta > 1.0)) throw std::invalid_argument("beta must be > 1");
  const std::uint64_t max_degree = spec.effective_max_degree();
  if (max_degree < 1 || max_degree >= spec.vertex_count) {
    throw std::invalid_argument("max degree must be in [1, vertex count)");
  }
}

namespace {

constexpr std::uint64_t kOutHalfSalt = 0x4F5554ULL;
constexpr std::uint64_t kInHalfSalt = 0x494EULL;

VertexId other_endpoint(VertexId self, VertexId n, Rng& rng) {
  VertexId w = static_cast<VertexId>(rng.below(n));
  while (w == self) w = static_cast<VertexId>(rng.below(n));
  return w;
}

}  // namespace

std::vector<Edge> generate_out_half(const SyntheticSpec& spec) {
  validate(spec);
  const VertexId n = spec.vertex_count;
  const ZipfSampler zipf(spec.alpha, spec.effective_max_degree());
  Rng rng(derive_seed(spec.seed, kOutHalfSalt));
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t degree = zipf(rng);
    for (std::uint64_t i = 0; i < degree; ++i) edges.push_back({v, other_endpoint(v, n, rng)});
  }
  return edges;
}

std::vector<Edge> generate_in_half(const SyntheticSpec& spec) {
  validate(spec);
  const VertexId n = spec.vertex_count;
  const ZipfSampler zipf(spec.beta, spec.effective_max_degree());
  Rng rng(derive_seed(spec.seed, kInHalfSalt));
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t degree = zipf(rng);
    for (std::uint64_t i = 0; i < degree; ++i) edges.push_back({other_endpoint(v, n, rng), v});
  }
  return edges;
}

Graph generate(const SyntheticSpec& spec) {
  std::vector<Edge> edges = generate_out_half(spec);
  const std::vector<Edge> in_half = generate_in_half(spec);
  edges.insert(edges.end(), in_half.begin(), in_half.end());
  return Graph(spec.vertex_count, std::move(edges));
}

}  // namespace streamcut
