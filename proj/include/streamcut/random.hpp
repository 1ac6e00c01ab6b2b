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
#include <random>

namespace streamcut {

/// 64-bit finalizer from SplitMix64. Full avalanche, platform independent.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seeded integer hash used for edge hashing, grid cells and seed derivation.
class HashFunction {
 public:
  constexpr explicit HashFunction(std::uint64_t seed = 0) noexcept
      : seed_(seed), key_(mix64(seed ^ 0x5851F42D4C957F2DULL)) {}

  constexpr std::uint64_t seed() const noexcept { return seed_; }

  constexpr std::uint64_t operator()(std::uint64_t x) const noexcept {
    return mix64(x ^ key_);
  }

  // Ordered pair; (u,v) and (v,u) hash differently.
  constexpr std::uint64_t operator()(std::uint64_t a,
                                     std::uint64_t b) const noexcept {
    return mix64(mix64(a ^ key_) + 0x632BE59BD9B4E019ULL * b);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
};

/// Derives an independent seed for a named sub-stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t salt) noexcept {
  return HashFunction(seed)(salt, 0x2545F4914F6CDD1DULL);
}

/// SplitMix64 as a UniformRandomBitGenerator. Cheap to seed, so it is used
/// where a fresh generator is needed per vertex.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept {
    const std::uint64_t out = mix64(state_);
    state_ += 0x9E3779B97F4A7C15ULL;
    return out;
  }

 private:
  std::uint64_t state_;
};

/// Bounded and real draws whose output does not depend on the standard
/// library's distribution implementations.
template <typename Engine>
class BasicRng {
 public:
  explicit BasicRng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection on the top of the range removes modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform real in [0, 1) with 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  Engine engine_;
};

using Rng = BasicRng<std::mt19937_64>;
using FastRng = BasicRng<SplitMix64>;

}  // namespace streamcut
