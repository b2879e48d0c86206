// Copyright 2026 The graphcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHCERT_RNG_HPP
#define GRAPHCERT_RNG_HPP

#include <cstdint>
#include <vector>

namespace graphcert {

/// Seedable, splittable pseudo-random generator (splitmix64 core).
///
/// Every stochastic operation in the library takes an explicit Rng; there is
/// no global randomness. Child streams derived via `child(i)` are
/// statistically independent of the parent's draw sequence, so parallel
/// consumers can each own a substream keyed by a stable index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  bool bernoulli(double p) { return next_double() < p; }

  /// Unbiased uniform draw from [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling on the top of the range
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t v = next_u64();
      if (v >= threshold) return v % bound;
    }
  }

  /// Independent child stream. Derivation depends only on the construction
  /// seed and `index`, never on how many values the parent has drawn.
  Rng child(std::uint64_t index) const {
    return Rng(mix(seed_ ^ mix(index + 0x632BE59BD9B4E019ULL)));
  }

  /// Uniform k-subset of {0, ..., n-1} via partial Fisher-Yates.
  /// Returned indices are in selection order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace graphcert

#endif  // GRAPHCERT_RNG_HPP
