// Copyright 2026 The sargmax-lab Authors
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

#ifndef SMX_RNG_HPP_
#define SMX_RNG_HPP_

#include <cstdint>
#include <random>

namespace smx {

double normal_quantile(double p);  // stats.cpp

/// Deterministic pseudo-random stream. The engine is the standard-pinned
/// mt19937_64 and every transform below is implemented here (no
/// std::*_distribution, whose outputs are not specified bit-exactly), so a
/// seed fully determines the draw sequence on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Raw 64-bit word (used to derive sub-streams).
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on (0, 1), both endpoints excluded.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via the inverse-CDF transform (one draw consumed).
  double normal() { return normal_quantile(uniform()); }

  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  /// Gamma(shape, 1) by Marsaglia-Tsang squeeze (shape >= 1 direct, smaller
  /// shapes boosted); consumes a variable number of draws.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
};

/// 64-bit mixing cascade (splitmix64 finalizer) deriving per-replication
/// seeds from a master seed; replication streams are independent of
/// scheduling order by construction.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master ^ (index + 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace smx

#endif  // SMX_RNG_HPP_
