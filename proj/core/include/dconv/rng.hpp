// Copyright 2026 The dconv Authors
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

#ifndef DCONV_RNG_HPP_
#define DCONV_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dconv/point.hpp"
#include "dconv/rational.hpp"

namespace dconv {

/// splitmix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix_seed(mix_seed(mix_seed(seed) ^ a) ^ b);
}

/// Deterministic generator. The standard distributions are implementation
/// defined, so ranges are drawn by rejection on the raw 64-bit engine output,
/// which gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  Coord uniform(Coord lo, Coord hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = 0;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<Coord>(v % span);
  }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<Coord>(size) - 1)); }

  /// True with probability num / den.
  bool chance(std::uint64_t num, std::uint64_t den) { return static_cast<std::uint64_t>(uniform(0, static_cast<Coord>(den) - 1)) < num; }

  /// Multiple of 1/den in [lo, hi].
  Rational rational(Coord lo, Coord hi, Coord den) { return Rational(uniform(lo * den, hi * den), den); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[index(items.size())];
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k) std::swap(items[k - 1], items[index(k)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dconv

#endif  // DCONV_RNG_HPP_
