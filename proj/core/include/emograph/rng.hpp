// Copyright 2026 The Emograph Authors
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

#ifndef EMOGRAPH_RNG_HPP_
#define EMOGRAPH_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace emograph {

// One splitmix64 step; also the mixing primitive for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Derives an independent seed stream from a master seed. Streams for
// distinct (stream, index) pairs are decorrelated, so concurrent runs can
// consume their own generators without changing results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index = 0) noexcept;

// Uniform generator with a platform-independent mapping to doubles.
// std::uniform_real_distribution may produce different streams across
// standard libraries, which would break the byte-identical-artifact
// contract, so the mapping is done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1), 53 bits of entropy.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform index in [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n) {
    auto idx = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
  }

  // Index drawn proportionally to the given nonnegative weights.
  std::size_t categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace emograph

#endif  // EMOGRAPH_RNG_HPP_
