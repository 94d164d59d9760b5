// Copyright 2026 The Authors.
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

#ifndef SPANTREE_RANDOM_HPP_
#define SPANTREE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace spantree {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream split: the child seed depends only on (seed, stream),
// so the order in which components draw randomness never perturbs another
// component's stream.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t substream) {
  return derive_seed(derive_seed(seed, stream), substream);
}

// Stateless +-1 draw for entry (row, col) of a random sign matrix.
constexpr double random_sign(std::uint64_t seed, std::uint64_t row,
                             std::uint64_t col) {
  return (derive_seed(seed, row, col) >> 63) != 0 ? 1.0 : -1.0;
}

using Rng = std::mt19937_64;

// Well-known stream ids used by the library.
namespace streams {
inline constexpr std::uint64_t kResistanceSketch = 1;
inline constexpr std::uint64_t kSchurSampling = 2;
inline constexpr std::uint64_t kAddAbove = 3;
inline constexpr std::uint64_t kNstm = 4;
inline constexpr std::uint64_t kInstances = 5;
inline constexpr std::uint64_t kVerify = 6;
}  // namespace streams

}  // namespace spantree

#endif  // SPANTREE_RANDOM_HPP_
