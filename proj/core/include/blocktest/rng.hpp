/*
   Copyright 2026 The blocktest authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <random>

namespace blocktest {

/// SplitMix64 mixing step; also the seed-derivation primitive.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent child seed from a parent seed and a stream index.
/// Stream rule: child = splitmix64(splitmix64(parent) + index + 1). Every
/// parallel consumer draws from its own derived stream; thread scheduling
/// never touches stream contents.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// Derives a child seed from a parent seed and an arbitrary byte fingerprint
/// (FNV-1a folded through splitmix64).
std::uint64_t derive_seed_fnv(std::uint64_t parent, const void* data, std::size_t size);

/// Seeded random generator with portable distributions. The engine is the
/// standard-specified mt19937_64; uniform, normal and Poisson draws are
/// implemented here (std::*_distribution output is implementation-defined,
/// these streams are bit-identical across standard libraries).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal via Box-Muller (two uniforms per draw).
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Poisson count via cumulative exponential waiting times; exact for any
  /// lambda, O(lambda) uniforms.
  long long poisson(double lambda);

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

} // namespace blocktest
