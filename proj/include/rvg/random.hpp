// Copyright 2026 The rvgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RVGEN_RANDOM_HPP
#define RVGEN_RANDOM_HPP

#include <cstdint>

namespace rvg {

// Seedable deterministic uniform source. The generator is xoshiro256++
// (Blackman & Vigna) with its state filled from splitmix64 of the seed, so
// the raw 64-bit stream is bit-identical across platforms and compilers.
// Uniforms are mapped as ((u64 >> 11) + 0.5) * 2^-53, which lands strictly
// inside (0,1) -- downstream one-liners divide by U and log it, so the
// endpoints are never emitted.
//
// A stream is single-owner: it may be moved between threads but not shared.
// Parallel sampling uses one independently seeded stream per worker.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }  // raw 64-bit draws consumed

  std::uint64_t next_u64();

  // Derives a statistically independent seed for worker `index` from this
  // stream's seed (one splitmix64 step of seed XOR index).
  static std::uint64_t derive_worker_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
};

// Uniform on the open interval (0,1); consumes one raw draw.
double next_uniform(RandomStream& stream);

// Standard exponential by inversion, E = -ln U.
double sample_exponential(RandomStream& stream);

// Standard normal (Box-Muller); consumes two raw draws.
double sample_normal(RandomStream& stream);

// Gamma(shape, 1) for any shape > 0, uniformly fast in the shape:
// Marsaglia-Tsang squeeze for shape >= 1, boosted by G_a = G_{a+1} U^{1/a}
// below 1. Throws std::domain_error for shape <= 0.
double sample_gamma(RandomStream& stream, double shape);

// Equiprobable sign in {-1, +1}; consumes one raw draw.
int sample_sign(RandomStream& stream);

}  // namespace rvg

#endif  // RVGEN_RANDOM_HPP
