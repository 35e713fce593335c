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

#include "rvg/random.hpp"

#include <cmath>
#include <stdexcept>

namespace rvg {
namespace {

constexpr double kTwoPi = 6.28318530717958647693;

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& s : state_) s = splitmix64(x);
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  ++position_;
  return result;
}

std::uint64_t RandomStream::derive_worker_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed ^ index;
  return splitmix64(x);
}

double next_uniform(RandomStream& stream) {
  return (static_cast<double>(stream.next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_exponential(RandomStream& stream) { return -std::log(next_uniform(stream)); }

double sample_normal(RandomStream& stream) {
  const double u1 = next_uniform(stream);
  const double u2 = next_uniform(stream);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double sample_gamma(RandomStream& stream, double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw std::domain_error("sample_gamma: requires shape > 0");
  if (shape < 1.0) {
    // boost G_a = G_{a+1} * U^{1/a}
    const double g = sample_gamma(stream, shape + 1.0);
    return g * std::exp(std::log(next_uniform(stream)) / shape);
  }
  // Marsaglia-Tsang (2000) squeeze method
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(stream);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_uniform(stream);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

int sample_sign(RandomStream& stream) { return (stream.next_u64() >> 63) ? 1 : -1; }

}  // namespace rvg
