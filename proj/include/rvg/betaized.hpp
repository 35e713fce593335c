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

#ifndef RVGEN_BETAIZED_HPP
#define RVGEN_BETAIZED_HPP

#include <cstdint>

#include "rvg/moments.hpp"
#include "rvg/random.hpp"

namespace rvg {

// Conditional law of one GHS convolution component given the sum:
// f(x) = f_a(x) f_b(s - x) / f_{a+b}(s). Shapes a, b >= 1 for sampling and
// for the log-concave surrogate (its concavity proof needs it); density
// evaluation alone is defined for any a, b > 0 behind an explicit override.
struct BetaizedParams {
  double a;
  double b;
  double s;
};

// Requires finite fields, a > 0, b > 0; additionally min(a,b) >= 1 unless
// `allow_shape_below_one`.
void validate(const BetaizedParams& p, bool allow_shape_below_one = false);

// Mean a s/(a+b) and variance ab (s^2 + (a+b)^2) / ((a+b)^2 (1 + a + b)).
Moments moments(const BetaizedParams& p);

// All envelope constants used by the two rejection samplers. alpha and beta
// are the sandwich factors around the log-concave surrogate g; A, B, C shape
// the single flat-plus-exponential envelope; eta, tau, tau_prime shape the
// tighter tripartite envelope.
struct SandwichConstants {
  double alpha;      // in (0, 1]
  double beta;       // >= 1
  double A;          // beta^2
  double B;          // 3/2 + 1/sqrt(12 + 12/alpha^2)
  double C;          // alpha / sqrt(12 + 12/alpha^2)
  double eta;        // (sigma/alpha)(1 + sqrt(3 (1 + 1/alpha^2)))
  double tau;        // alpha / (sigma sqrt(12 + 12/alpha^2))
  double tau_prime;  // beta / sigma
  double mu;
  double sigma;
};

SandwichConstants sandwich_constants(const BetaizedParams& p);

// Cached evaluator of ln f(x) via the three-density composition (two complex
// gamma magnitudes per call, everything else precomputed).
class BetaizedDensity {
 public:
  explicit BetaizedDensity(const BetaizedParams& p, bool allow_shape_below_one = false);
  double operator()(double x) const;
  const BetaizedParams& params() const { return p_; }

 private:
  BetaizedParams p_;
  double const_a_;     // per-factor constants of the GHS densities
  double const_b_;
  double log_denom_;   // ln f_{a+b}(s)
};

double log_density(const BetaizedParams& p, double x, bool allow_shape_below_one = false);

// ln g(x), the log-concave surrogate sandwiched by alpha g <= f <= beta g.
double log_surrogate_g(const BetaizedParams& p, double x);

// Rejection from the flat-plus-exponential envelope (A, B, C). Exact for all
// a, b >= 1; expected iterations 2(1+B)A/C.
double sample_lemma2(RandomStream& stream, const BetaizedParams& p,
                     std::uint64_t* iterations = nullptr);
double sample_lemma2(RandomStream& stream, const SandwichConstants& c, const BetaizedDensity& f,
                     std::uint64_t* iterations = nullptr);

// Rejection from the tripartite envelope (flat core, reciprocal middle,
// exponential tails). Same law, roughly 40% fewer iterations for large
// shapes; the default method.
double sample_lemma3(RandomStream& stream, const BetaizedParams& p,
                     std::uint64_t* iterations = nullptr);
double sample_lemma3(RandomStream& stream, const SandwichConstants& c, const BetaizedDensity& f,
                     std::uint64_t* iterations = nullptr);

// Expected iteration counts of the two samplers (envelope areas).
double lemma2_iteration_bound(const SandwichConstants& c);
double lemma3_iteration_bound(const SandwichConstants& c);

namespace detail {
// Proposal of the reciprocal middle branch of the tripartite sampler: the
// offset |X - mu| - eta, log-uniform on [1/tau_prime, 1/tau]. Exposed so the
// goodness-of-fit harness can test the branch marginal directly.
double lemma3_middle_offset(RandomStream& stream, const SandwichConstants& c);
}  // namespace detail

}  // namespace rvg

#endif  // RVGEN_BETAIZED_HPP
