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

#ifndef RVGEN_PEARSON4_HPP
#define RVGEN_PEARSON4_HPP

#include <cstdint>

#include "rvg/random.hpp"
#include "rvg/specfun.hpp"

namespace rvg {

// Pearson IV shape pair: density proportional to e^{s arctan x} (1+x^2)^{-a}
// on the real line, a > 1/2. The laws for s and -s are mirror images, so
// every sampler works with |s| internally and negates its output for s < 0.
struct Pearson4Params {
  double a;
  double s;
};

// Throws std::domain_error unless a > 1/2 and both fields are finite.
void validate(const Pearson4Params& p);

// ln f(x); finite for all finite x.
double log_density(const Pearson4Params& p, double x);

// ln h(y) for the angular variable Y = arctan(X): s*y + 2(a-1) ln cos y plus
// the normalization, for |y| < pi/2; -inf outside. Log-concave when a >= 1.
double angular_log_density(const Pearson4Params& p, double y);

// Mode of h: arctan(s / (2(a-1))) for a > 1. At a = 1 the mode degenerates
// to the boundary and sign(s) * pi/2 is returned (the limit). Throws for
// a < 1 where h need not be unimodal in this form.
double angular_mode(const Pearson4Params& p);

// Envelope data shared by the two log-concave samplers, built for |s|.
struct LogConcaveEnvelope {
  double beta;       // s / (2(a-1))
  double mode;       // arctan(beta)
  double log_delta;  // ln Delta = s*mode - (a-1) ln(1+beta^2)
  double log_gamma;  // true ln gamma(a,s), used by the known-constant method
  NormBounds bounds;
};

// Requires a > 1 (the a = 1 family has its own closed-form sampler).
LogConcaveEnvelope make_envelope(const Pearson4Params& p);

// The samplers below return one exact Pearson IV variate. When `iterations`
// is non-null the number of rejection-loop passes is added to it (inversion
// methods count as one). A loop exceeding the internal cap throws
// internal_error: the expected counts are all small, so hitting the cap
// means a bug, not bad luck.

// Rejection from the scaled Student-t proposal. Valid for all a > 1/2 but
// the expected cost grows like e^{pi |s| / 2}.
double sample_reject_student(RandomStream& stream, const Pearson4Params& p,
                             std::uint64_t* iterations = nullptr);

// The a = 1 subfamily (skewed Cauchy) by inversion; a single uniform.
double sample_skewed_cauchy(RandomStream& stream, double s,
                            std::uint64_t* iterations = nullptr);

// Universal log-concave rejection with the exact normalization constant
// (expected four iterations). Requires a > 1.
double sample_logconcave(RandomStream& stream, const Pearson4Params& p,
                         std::uint64_t* iterations = nullptr);
double sample_logconcave(RandomStream& stream, const Pearson4Params& p,
                         const LogConcaveEnvelope& env, std::uint64_t* iterations = nullptr);

// Same rejection scheme but driven by the explicit [gamma_lo, gamma_hi]
// bracket instead of gamma itself; every envelope quantity is assembled in
// the log domain. Requires a > 1 (use the skewed Cauchy sampler at a = 1).
double sample_logconcave_gamma_free(RandomStream& stream, const Pearson4Params& p,
                                    std::uint64_t* iterations = nullptr);
double sample_logconcave_gamma_free(RandomStream& stream, const Pearson4Params& p,
                                    const LogConcaveEnvelope& env,
                                    std::uint64_t* iterations = nullptr);

// Symmetrize-then-exchange sampler for 1/2 < a <= 1, |s| >= 1, using a
// gamma(2a-1) proposal for the folded angle. The acceptance test carries the
// exact cosh factor of the folded target, so the output is exact.
double sample_symmetrized(RandomStream& stream, const Pearson4Params& p,
                          std::uint64_t* iterations = nullptr);

enum class Pearson4Method {
  kStudentOneLiner,  // s = 0
  kSkewedCauchy,     // a = 1
  kGammaFree,        // a > 1
  kStudentReject,    // a in (1/2,1), 0 < |s| < 1
  kSymmetrized,      // a in (1/2,1), |s| >= 1
};

Pearson4Method route(const Pearson4Params& p);
const char* method_name(Pearson4Method m);

// Uniformly fast dispatcher over the full parameter range a > 1/2, s real.
double sample(RandomStream& stream, const Pearson4Params& p,
              std::uint64_t* iterations = nullptr);

// Expected number of rejection iterations of a method at these parameters
// (the envelope-to-target area ratio); 1 for the inversion one-liners.
double theoretical_iteration_bound(Pearson4Method m, const Pearson4Params& p);

}  // namespace rvg

#endif  // RVGEN_PEARSON4_HPP
