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

#include "rvg/pearson4.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rvg/detail/numeric.hpp"
#include "rvg/errors.hpp"
#include "rvg/student.hpp"

namespace rvg {
namespace {

using detail::kHalfPi;
using detail::kPi;

constexpr std::uint64_t kIterationCap = 10'000'000;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

[[noreturn]] void cap_exceeded(const char* where) {
  throw internal_error(std::string(where) + ": iteration cap exceeded (implementation bug)");
}

// Draw V with density proportional to min(1, e^{1-|v|}) / 4 on the real
// line: uniform core on [-1,1] plus two exponential tails.
double envelope_deviate(RandomStream& stream) {
  double v = 4.0 * next_uniform(stream) - 2.0;
  if (v < -1.0)
    v = -1.0 + std::log(v + 2.0);
  else if (v > 1.0)
    v = 1.0 - std::log(v - 1.0);
  return v;
}

// ln of s*y + 2(a-1) ln cos y (the unnormalized angular log density).
inline double angular_log_kernel(double a, double s, double y) {
  return s * y + 2.0 * (a - 1.0) * std::log(std::cos(y));
}

double sample_logconcave_core(RandomStream& stream, double a, double s_abs,
                              const LogConcaveEnvelope& env, std::uint64_t* iterations) {
  const double m = env.mode;
  const double log_m_height = env.log_gamma + env.log_delta;  // ln h(m)
  const double height = std::exp(log_m_height);
  for (std::uint64_t it = 1; it <= kIterationCap; ++it) {
    const double v = envelope_deviate(stream);
    const double y = m + v / height;
    const double u = next_uniform(stream);
    if (iterations) ++*iterations;
    if (std::fabs(y) >= kHalfPi) continue;
    const double log_envelope =
        std::log(u) + log_m_height + std::min(0.0, 1.0 - height * std::fabs(y - m));
    if (log_envelope <= env.log_gamma + angular_log_kernel(a, s_abs, y)) return std::tan(y);
  }
  cap_exceeded("sample_logconcave");
}

double sample_gamma_free_core(RandomStream& stream, double a, double s_abs,
                              const LogConcaveEnvelope& env, std::uint64_t* iterations) {
  const double m = env.mode;
  const double log_lo_height = env.bounds.log_gamma_lo + env.log_delta;  // ln(gamma^- Delta)
  const double log_hi_height = env.bounds.log_gamma_hi + env.log_delta;  // ln(gamma^+ Delta)
  const double lo_height = std::exp(log_lo_height);
  for (std::uint64_t it = 1; it <= kIterationCap; ++it) {
    const double v = envelope_deviate(stream);
    const double y = m + v / lo_height;
    const double u = next_uniform(stream);
    if (iterations) ++*iterations;
    if (std::fabs(y) >= kHalfPi) continue;
    const double log_envelope =
        std::log(u) + log_hi_height + std::min(0.0, 1.0 - lo_height * std::fabs(y - m));
    if (log_envelope <= env.bounds.log_gamma_lo + angular_log_kernel(a, s_abs, y))
      return std::tan(y);
  }
  cap_exceeded("sample_logconcave_gamma_free");
}

double sample_symmetrized_core(RandomStream& stream, double a, double s_abs,
                               std::uint64_t* iterations) {
  const double shape = 2.0 * a - 1.0;
  const double exponent = 2.0 * (1.0 - a);
  double z = 0.0;
  for (std::uint64_t it = 1;; ++it) {
    if (it > kIterationCap) cap_exceeded("sample_symmetrized");
    z = sample_gamma(stream, shape) / s_abs;
    const double u = next_uniform(stream);
    if (iterations) ++*iterations;
    if (z >= kHalfPi) continue;
    // folded target / gamma envelope, in logs. The first term restores the
    // cosh of the folded density that the pure exponential envelope drops;
    // the second is the (sin z vs 2z/pi) concavity ratio.
    const double log_cosh_ratio = std::log1p(std::exp(-2.0 * s_abs * (kHalfPi - z))) -
                                  0.6931471805599453094;
    const double log_sin_ratio =
        exponent * (std::log(2.0 / kPi) + (z < 1e-8 ? z * z / 6.0 : std::log(z) - std::log(std::sin(z))));
    if (std::log(u) <= log_cosh_ratio + log_sin_ratio) break;
  }
  const double y = sample_sign(stream) * (kHalfPi - z);
  double x = std::tan(y);
  // exchange x for -x with probability e^{-s y} / (e^{-s y} + e^{s y})
  if (next_uniform(stream) < detail::logistic_neg(2.0 * s_abs * y)) x = -x;
  return x;
}

double skewed_cauchy_core(RandomStream& stream, double s_abs) {
  const double u = next_uniform(stream);
  if (s_abs == 0.0) return std::tan(kPi * (u - 0.5));
  // W = (1/s) ln(e^{-pi s/2} + U (e^{pi s/2} - e^{-pi s/2})), rewritten so
  // nothing overflows for large s.
  const double e = std::exp(-kPi * s_abs);
  const double w = kHalfPi + std::log(u + e * (1.0 - u)) / s_abs;
  return std::tan(w);
}

}  // namespace

void validate(const Pearson4Params& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.s) || p.a <= 0.5)
    throw std::domain_error("Pearson4Params: requires finite a > 1/2 and finite s");
}

double log_density(const Pearson4Params& p, double x) {
  validate(p);
  return pearson4_log_norm(p.a, p.s) + p.s * std::atan(x) - p.a * detail::log1p_sq(x);
}

double angular_log_density(const Pearson4Params& p, double y) {
  validate(p);
  if (std::fabs(y) >= kHalfPi) return kNegInf;
  return pearson4_log_norm(p.a, p.s) + angular_log_kernel(p.a, p.s, y);
}

double angular_mode(const Pearson4Params& p) {
  validate(p);
  if (p.a < 1.0) throw std::domain_error("angular_mode: requires a >= 1");
  if (p.a == 1.0) return p.s == 0.0 ? 0.0 : (p.s > 0.0 ? kHalfPi : -kHalfPi);
  return std::atan(p.s / (2.0 * (p.a - 1.0)));
}

LogConcaveEnvelope make_envelope(const Pearson4Params& p) {
  validate(p);
  if (p.a <= 1.0) throw std::domain_error("make_envelope: requires a > 1");
  const double s_abs = std::fabs(p.s);
  LogConcaveEnvelope env;
  env.beta = s_abs / (2.0 * (p.a - 1.0));
  env.mode = std::atan(env.beta);
  env.log_delta = s_abs * env.mode - (p.a - 1.0) * detail::log1p_sq(env.beta);
  env.log_gamma = pearson4_log_norm(p.a, s_abs);
  env.bounds = pearson4_norm_bounds(p.a, s_abs);
  return env;
}

double sample_reject_student(RandomStream& stream, const Pearson4Params& p,
                             std::uint64_t* iterations) {
  validate(p);
  const double s_abs = std::fabs(p.s);
  for (std::uint64_t it = 1; it <= kIterationCap; ++it) {
    const double x = sample_student_scaled(stream, p.a);
    const double e = sample_exponential(stream);
    if (iterations) ++*iterations;
    if (-e + s_abs * kHalfPi <= s_abs * std::atan(x)) return p.s < 0.0 ? -x : x;
  }
  cap_exceeded("sample_reject_student");
}

double sample_skewed_cauchy(RandomStream& stream, double s, std::uint64_t* iterations) {
  if (!std::isfinite(s)) throw std::domain_error("sample_skewed_cauchy: requires finite s");
  if (iterations) ++*iterations;
  const double x = skewed_cauchy_core(stream, std::fabs(s));
  return s < 0.0 ? -x : x;
}

double sample_logconcave(RandomStream& stream, const Pearson4Params& p,
                         std::uint64_t* iterations) {
  return sample_logconcave(stream, p, make_envelope(p), iterations);
}

double sample_logconcave(RandomStream& stream, const Pearson4Params& p,
                         const LogConcaveEnvelope& env, std::uint64_t* iterations) {
  validate(p);
  if (p.a <= 1.0) throw std::domain_error("sample_logconcave: requires a > 1");
  const double x = sample_logconcave_core(stream, p.a, std::fabs(p.s), env, iterations);
  return p.s < 0.0 ? -x : x;
}

double sample_logconcave_gamma_free(RandomStream& stream, const Pearson4Params& p,
                                    std::uint64_t* iterations) {
  return sample_logconcave_gamma_free(stream, p, make_envelope(p), iterations);
}

double sample_logconcave_gamma_free(RandomStream& stream, const Pearson4Params& p,
                                    const LogConcaveEnvelope& env, std::uint64_t* iterations) {
  validate(p);
  if (p.a <= 1.0)
    throw std::domain_error("sample_logconcave_gamma_free: requires a > 1 (use the skewed Cauchy sampler at a = 1)");
  const double x = sample_gamma_free_core(stream, p.a, std::fabs(p.s), env, iterations);
  return p.s < 0.0 ? -x : x;
}

double sample_symmetrized(RandomStream& stream, const Pearson4Params& p,
                          std::uint64_t* iterations) {
  validate(p);
  const double s_abs = std::fabs(p.s);
  if (p.a > 1.0 || s_abs < 1.0)
    throw std::domain_error("sample_symmetrized: requires 1/2 < a <= 1 and |s| >= 1");
  const double x = sample_symmetrized_core(stream, p.a, s_abs, iterations);
  return p.s < 0.0 ? -x : x;
}

Pearson4Method route(const Pearson4Params& p) {
  validate(p);
  const double s_abs = std::fabs(p.s);
  if (s_abs == 0.0) return Pearson4Method::kStudentOneLiner;
  if (p.a == 1.0) return Pearson4Method::kSkewedCauchy;
  if (p.a > 1.0) return Pearson4Method::kGammaFree;
  return s_abs < 1.0 ? Pearson4Method::kStudentReject : Pearson4Method::kSymmetrized;
}

const char* method_name(Pearson4Method m) {
  switch (m) {
    case Pearson4Method::kStudentOneLiner: return "student-one-liner";
    case Pearson4Method::kSkewedCauchy: return "skewed-cauchy";
    case Pearson4Method::kGammaFree: return "gamma-free";
    case Pearson4Method::kStudentReject: return "student-reject";
    case Pearson4Method::kSymmetrized: return "symmetrized";
  }
  return "unknown";
}

double sample(RandomStream& stream, const Pearson4Params& p, std::uint64_t* iterations) {
  switch (route(p)) {
    case Pearson4Method::kStudentOneLiner:
      if (iterations) ++*iterations;
      return sample_student_scaled(stream, p.a);
    case Pearson4Method::kSkewedCauchy:
      return sample_skewed_cauchy(stream, p.s, iterations);
    case Pearson4Method::kGammaFree:
      return sample_logconcave_gamma_free(stream, p, iterations);
    case Pearson4Method::kStudentReject:
      return sample_reject_student(stream, p, iterations);
    case Pearson4Method::kSymmetrized:
      return sample_symmetrized(stream, p, iterations);
  }
  throw internal_error("sample: unreachable dispatch");
}

double theoretical_iteration_bound(Pearson4Method m, const Pearson4Params& p) {
  validate(p);
  const double s_abs = std::fabs(p.s);
  switch (m) {
    case Pearson4Method::kStudentOneLiner:
    case Pearson4Method::kSkewedCauchy:
      return 1.0;
    case Pearson4Method::kGammaFree: {
      const NormBounds nb = pearson4_norm_bounds(p.a, s_abs);
      const double log_gamma = pearson4_log_norm(p.a, s_abs);
      return 4.0 * std::exp(nb.log_gamma_hi + log_gamma - 2.0 * nb.log_gamma_lo);
    }
    case Pearson4Method::kStudentReject:
      return std::exp(s_abs * kHalfPi + pearson4_log_norm(p.a, s_abs) -
                      pearson4_log_norm(p.a, 0.0));
    case Pearson4Method::kSymmetrized: {
      // area of 2 gamma e^{s pi/2} (2/pi)^{2(a-1)} e^{-s z} z^{2(a-1)} over z > 0
      const double log_area = std::log(2.0) + pearson4_log_norm(p.a, s_abs) + s_abs * kHalfPi +
                              2.0 * (p.a - 1.0) * std::log(2.0 / kPi) +
                              log_gamma_real(2.0 * p.a - 1.0) -
                              (2.0 * p.a - 1.0) * std::log(s_abs);
      return std::exp(log_area);
    }
  }
  throw internal_error("theoretical_iteration_bound: unreachable");
}

}  // namespace rvg
