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

#include "rvg/betaized.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rvg/detail/numeric.hpp"
#include "rvg/errors.hpp"
#include "rvg/ghs.hpp"
#include "rvg/specfun.hpp"

namespace rvg {
namespace {

using detail::kPi;

constexpr std::uint64_t kIterationCap = 10'000'000;

[[noreturn]] void cap_exceeded(const char* where) {
  throw internal_error(std::string(where) + ": iteration cap exceeded (implementation bug)");
}

inline double ghs_const(double rho) {
  return (rho - 2.0) * std::log(2.0) - std::log(kPi) - log_gamma_real(rho);
}

}  // namespace

void validate(const BetaizedParams& p, bool allow_shape_below_one) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.s) || p.a <= 0.0 ||
      p.b <= 0.0)
    throw std::domain_error("BetaizedParams: requires finite a > 0, b > 0 and finite s");
  if (!allow_shape_below_one && std::min(p.a, p.b) < 1.0)
    throw std::domain_error("BetaizedParams: requires min(a,b) >= 1");
}

Moments moments(const BetaizedParams& p) {
  validate(p, /*allow_shape_below_one=*/true);
  const double n = p.a + p.b;
  return {p.a / n * p.s, p.a * p.b / (n * n) * (p.s * p.s + n * n) / (1.0 + n)};
}

SandwichConstants sandwich_constants(const BetaizedParams& p) {
  validate(p);
  SandwichConstants c;
  const double da = 3.0 / (p.a * kPi * kPi), db = 3.0 / (p.b * kPi * kPi);
  c.alpha = (1.0 - da) * (1.0 - da) * (1.0 - db) * (1.0 - db);
  c.beta = (1.0 + da) * (1.0 + da) * (1.0 + db) * (1.0 + db);
  c.A = c.beta * c.beta;
  const double root = std::sqrt(12.0 + 12.0 / (c.alpha * c.alpha));
  c.B = 1.5 + 1.0 / root;
  c.C = c.alpha / root;
  const Moments m = moments(p);
  c.mu = m.mean;
  c.sigma = std::sqrt(m.variance);
  c.eta = c.sigma / c.alpha * (1.0 + std::sqrt(3.0 * (1.0 + 1.0 / (c.alpha * c.alpha))));
  c.tau = c.alpha / (c.sigma * root);
  c.tau_prime = c.beta / c.sigma;
  return c;
}

BetaizedDensity::BetaizedDensity(const BetaizedParams& p, bool allow_shape_below_one) : p_(p) {
  validate(p, allow_shape_below_one);
  const_a_ = ghs_const(p.a);
  const_b_ = ghs_const(p.b);
  log_denom_ = ghs_log_density(p.a + p.b, p.s);
}

double BetaizedDensity::operator()(double x) const {
  const double ta = const_a_ + 2.0 * log_abs_gamma_complex_shifted(0.5 * p_.a, 0.5 * x);
  const double tb = const_b_ + 2.0 * log_abs_gamma_complex_shifted(0.5 * p_.b, 0.5 * (p_.s - x));
  return ta + tb - log_denom_;
}

double log_density(const BetaizedParams& p, double x, bool allow_shape_below_one) {
  return BetaizedDensity(p, allow_shape_below_one)(x);
}

double log_surrogate_g(const BetaizedParams& p, double x) {
  validate(p);
  const double log_gamma_g = log_gamma_real(p.a + p.b) + std::log(kPi) - (p.a + p.b) -
                             log_gamma_real(p.a) - log_gamma_real(p.b) -
                             2.0 * log_abs_gamma_complex_shifted(0.5 * (p.a + p.b), 0.5 * p.s);
  const double ra = 0.25 * (p.a * p.a + x * x);
  const double rb = 0.25 * (p.b * p.b + (p.s - x) * (p.s - x));
  return log_gamma_g + 0.5 * (p.a - 1.0) * std::log(ra) + 0.5 * (p.b - 1.0) * std::log(rb) -
         x * std::atan(x / p.a) - (p.s - x) * std::atan((p.s - x) / p.b);
}

double sample_lemma2(RandomStream& stream, const BetaizedParams& p, std::uint64_t* iterations) {
  return sample_lemma2(stream, sandwich_constants(p), BetaizedDensity(p), iterations);
}

double sample_lemma2(RandomStream& stream, const SandwichConstants& c, const BetaizedDensity& f,
                     std::uint64_t* iterations) {
  const double log_height = std::log(c.A) - std::log(c.sigma);
  const double core_prob = c.B / (1.0 + c.B);
  const double scale = c.sigma / c.C;
  for (std::uint64_t it = 1; it <= kIterationCap; ++it) {
    double x;
    if (next_uniform(stream) <= core_prob) {
      x = c.mu + c.B * (2.0 * next_uniform(stream) - 1.0) * scale;
    } else {
      x = c.mu + sample_sign(stream) * (c.B + sample_exponential(stream)) * scale;
    }
    const double u = next_uniform(stream);
    if (iterations) ++*iterations;
    const double log_envelope =
        std::log(u) + log_height + std::min(0.0, c.B - c.C * std::fabs(x - c.mu) / c.sigma);
    if (log_envelope <= f(x)) return x;
  }
  cap_exceeded("sample_lemma2");
}

double sample_lemma3(RandomStream& stream, const BetaizedParams& p, std::uint64_t* iterations) {
  return sample_lemma3(stream, sandwich_constants(p), BetaizedDensity(p), iterations);
}

double sample_lemma3(RandomStream& stream, const SandwichConstants& c, const BetaizedDensity& f,
                     std::uint64_t* iterations) {
  const double q1 = c.beta * (1.0 + c.tau_prime * c.eta);
  const double q2 = c.beta * std::log(c.tau_prime / c.tau);
  const double q3 = c.beta;
  const double q = q1 + q2 + q3;
  const double log_beta = std::log(c.beta);
  const double log_tau = std::log(c.tau);
  const double log_tau_prime = std::log(c.tau_prime);
  for (std::uint64_t it = 1; it <= kIterationCap; ++it) {
    const double u = next_uniform(stream);
    const double v = next_uniform(stream);
    if (iterations) ++*iterations;
    double x, log_envelope;
    if (v <= q1 / q) {
      // flat core of half-width eta + 1/tau'
      x = c.mu + (2.0 * next_uniform(stream) - 1.0) * (c.eta + 1.0 / c.tau_prime);
      log_envelope = std::log(u) + log_beta + log_tau_prime;
    } else if (v <= (q1 + q2) / q) {
      // reciprocal middle: offset log-uniform on [1/tau', 1/tau]
      const double vp = next_uniform(stream);
      const double y = std::exp(-((1.0 - vp) * log_tau_prime + vp * log_tau));
      x = c.mu + sample_sign(stream) * (c.eta + y);
      log_envelope = std::log(u) + log_beta - std::log(y);
    } else {
      // exponential tails beyond eta + 1/tau
      const double e = sample_exponential(stream);
      x = c.mu + sample_sign(stream) * (c.eta + (1.0 + e) / c.tau);
      log_envelope = std::log(u) + log_beta + log_tau - e;
    }
    if (log_envelope <= f(x)) return x;
  }
  cap_exceeded("sample_lemma3");
}

double lemma2_iteration_bound(const SandwichConstants& c) {
  return 2.0 * (1.0 + c.B) * c.A / c.C;
}

double lemma3_iteration_bound(const SandwichConstants& c) {
  const double q1 = c.beta * (1.0 + c.tau_prime * c.eta);
  const double q2 = c.beta * std::log(c.tau_prime / c.tau);
  const double q3 = c.beta;
  return 2.0 * (q1 + q2 + q3);
}

namespace detail {

double lemma3_middle_offset(RandomStream& stream, const SandwichConstants& c) {
  const double vp = next_uniform(stream);
  return std::exp(-((1.0 - vp) * std::log(c.tau_prime) + vp * std::log(c.tau)));
}

}  // namespace detail

}  // namespace rvg
