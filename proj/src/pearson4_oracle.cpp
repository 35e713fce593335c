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

#include "rvg/pearson4_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rvg/detail/numeric.hpp"
#include "rvg/errors.hpp"

namespace rvg {
namespace {

using detail::kHalfPi;

constexpr double kEndCut = 0.15;  // width of the transformed endpoint pieces

// ln(sin z / z), stable near zero.
inline double log_sinc(double z) {
  return z < 1e-8 ? -z * z / 6.0 : std::log(std::sin(z)) - std::log(z);
}

struct AngularDensity {
  double a, s, log_gamma;
  explicit AngularDensity(const Pearson4Params& p)
      : a(p.a), s(p.s), log_gamma(pearson4_log_norm(p.a, p.s)) {}
  double operator()(double y) const {
    if (std::fabs(y) >= kHalfPi) return -std::numeric_limits<double>::infinity();
    return log_gamma + s * y + 2.0 * (a - 1.0) * std::log(std::cos(y));
  }
};

// Endpoint piece for a < 1 in the power coordinate u = z^{2a-1}, where
// z = pi/2 - y (right end) or z = y + pi/2 (left end). The substitution
// cancels the z^{2a-2} singularity exactly, leaving the bounded integrand
//   w(u) = (gamma / (2a-1)) e^{s y(z)} (sin z / z)^{2a-2}.
// `moment` multiplies by y(z) for mean integrals.
double end_integral(const AngularDensity& h, bool right_end, double z_lo, double z_hi,
                    int moment) {
  if (!(z_lo < z_hi)) return 0.0;
  const double p = 2.0 * h.a - 1.0;
  const double inv_p = 1.0 / p;
  const auto integrand = [&](double u) {
    const double z = std::pow(u, inv_p);
    const double y = right_end ? kHalfPi - z : z - kHalfPi;
    const double log_w = h.log_gamma - std::log(p) + h.s * y + 2.0 * (h.a - 1.0) * log_sinc(z);
    const double w = std::exp(log_w);
    return moment ? y * w : w;
  };
  return quadrature_integrate_signed(integrand, std::pow(z_lo, p), std::pow(z_hi, p));
}

// Shared worker for mass (moment = 0) and angular mean (moment = 1).
double angular_integral(const Pearson4Params& p, double y_lo, double y_hi, int moment) {
  validate(p);
  y_lo = std::max(y_lo, -kHalfPi);
  y_hi = std::min(y_hi, kHalfPi);
  if (!(y_lo < y_hi)) return 0.0;
  const AngularDensity h(p);

  QuadratureOptions opts;
  opts.abs_tol = 1e-11;
  opts.rel_tol = 1e-11;
  // dense enough that a spike of width ~1/sqrt(2a) is seen by the initial
  // pass even at a = 1e4
  opts.initial_panels = 512;

  const auto mid_integrand = [&](double y) {
    const double w = std::exp(h(y));
    return moment ? y * w : w;
  };

  if (p.a >= 1.0)
    return quadrature_integrate_signed(mid_integrand, y_lo, y_hi, opts);

  const double left_cut = -kHalfPi + kEndCut;
  const double right_cut = kHalfPi - kEndCut;
  double total = 0.0;
  if (y_lo < left_cut)
    total += end_integral(h, /*right_end=*/false, y_lo + kHalfPi, std::min(y_hi, left_cut) + kHalfPi,
                          moment);
  const double mid_lo = std::max(y_lo, left_cut);
  const double mid_hi = std::min(y_hi, right_cut);
  if (mid_lo < mid_hi) total += quadrature_integrate_signed(mid_integrand, mid_lo, mid_hi, opts);
  if (y_hi > right_cut)
    total += end_integral(h, /*right_end=*/true, kHalfPi - y_hi,
                          kHalfPi - std::max(y_lo, right_cut), moment);
  return total;
}

}  // namespace

double pearson4_angular_mass(const Pearson4Params& p, double y_lo, double y_hi) {
  return angular_integral(p, y_lo, y_hi, 0);
}

double pearson4_normalization(const Pearson4Params& p) {
  return angular_integral(p, -kHalfPi, kHalfPi, 0);
}

double pearson4_angular_mean(const Pearson4Params& p) {
  return angular_integral(p, -kHalfPi, kHalfPi, 1);
}

KsResult pearson4_ks(const std::vector<double>& samples, const Pearson4Params& p) {
  validate(p);
  if (samples.size() < 100) throw oracle_error("pearson4_ks: need at least 100 samples");
  std::vector<double> angles(samples.size());
  std::transform(samples.begin(), samples.end(), angles.begin(),
                 [](double x) { return std::atan(x); });
  std::sort(angles.begin(), angles.end());

  const AngularDensity h(p);
  if (p.a >= 1.0)
    return ks_test_quadrature(std::move(angles), [&](double y) { return h(y); }, -kHalfPi,
                              kHalfPi);

  // a < 1: endpoint pieces in the power coordinate, interior gaps directly.
  const auto f = [&](double y) { return std::exp(h(y)); };
  std::vector<double> cum(angles.size());
  double acc = pearson4_angular_mass(p, -kHalfPi, angles.front());
  cum[0] = acc;
  for (std::size_t i = 1; i < angles.size(); ++i) {
    if (angles[i] > angles[i - 1])
      acc += quadrature_integrate_signed(f, angles[i - 1], angles[i],
                                         {1e-13, 1e-6, 1, 4000});
    cum[i] = acc;
  }
  const double total = acc + pearson4_angular_mass(p, angles.back(), kHalfPi);
  if (!(total > 0.0)) throw oracle_error("pearson4_ks: zero total mass");

  const double n = static_cast<double>(angles.size());
  double d = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double fi = cum[i] / total;
    d = std::max(d, std::max((i + 1) / n - fi, fi - i / n));
  }
  return {d, ks_asymptotic_pvalue(d, n)};
}

}  // namespace rvg
