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

#include "rvg/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace rvg {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2 pi) / 2

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set). Valid for Re z >= 1/2
// after the shift below; relative error of Gamma is a few 1e-15 on the real
// axis and stays below ~1e-13 over the complex half-plane used here.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kLanczosG = 7.0;

// Exact product / sum splits, used to keep the dominant Stirling-like term
// of ln Gamma accurate to well under one ulp of the result. Matters for
// consistency checks that cancel two large log-gammas against each other.
inline void two_prod(double a, double b, double& hi, double& lo) {
  hi = a * b;
  lo = std::fma(a, b, -hi);
}

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double t = s - a;
  e = (a - (s - t)) + (b - t);
}

// ln Gamma(x) for x >= 1/2 via Lanczos.
double log_gamma_core(double x) {
  double acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
  const double t = x + kLanczosG - 0.5;
  // (x - 1/2) * ln t - t, compensated
  double p_hi, p_lo;
  two_prod(x - 0.5, std::log(t), p_hi, p_lo);
  double s, e;
  two_sum(p_hi, -t, s, e);
  return s + (kHalfLog2Pi + std::log(acc) + p_lo + e);
}

// ln |Gamma(x + iy)| for x >= 1/2 via the same kernel in complex arithmetic.
double log_abs_gamma_core(double x, double y) {
  std::complex<double> acc(kLanczos[0], 0.0);
  const std::complex<double> z(x, y);
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + std::complex<double>(k - 1.0, 0.0));
  const double tr = x + kLanczosG - 0.5;
  const double log_t = 0.5 * std::log(tr * tr + y * y);
  const double arg_t = std::atan2(y, tr);
  // Re[(z - 1/2) ln t] - Re t, compensated on the two large products
  double p1_hi, p1_lo, p2_hi, p2_lo;
  two_prod(x - 0.5, log_t, p1_hi, p1_lo);
  two_prod(y, arg_t, p2_hi, p2_lo);
  double s, e;
  two_sum(p1_hi, -tr, s, e);
  double s2, e2;
  two_sum(s, -p2_hi, s2, e2);
  return s2 + (kHalfLog2Pi + std::log(std::abs(acc)) + p1_lo - p2_lo + e + e2);
}

// log1p(u^2), safe for u large enough that u^2 overflows.
double log1p_sq(double u) {
  u = std::fabs(u);
  return u < 1e8 ? std::log1p(u * u) : 2.0 * std::log(u);
}

}  // namespace

double log_gamma_real(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma_real: requires finite x > 0");
  if (x < 0.5) return log_gamma_core(x + 1.0) - std::log(x);
  return log_gamma_core(x);
}

double log_abs_gamma_complex(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || x < 0.5)
    throw std::domain_error("log_abs_gamma_complex: requires finite x >= 1/2");
  return log_abs_gamma_core(x, y);
}

double log_abs_gamma_complex_shifted(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || x <= 0.0)
    throw std::domain_error("log_abs_gamma_complex_shifted: requires finite x > 0");
  if (x >= 0.5) return log_abs_gamma_core(x, y);
  return log_abs_gamma_core(x + 1.0, y) - 0.5 * std::log(x * x + y * y);
}

BoydFactors boyd_factor_bounds(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y) || x <= 0.0)
    throw std::domain_error("boyd_factor_bounds: requires finite x > 0");
  const double r = std::hypot(x, y);
  const double rem = 3.0 / (2.0 * kPi * kPi * r);
  if (rem >= 1.0)
    throw std::domain_error("boyd_factor_bounds: |z| too small, remainder bound exceeds 1");
  BoydFactors out;
  out.theta_lo = (1.0 - rem) * (1.0 - rem);
  out.theta_hi = (1.0 + rem) * (1.0 + rem);
  out.log_stirling_mag =
      0.5 * (std::log(2.0 * kPi) - std::log(r)) + x * (std::log(r) - 1.0) - y * std::atan(y / x);
  return out;
}

double pearson4_log_norm(double a, double s) {
  if (!std::isfinite(a) || !std::isfinite(s) || a <= 0.5)
    throw std::domain_error("pearson4_log_norm: requires a > 1/2");
  const double num = 2.0 * log_abs_gamma_complex_shifted(a, 0.5 * s);
  return num - log_gamma_real(a) - log_gamma_real(a - 0.5) - log_gamma_real(0.5);
}

double pearson4_log_norm_duplication(double a, double s) {
  if (!std::isfinite(a) || !std::isfinite(s) || a <= 0.5)
    throw std::domain_error("pearson4_log_norm_duplication: requires a > 1/2");
  const double num = 2.0 * log_abs_gamma_complex_shifted(a, 0.5 * s);
  return (a - 1.0) * std::log(4.0) + num - std::log(kPi) - log_gamma_real(2.0 * a - 1.0);
}

NormBounds pearson4_norm_bounds(double a, double s) {
  if (!std::isfinite(a) || !std::isfinite(s) || a < 1.0)
    throw std::domain_error("pearson4_norm_bounds: requires a >= 1");
  s = std::fabs(s);
  const double t = 3.0 / (2.0 * kPi * kPi * std::hypot(a, 0.5 * s));

  // central approximation gamma*
  const double log_star = std::log(a - 0.5) + (a - 0.5) * log1p_sq(s / (2.0 * a)) -
                          s * std::atan(s / (2.0 * a)) - 0.5 * std::log(kPi / std::exp(1.0)) -
                          a * std::log1p(1.0 / (2.0 * a)) - 0.5 * std::log(a);

  // Batir constant: 1/6 on the lower side, 0.177 on the upper side.
  const double batir_hi = 0.5 * (std::log1p(1.0 / (6.0 * a)) + std::log1p(1.0 / (6.0 * (a + 0.5))));
  const double batir_lo = 0.5 * (std::log1p(0.177 / a) + std::log1p(0.177 / (a + 0.5)));

  NormBounds out;
  out.log_gamma_star = log_star;
  out.log_gamma_hi = log_star + 2.0 * std::log1p(t) - batir_hi;
  out.log_gamma_lo = log_star + 2.0 * std::log1p(-t) - batir_lo;
  out.gamma_star = std::exp(out.log_gamma_star);
  out.gamma_hi = std::exp(out.log_gamma_hi);
  out.gamma_lo = std::exp(out.log_gamma_lo);
  return out;
}

}  // namespace rvg
