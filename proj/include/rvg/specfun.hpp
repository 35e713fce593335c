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

#ifndef RVGEN_SPECFUN_HPP
#define RVGEN_SPECFUN_HPP

namespace rvg {

// Two-sided bracket of the Pearson IV normalization constant, built from
// Batir's real-axis gamma bounds and Boyd's bound on the Stirling remainder.
// All three quantities are carried in the log domain; the linear fields are
// exp() of the logs and may underflow to zero for extreme skew (the log
// fields are always finite and are the authoritative values).
struct NormBounds {
  double log_gamma_star;  // central approximation
  double log_gamma_lo;    // guaranteed lower bound
  double log_gamma_hi;    // guaranteed upper bound
  double gamma_star;
  double gamma_lo;
  double gamma_hi;
};

// Output of boyd_factor_bounds: the squared magnitude of Gamma(x+iy) lies in
// [theta_lo * S^2, theta_hi * S^2] where log S = log_stirling_mag.
struct BoydFactors {
  double theta_lo;
  double theta_hi;
  double log_stirling_mag;
};

// ln Gamma(x) for real x > 0. Lanczos rational approximation (g = 7, 9
// coefficients) with a compensated dominant term; one upward recurrence
// shift for x < 1/2. Throws std::domain_error for non-finite or
// non-positive x.
double log_gamma_real(double x);

// ln |Gamma(x + iy)| for x >= 1/2 (the range used throughout this library;
// x < 1/2 throws std::domain_error). Same Lanczos kernel evaluated in
// complex arithmetic. Exactness caveat: this is an approximation with
// bounded floating-point error; the relative error of |Gamma| is below
// ~1e-13 over the validated grid, which is the precision budget the rest of
// the library inherits.
double log_abs_gamma_complex(double x, double y);

// ln |Gamma(x + iy)| for any x > 0. Arguments with x < 1/2 are lifted into
// the supported half-plane with one recurrence step
// |Gamma(z)| = |Gamma(z+1)| / |z|.
double log_abs_gamma_complex_shifted(double x, double y);

// Boyd's remainder bound around the Stirling magnitude term: requires x > 0
// and |x+iy| > 3/(2 pi^2) so theta_lo stays positive. Guarantees
//   ln theta_lo + 2 log_stirling_mag <= 2 ln|Gamma(x+iy)|
//                                    <= ln theta_hi + 2 log_stirling_mag.
BoydFactors boyd_factor_bounds(double x, double y);

// ln gamma(a, s): log of the Pearson IV normalization constant
//   gamma = |Gamma(a - i s/2)|^2 / (Gamma(a) Gamma(a - 1/2) Gamma(1/2)),
// for a > 1/2 (throws below). Even in s.
double pearson4_log_norm(double a, double s);

// Same constant through Legendre's duplication formula,
//   4^{a-1} |Gamma(a - i s/2)|^2 / (pi Gamma(2a - 1)).
// Kept as an independent route for consistency checks.
double pearson4_log_norm_duplication(double a, double s);

// Explicit bracket gamma_lo <= gamma(a, s) <= gamma_hi for a >= 1 (Batir's
// inequality needs x >= 1; throws below). The Batir upper constant is the
// literal 0.177 (a valid bound since e^2/(2 pi) - 1 < 0.177).
NormBounds pearson4_norm_bounds(double a, double s);

}  // namespace rvg

#endif  // RVGEN_SPECFUN_HPP
