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

#ifndef RVGEN_ORACLE_HPP
#define RVGEN_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rvg/random.hpp"

// Independent verification machinery. Nothing in this header calls the
// sampling code: integrals and CDF tables are built only from log-density
// evaluators, so they can serve as oracles for the samplers.

namespace rvg {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int initial_panels = 16;
  std::size_t max_panels = 400000;
};

// Adaptive Gauss-Kronrod (G7,K15) integral of a signed integrand over
// [lo, hi]. Throws oracle_error on non-convergence.
double quadrature_integrate_signed(const std::function<double(double)>& f, double lo, double hi,
                                   const QuadratureOptions& opts = {});

// Integral of exp(log_f) over [lo, hi], evaluated against an internal log
// offset so unnormalized integrands cannot overflow.
double quadrature_integrate(const std::function<double(double)>& log_f, double lo, double hi,
                            const QuadratureOptions& opts = {});

// ln of the integral of exp(log_f) over [lo, hi]; for integrals whose value
// itself overflows or underflows in double.
double log_quadrature_integrate(const std::function<double(double)>& log_f, double lo, double hi,
                                const QuadratureOptions& opts = {});

// Full-line variants: the domain is truncated where log_f has fallen 60 nats
// below its running peak, scanning outwards from `center` in units of
// `scale`.
double quadrature_integrate_line(const std::function<double(double)>& log_f, double center,
                                 double scale, const QuadratureOptions& opts = {});
double log_quadrature_integrate_line(const std::function<double(double)>& log_f, double center,
                                     double scale, const QuadratureOptions& opts = {});

// Monotone CDF table for the density exp(log_f) restricted to [lo, hi],
// normalized over that interval. Evaluation interpolates linearly between
// knots and clamps to [0, 1] outside.
struct NumericCdf {
  std::vector<double> knots;
  std::vector<double> values;  // values[i] = CDF(knots[i]); 0 at lo, 1 at hi
  double operator()(double x) const;
};

NumericCdf numeric_cdf(const std::function<double(double)>& log_f, double lo, double hi,
                       std::size_t cells = 4096, const QuadratureOptions& opts = {});

struct KsResult {
  double statistic;
  double pvalue;
};

// One-sample Kolmogorov-Smirnov against an arbitrary CDF evaluator, with the
// finite-n corrected asymptotic p-value. Refuses n < 100 (the asymptotic
// p-value is not trustworthy below that).
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

// One-sample KS where the reference CDF is computed by cumulative quadrature
// of exp(log_f) between consecutive order statistics. Slower than a CDF
// table but exact even for densities with integrable endpoint singularities.
KsResult ks_test_quadrature(std::vector<double> samples,
                            const std::function<double(double)>& log_f, double lo, double hi);

KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b);

// Tail probability of the Kolmogorov statistic with Stephens' finite-n
// correction; `effective_n` is n for one-sample tests and nm/(n+m) for
// two-sample tests.
double ks_asymptotic_pvalue(double statistic, double effective_n);

// Upper-tail p-value of a chi-square statistic (regularized incomplete
// gamma); used by the reciprocal-branch goodness-of-fit check.
double chi_square_pvalue(double statistic, int dof);

// Instrumented sampling run.
struct SampleReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string method;
  std::uint64_t total_iterations = 0;
  double mean_iterations = 0.0;
  double ks_statistic = -1.0;  // negative when no KS was run
  double ks_pvalue = -1.0;
  double sample_mean = 0.0;
  double sample_var = 0.0;
};

using InstrumentedSampler = std::function<double(RandomStream&, std::uint64_t*)>;

SampleReport measure_iterations(const std::string& method, const InstrumentedSampler& sampler,
                                std::size_t n, std::uint64_t seed);

// Same, additionally running a KS test of the sample against `cdf`.
SampleReport measure_iterations(const std::string& method, const InstrumentedSampler& sampler,
                                std::size_t n, std::uint64_t seed,
                                const std::function<double(double)>& cdf);

}  // namespace rvg

#endif  // RVGEN_ORACLE_HPP
