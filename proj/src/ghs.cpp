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

#include "rvg/ghs.hpp"

#include <cmath>
#include <stdexcept>

#include "rvg/detail/numeric.hpp"
#include "rvg/specfun.hpp"

namespace rvg {

void validate(const GhsParams& g) {
  if (!std::isfinite(g.rho) || !std::isfinite(g.lambda) || g.rho <= 0.0)
    throw std::domain_error("GhsParams: requires finite rho > 0 and finite lambda");
}

double ghs_log_density(double rho, double x) {
  if (!std::isfinite(rho) || rho <= 0.0)
    throw std::domain_error("ghs_log_density: requires rho > 0");
  // rho < 1 puts the real part below 1/2; the shifted evaluator handles it.
  return (rho - 2.0) * std::log(2.0) - std::log(detail::kPi) - log_gamma_real(rho) +
         2.0 * log_abs_gamma_complex_shifted(0.5 * rho, 0.5 * x);
}

double nefghs_log_density(const GhsParams& g, double x) {
  validate(g);
  return -0.5 * g.rho * std::log1p(g.lambda * g.lambda) + x * std::atan(g.lambda) +
         ghs_log_density(g.rho, x);
}

Moments nefghs_moments(const GhsParams& g) {
  validate(g);
  return {g.rho * g.lambda, g.rho * (g.lambda * g.lambda + 1.0)};
}

MonteCarloEstimate cos_representation_estimate(RandomStream& stream, double rho, double x,
                                               std::size_t n) {
  if (!std::isfinite(rho) || rho <= 0.0)
    throw std::domain_error("cos_representation_estimate: requires rho > 0");
  if (n < 1000) throw std::domain_error("cos_representation_estimate: requires n >= 1000");
  const double log_prefactor = (rho - 2.0) * std::log(2.0) + 2.0 * log_gamma_real(0.5 * rho) -
                               std::log(detail::kPi) - log_gamma_real(rho);
  const double prefactor = std::exp(log_prefactor);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = std::log(sample_gamma(stream, 0.5 * rho)) -
                     std::log(sample_gamma(stream, 0.5 * rho));
    const double c = std::cos(0.5 * x * z);
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
  MonteCarloEstimate out;
  out.estimate = prefactor * mean;
  out.std_error = prefactor * std::sqrt(var / static_cast<double>(n));
  return out;
}

}  // namespace rvg
