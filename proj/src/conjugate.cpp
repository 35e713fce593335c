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

#include "rvg/conjugate.hpp"

#include <cmath>
#include <stdexcept>

namespace rvg {

void validate(const PriorSpec& p) {
  if (!std::isfinite(p.m0) || !std::isfinite(p.mu0) || p.m0 < 1.0)
    throw std::domain_error("PriorSpec: requires finite m0 >= 1 and finite mu0");
}

Pearson4Params prior_to_pearson(const PriorSpec& p) {
  validate(p);
  return {0.5 * p.m0 + 1.0, p.m0 * p.mu0};
}

PriorSpec posterior_update(const PriorSpec& p, double y_sum, double n_sum) {
  validate(p);
  if (!std::isfinite(y_sum) || !std::isfinite(n_sum) || n_sum < 1.0)
    throw std::domain_error("posterior_update: requires finite y_sum and n_sum >= 1");
  const double m1 = p.m0 + n_sum;
  return {m1, (p.m0 * p.mu0 + y_sum) / m1};
}

Moments prior_moments(const PriorSpec& p) {
  validate(p);
  if (p.m0 <= 1.0)
    throw std::domain_error("prior_moments: variance requires m0 > 1");
  return {p.mu0, (p.mu0 * p.mu0 + 1.0) / (p.m0 - 1.0)};
}

Moments predictive_moments(const PriorSpec& p, double n_sum) {
  validate(p);
  if (p.m0 <= 1.0)
    throw std::domain_error("predictive_moments: variance requires m0 > 1");
  if (!std::isfinite(n_sum) || n_sum < 1.0)
    throw std::domain_error("predictive_moments: requires n_sum >= 1");
  return {n_sum * p.mu0, n_sum * (p.mu0 * p.mu0 + 1.0) * (p.m0 + n_sum) / (p.m0 - 1.0)};
}

ConditionalMoments conditional_moments(double n_i, double n_sum, double y_sum) {
  if (!std::isfinite(n_i) || !std::isfinite(n_sum) || !std::isfinite(y_sum) || n_i < 1.0 ||
      n_i >= n_sum)
    throw std::domain_error("conditional_moments: requires 1 <= n_i < n_sum");
  const double ybar = y_sum / n_sum;
  const double scale = (ybar * ybar + 1.0) / (n_sum + 1.0);
  return {n_i * ybar, n_i * (n_sum - n_i) * scale, scale};
}

}  // namespace rvg
