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

#ifndef RVGEN_CONJUGATE_HPP
#define RVGEN_CONJUGATE_HPP

#include "rvg/moments.hpp"
#include "rvg/pearson4.hpp"

namespace rvg {

// Pearson IV prior for the NEF-GHS natural parameter: a prior mean mu0 and a
// prior sample size m0 >= 1. Moment formulas divide by m0 - 1, so the moment
// operations additionally require m0 > 1; sampling the prior does not.
struct PriorSpec {
  double m0;
  double mu0;
};

void validate(const PriorSpec& p);  // m0 >= 1, finite fields

// The prior (or posterior) as a Pearson IV law: a = m0/2 + 1, s = m0 * mu0.
Pearson4Params prior_to_pearson(const PriorSpec& p);

// Conjugate update after observing a sum y_sum over n_sum >= 1 trials:
// m1 = m0 + n_sum, mu1 = (m0 mu0 + y_sum) / (m0 + n_sum).
PriorSpec posterior_update(const PriorSpec& p, double y_sum, double n_sum);

// Prior mean mu0 and variance (mu0^2 + 1)/(m0 - 1); requires m0 > 1.
Moments prior_moments(const PriorSpec& p);

// Predictive marginal of a sum over n_sum trials: mean n mu0, variance
// n (mu0^2 + 1)(m0 + n)/(m0 - 1). Pass the updated spec for the posterior
// predictive. Requires m0 > 1.
Moments predictive_moments(const PriorSpec& p, double n_sum);

// Conditional law of one component given the total: mean, variance, and the
// scale of the pairwise covariances, cov(Y_i, Y_j) = -n_i n_j cov_scale.
struct ConditionalMoments {
  double mean;       // n_i * y_sum / n_sum
  double variance;   // n_i (n_sum - n_i)(ybar^2 + 1)/(n_sum + 1)
  double cov_scale;  // (ybar^2 + 1)/(n_sum + 1)
};

ConditionalMoments conditional_moments(double n_i, double n_sum, double y_sum);

}  // namespace rvg

#endif  // RVGEN_CONJUGATE_HPP
