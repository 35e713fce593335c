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

#ifndef RVGEN_GHS_HPP
#define RVGEN_GHS_HPP

#include <cstddef>

#include "rvg/moments.hpp"
#include "rvg/random.hpp"

namespace rvg {

// Natural exponential family over the generalized hyperbolic secant law:
// lambda = 0 recovers the symmetric GHS density itself. Evaluation only; no
// sampler is provided for this family here.
struct GhsParams {
  double rho;     // convolution parameter, > 0
  double lambda;  // natural-parameter tilt
};

void validate(const GhsParams& g);

// ln f_rho(x) = (rho-2) ln 2 - ln pi - ln Gamma(rho) + 2 ln|Gamma((rho+ix)/2)|.
// Symmetric in x; finite for all finite x. Throws for rho <= 0.
double ghs_log_density(double rho, double x);

// ln of (1+lambda^2)^{-rho/2} e^{x arctan lambda} f_rho(x).
double nefghs_log_density(const GhsParams& g, double x);

// (rho * lambda, rho * (lambda^2 + 1)).
Moments nefghs_moments(const GhsParams& g);

struct MonteCarloEstimate {
  double estimate;
  double std_error;
};

// Monte Carlo evaluation of f_rho(x) through the cosine representation
//   f_rho(x) = (2^{rho-2} Gamma(rho/2)^2 / (pi Gamma(rho))) E[cos(x Z / 2)],
// Z = ln G - ln G' with G, G' independent gamma(rho/2). An evaluation route
// that never touches the complex gamma kernel, used to cross-check it.
// Requires n >= 1000.
MonteCarloEstimate cos_representation_estimate(RandomStream& stream, double rho, double x,
                                               std::size_t n);

}  // namespace rvg

#endif  // RVGEN_GHS_HPP
