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

#ifndef RVGEN_PEARSON4_ORACLE_HPP
#define RVGEN_PEARSON4_ORACLE_HPP

#include <vector>

#include "rvg/oracle.hpp"
#include "rvg/pearson4.hpp"

namespace rvg {

// Quadrature oracles specialized to the Pearson IV angular geometry. The
// full-line density is mapped to the bounded angle y = arctan(x); for a < 1
// the angular density has integrable (cos y)^{2a-2} singularities at +-pi/2
// whose local mass is invisible to quadrature in the y coordinate (a
// non-negligible fraction of it sits within one ulp of pi/2), so the
// endpoint pieces are integrated in the power coordinate u = z^{2a-1},
// z = pi/2 - |y|, where the integrand is bounded and smooth.

// Mass of the angular density h on [y_lo, y_hi] within [-pi/2, pi/2].
double pearson4_angular_mass(const Pearson4Params& p, double y_lo, double y_hi);

// Integral of f over the whole real line (equals 1 up to kernel error).
double pearson4_normalization(const Pearson4Params& p);

// Mean of the angular variable arctan(X), by signed quadrature.
double pearson4_angular_mean(const Pearson4Params& p);

// One-sample KS test of Pearson IV draws (in x space) against the exact
// angular CDF computed by cumulative quadrature.
KsResult pearson4_ks(const std::vector<double>& samples, const Pearson4Params& p);

}  // namespace rvg

#endif  // RVGEN_PEARSON4_ORACLE_HPP
