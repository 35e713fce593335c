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

#ifndef RVGEN_DETAIL_NUMERIC_HPP
#define RVGEN_DETAIL_NUMERIC_HPP

#include <cmath>

namespace rvg::detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = 1.57079632679489661923;

// log(1 + u^2) without overflow for large |u|.
inline double log1p_sq(double u) {
  u = std::fabs(u);
  return u < 1e8 ? std::log1p(u * u) : 2.0 * std::log(u);
}

// log(cosh(v)) without overflow.
inline double log_cosh(double v) {
  v = std::fabs(v);
  return v + std::log1p(std::exp(-2.0 * v)) - 0.6931471805599453094;
}

// log(1 / (1 + e^v)), stable for either sign of v.
inline double log_logistic(double v) {
  return v > 0.0 ? -v - std::log1p(std::exp(-v)) : -std::log1p(std::exp(v));
}

// 1 / (1 + e^v), stable for either sign of v.
inline double logistic_neg(double v) {
  if (v > 0.0) {
    const double e = std::exp(-v);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(v));
}

}  // namespace rvg::detail

#endif  // RVGEN_DETAIL_NUMERIC_HPP
