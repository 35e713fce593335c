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

#ifndef RVGEN_STUDENT_HPP
#define RVGEN_STUDENT_HPP

#include "rvg/random.hpp"

namespace rvg {

// Student-t(a), a > 0, by Bailey's polar one-liner
//   T_a = sqrt(a) sin(2 pi U') sqrt(U^{-2/a} - 1).
// Throws std::domain_error for a <= 0.
double sample_student_t(RandomStream& stream, double a);

// Standard Cauchy, T_1 = tan(pi (U - 1/2)).
double sample_cauchy(RandomStream& stream);

// Student-t(2) by inversion, T_2 = (2U - 1) / sqrt(2 U (1 - U)).
double sample_t2(RandomStream& stream);

// T_{2a-1} / sqrt(2a-1): density proportional to (1 + x^2)^{-a}. The
// symmetric Pearson IV subfamily; requires a > 1/2.
double sample_student_scaled(RandomStream& stream, double a);

}  // namespace rvg

#endif  // RVGEN_STUDENT_HPP
