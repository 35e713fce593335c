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

#include "rvg/student.hpp"

#include <cmath>
#include <stdexcept>

namespace rvg {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sample_student_t(RandomStream& stream, double a) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::domain_error("sample_student_t: requires a > 0");
  const double u = next_uniform(stream);
  const double up = next_uniform(stream);
  // expm1 keeps U^{-2/a} - 1 accurate when a is large
  return std::sqrt(a) * std::sin(2.0 * kPi * up) * std::sqrt(std::expm1(-2.0 / a * std::log(u)));
}

double sample_cauchy(RandomStream& stream) {
  return std::tan(kPi * (next_uniform(stream) - 0.5));
}

double sample_t2(RandomStream& stream) {
  const double u = next_uniform(stream);
  return (2.0 * u - 1.0) / std::sqrt(2.0 * u * (1.0 - u));
}

double sample_student_scaled(RandomStream& stream, double a) {
  if (!(a > 0.5) || !std::isfinite(a))
    throw std::domain_error("sample_student_scaled: requires a > 1/2");
  const double dof = 2.0 * a - 1.0;
  return sample_student_t(stream, dof) / std::sqrt(dof);
}

}  // namespace rvg
