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

#ifndef RVGEN_ERRORS_HPP
#define RVGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rvg {

// Thrown when an internal invariant is violated (e.g. a rejection loop hits
// its iteration cap). Unlike std::domain_error this always indicates a bug
// in the library, never bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown by the verification harness when an oracle computation (quadrature,
// CDF table) fails to converge. Distinct from library errors so test
// infrastructure failures are never mistaken for sampler defects.
class oracle_error : public std::runtime_error {
 public:
  explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rvg

#endif  // RVGEN_ERRORS_HPP
