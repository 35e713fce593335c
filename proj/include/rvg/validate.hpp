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

#ifndef RVGEN_VALIDATE_HPP
#define RVGEN_VALIDATE_HPP

#include <string>
#include <vector>

namespace rvg {

// Statistical validation engine behind the `validate` CLI subcommand. Each
// check is deterministic (fixed seeds) with goodness-of-fit significance
// 1e-3 per test.
struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidateOptions {
  bool quick = false;  // reduce sample sizes roughly 5x
};

std::vector<CheckResult> validate_specfun(const ValidateOptions& opts = {});
std::vector<CheckResult> validate_pearson4(const ValidateOptions& opts = {});
std::vector<CheckResult> validate_betaized(const ValidateOptions& opts = {});
std::vector<CheckResult> validate_all(const ValidateOptions& opts = {});

}  // namespace rvg

#endif  // RVGEN_VALIDATE_HPP
