// Copyright 2026 The tfim-fidelity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TFIM_VERIFY_ACCEPTANCE_HPP
#define TFIM_VERIFY_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace tfim::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  double measured = 0.0;  // the worst-case quantity compared to the bound
  std::string bound;
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The acceptance criteria, in order. Each run() is self-contained.
std::vector<Criterion> acceptance_criteria();

/// Runs every criterion; a criterion that throws is reported as failed with
/// the exception text in the detail field.
std::vector<CriterionResult> run_acceptance();

CriterionResult run_criterion(const Criterion& criterion);

}  // namespace tfim::verify

#endif  // TFIM_VERIFY_ACCEPTANCE_HPP
