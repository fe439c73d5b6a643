// Copyright 2026 lplab contributors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LPLAB_VERIFY_HPP
#define LPLAB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "lplab/bounds.hpp"
#include "lplab/io.hpp"

namespace lplab {

struct VerifyOptions {
  PivotRule rule = PivotRule::MostNegative;
  std::int64_t budget = kDefaultEnumerationBudget;
  std::optional<std::int64_t> max_iterations;  // default: 10x the Theorem-5 bound
};

/**
 * Full verdict for one instance: solve + census + every applicable bound
 * check, including solver/oracle agreement (and the TU matrix oracle on
 * "tu" instances). overall_pass iff every check passes.
 */
struct VerifyReport {
  std::string instance;
  PivotRule rule = PivotRule::MostNegative;
  SolveStatus status = SolveStatus::Optimal;
  Rational z_star;
  Rational delta;
  Rational gamma;
  BoundReport bounds;

  bool overall_pass() const { return bounds.all_pass(); }
};

VerifyReport run_verify(const LpFile& file, const VerifyOptions& options = {});

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace lplab

#endif  // LPLAB_VERIFY_HPP
