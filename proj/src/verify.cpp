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

#include "lplab/verify.hpp"

#include <utility>

#include "lplab/errors.hpp"
#include "lplab/generators.hpp"

namespace lplab {

using nlohmann::json;

VerifyReport run_verify(const LpFile& file, const VerifyOptions& options) {
  const LinearProgram& lp = file.lp;

  VertexCensus census = enumerate_vertices(lp, options.budget);
  DualCertificate dual = certify_optimal(lp, census);

  Basis start = [&] {
    if (file.initial_basis) return Basis(*file.initial_basis);
    auto found = phase_one(lp, options.rule);
    if (!found) throw NoFeasibleBasisError(lp.name);  // census would have thrown already
    return *found;
  }();

  std::optional<Rational> b_l1 = file.metadata.b_l1;
  if (file.metadata.kind == "tu" && !b_l1) b_l1 = l1_norm(lp.b);

  SolveOptions solve_options;
  solve_options.max_iterations = options.max_iterations.value_or(
      10 * theorem5_bound(static_cast<std::int64_t>(lp.num_rows()),
                          static_cast<std::int64_t>(lp.num_cols()), census.delta, census.gamma));
  SolveResult result = solve(lp, start, options.rule, solve_options);

  BoundInputs inputs = gather_bound_inputs(lp, census, result, b_l1, file.metadata.theta);
  BoundReport bounds = evaluate_bounds(lp, census, result, dual, inputs);

  // Oracle agreement: the solve must land exactly on the census optimum.
  CheckResult agreement{"solver_census_agreement"};
  agreement.checked = 1;
  if (result.status != SolveStatus::Optimal) {
    agreement.pass = false;
    agreement.witnesses.push_back("solve status " + status_name(result.status));
  } else if (*result.z != census.z_star) {
    agreement.pass = false;
    agreement.witnesses.push_back("solver z = " + format_rational(*result.z) +
                                  " != census z* = " + format_rational(census.z_star));
  }
  bounds.checks.push_back(std::move(agreement));

  if (file.metadata.kind == "tu") {
    CheckResult tu_matrix{"tu_matrix_totally_unimodular"};
    try {
      tu_matrix.checked = 1;
      if (!is_totally_unimodular(lp.a)) {
        tu_matrix.pass = false;
        tu_matrix.witnesses.push_back("a square submatrix has |det| > 1");
      }
    } catch (const BudgetExceededError&) {
      tu_matrix.checked = 0;
      tu_matrix.skipped = 1;
    }
    bounds.checks.push_back(std::move(tu_matrix));
  }

  VerifyReport report;
  report.instance = lp.name;
  report.rule = options.rule;
  report.status = result.status;
  report.z_star = census.z_star;
  report.delta = census.delta;
  report.gamma = census.gamma;
  report.bounds = std::move(bounds);
  return report;
}

json report_to_json(const VerifyReport& report) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["instance"] = report.instance;
  doc["rule"] = rule_name(report.rule);
  doc["status"] = status_name(report.status);
  doc["z_star"] = format_rational(report.z_star);
  doc["delta"] = format_rational(report.delta);
  doc["gamma"] = format_rational(report.gamma);
  doc["theorem5_bound"] = report.bounds.theorem5;
  doc["corollary3_bound"] = report.bounds.corollary3 ? json(*report.bounds.corollary3) : json(nullptr);
  doc["tu_bound"] = report.bounds.tu ? json(*report.bounds.tu) : json(nullptr);
  doc["mdp_bound"] = report.bounds.mdp ? json(*report.bounds.mdp) : json(nullptr);
  doc["observed_distinct_bfs"] = report.bounds.observed_distinct_bfs;
  doc["observed_iterations"] = report.bounds.observed_iterations;
  json checks = json::array();
  for (const CheckResult& check : report.bounds.checks) {
    json item;
    item["name"] = check.name;
    item["pass"] = check.pass;
    item["checked"] = check.checked;
    item["skipped"] = check.skipped;
    item["witnesses"] = check.witnesses;
    checks.push_back(std::move(item));
  }
  doc["checks"] = std::move(checks);
  doc["overall_pass"] = report.overall_pass();
  return doc;
}

}  // namespace lplab
