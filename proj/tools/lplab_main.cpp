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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/io.hpp"
#include "lplab/verify.hpp"

namespace {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitUnbounded = 4;
constexpr int kExitCycleDetected = 5;
constexpr int kExitIterationLimit = 6;
constexpr int kExitBudgetExceeded = 7;
constexpr int kExitGenerationFailed = 8;
constexpr int kExitNoFeasibleBasis = 9;
constexpr int kExitVerifyFailed = 10;

int status_exit_code(lplab::SolveStatus status) {
  switch (status) {
    case lplab::SolveStatus::Optimal: return kExitOk;
    case lplab::SolveStatus::Unbounded: return kExitUnbounded;
    case lplab::SolveStatus::CycleDetected: return kExitCycleDetected;
    case lplab::SolveStatus::IterationLimit: return kExitIterationLimit;
  }
  return kExitInternal;
}

std::int64_t enumeration_budget(std::optional<std::int64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LPLAB_BUDGET")) return std::atoll(env);
  return lplab::kDefaultEnumerationBudget;
}

lplab::Basis starting_basis(const lplab::LpFile& file, lplab::PivotRule rule) {
  if (file.initial_basis) return lplab::Basis(*file.initial_basis);
  auto basis = lplab::phase_one(file.lp, rule);
  if (!basis) throw lplab::NoFeasibleBasisError(file.lp.name + " is infeasible");
  return *basis;
}

int run_solve(const std::string& path, const std::string& rule_text,
              std::optional<std::int64_t> max_iter, const std::string& on_cycle,
              const std::string& trace_path) {
  lplab::LpFile file = lplab::load_lp_file(path);
  lplab::PivotRule rule = lplab::parse_rule(rule_text);

  lplab::SolveOptions options;
  if (max_iter) options.max_iterations = *max_iter;
  options.on_cycle =
      on_cycle == "error" ? lplab::CyclePolicy::Error : lplab::CyclePolicy::BlandFallback;

  lplab::SolveResult result = lplab::solve(file.lp, starting_basis(file, rule), rule, options);
  if (!trace_path.empty())
    lplab::write_json_file(trace_path, lplab::trace_to_json(file.lp.name, rule, result));

  if (result.status == lplab::SolveStatus::Optimal)
    std::cout << "optimal z = " << lplab::format_rational(*result.z) << "\n";
  else
    std::cout << lplab::status_name(result.status) << "\n";
  std::cout << "iterations = " << result.iterations() << "\n"
            << "distinct BFS = " << result.distinct_bfs_count << "\n";
  return status_exit_code(result.status);
}

int run_enumerate(const std::string& path, std::optional<std::int64_t> budget,
                  const std::string& out_path) {
  lplab::LpFile file = lplab::load_lp_file(path);
  lplab::VertexCensus census = lplab::enumerate_vertices(file.lp, enumeration_budget(budget));
  if (!out_path.empty())
    lplab::write_json_file(out_path, lplab::census_to_json(file.lp.name, census));
  std::cout << "feasible bases = " << census.feasible_bases.size() << "\n"
            << "distinct vertices = " << census.distinct_vertices.size() << "\n"
            << "delta = " << lplab::format_rational(census.delta) << "\n"
            << "gamma = " << lplab::format_rational(census.gamma) << "\n"
            << "z* = " << lplab::format_rational(census.z_star) << "\n";
  return kExitOk;
}

int run_verify_cmd(const std::string& path, const std::string& rule_text,
                   std::optional<std::int64_t> budget, std::optional<std::int64_t> max_iter,
                   const std::string& out_path) {
  lplab::LpFile file = lplab::load_lp_file(path);
  lplab::VerifyOptions options;
  options.rule = lplab::parse_rule(rule_text);
  options.budget = enumeration_budget(budget);
  options.max_iterations = max_iter;

  lplab::VerifyReport report = lplab::run_verify(file, options);
  if (!out_path.empty()) lplab::write_json_file(out_path, lplab::report_to_json(report));

  for (const lplab::CheckResult& check : report.bounds.checks)
    std::cout << (check.pass ? "pass" : "FAIL") << "  " << check.name << "\n";
  std::cout << (report.overall_pass() ? "overall: pass" : "overall: FAIL") << "\n";
  return report.overall_pass() ? kExitOk : kExitVerifyFailed;
}

int run_generate(const std::string& kind, std::int64_t m, std::int64_t n,
                 const std::string& theta_text, std::int64_t nodes, std::int64_t arcs,
                 std::int64_t d, std::uint64_t seed, const std::string& out_path) {
  std::optional<lplab::LinearProgram> lp;
  lplab::InstanceMetadata metadata;
  metadata.kind = kind;
  if (kind == "mdp") {
    lplab::Rational theta = lplab::parse_rational(theta_text);
    lp = lplab::gen_mdp(m, theta, seed);
    metadata.theta = theta;
  } else if (kind == "tu") {
    lp = lplab::gen_tu_network(nodes, arcs, seed);
    metadata.b_l1 = lplab::l1_norm(lp->b);
  } else if (kind == "km") {
    lp = lplab::gen_klee_minty(d);
  } else if (kind == "random") {
    lp = lplab::gen_random_dense(m, n, seed);
  } else {
    throw lplab::ParseError("unknown generator kind: '" + kind + "'");
  }
  lplab::LpFile file{std::move(*lp), std::nullopt, std::move(metadata)};
  lplab::save_lp_file(out_path, file);
  std::cout << "wrote " << file.lp.name << " (m=" << file.lp.num_rows()
            << ", n=" << file.lp.num_cols() << ") to " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simplex laboratory: solve, enumerate, verify, generate"};
  app.require_subcommand(1);

  std::string path, rule_text = "dantzig", on_cycle = "bland-fallback";
  std::string trace_path, out_path;
  std::optional<std::int64_t> max_iter, budget;

  auto* solve_cmd = app.add_subcommand("solve", "run the simplex method on an instance file");
  solve_cmd->add_option("file", path)->required();
  solve_cmd->add_option("--rule", rule_text, "dantzig | best-improvement | bland");
  solve_cmd->add_option("--max-iter", max_iter);
  solve_cmd->add_option("--on-cycle", on_cycle, "error | bland-fallback");
  solve_cmd->add_option("--trace", trace_path, "write the full trace JSON here");

  auto* enum_cmd = app.add_subcommand("enumerate", "brute-force census of all bases");
  enum_cmd->add_option("file", path)->required();
  enum_cmd->add_option("--budget", budget, "max C(n,m); also env LPLAB_BUDGET");
  enum_cmd->add_option("--out", out_path, "write the census JSON here");

  auto* verify_cmd = app.add_subcommand("verify", "solve + enumerate + all bound checks");
  verify_cmd->add_option("file", path)->required();
  verify_cmd->add_option("--rule", rule_text);
  verify_cmd->add_option("--budget", budget);
  verify_cmd->add_option("--max-iter", max_iter);
  verify_cmd->add_option("--out", out_path, "write the report JSON here");

  std::string kind;
  std::int64_t m = 2, n = 4, nodes = 4, arcs = 6, d = 2;
  std::uint64_t seed = 1;
  std::string theta_text = "1/2";
  auto* gen_cmd = app.add_subcommand("generate", "emit an instance file");
  gen_cmd->add_option("kind", kind, "tu | mdp | km | random")->required();
  gen_cmd->add_option("--m", m);
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--theta", theta_text);
  gen_cmd->add_option("--nodes", nodes);
  gen_cmd->add_option("--arcs", arcs);
  gen_cmd->add_option("--d", d);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(path, rule_text, max_iter, on_cycle, trace_path);
    if (enum_cmd->parsed()) return run_enumerate(path, budget, out_path);
    if (verify_cmd->parsed()) return run_verify_cmd(path, rule_text, budget, max_iter, out_path);
    if (gen_cmd->parsed())
      return run_generate(kind, m, n, theta_text, nodes, arcs, d, seed, out_path);
  } catch (const lplab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lplab::RankDeficientError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kExitParse;
  } catch (const lplab::DimensionMismatchError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kExitParse;
  } catch (const lplab::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const lplab::NoFeasibleBasisError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitNoFeasibleBasis;
  } catch (const lplab::InfeasibleInitialBasisError& e) {
    std::cerr << "infeasible initial basis: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const lplab::GenerationFailedError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitGenerationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
