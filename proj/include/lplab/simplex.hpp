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

#ifndef LPLAB_SIMPLEX_HPP
#define LPLAB_SIMPLEX_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lplab/basis.hpp"
#include "lplab/lp.hpp"

namespace lplab {

enum class PivotRule {
  MostNegative,     // entering = most negative reduced cost, ties by lowest index
  BestImprovement,  // entering = smallest next objective; ties by most negative
                    // reduced cost, then lowest index
  Bland,            // entering = lowest improving index (anti-cycling)
};

enum class CyclePolicy { Error, BlandFallback };

enum class SolveStatus { Optimal, Unbounded, CycleDetected, IterationLimit };

struct SolveOptions {
  std::int64_t max_iterations = 1'000'000;
  CyclePolicy on_cycle = CyclePolicy::BlandFallback;
};

/**
 * One row of the solve trace. State fields (basis, x, objective,
 * reduced_costs, delta) describe iterate t. Pivot fields (entering, leaving,
 * step, degenerate_pivot, arrived_by) describe the pivot that PRODUCED this
 * iterate and are absent at t = 0, so within a record:
 * degenerate_pivot <=> step = 0 <=> new_bfs = false (for t >= 1).
 *
 * delta is -min reduced cost, recorded for every rule (the bound checks need
 * it even under best improvement) and absent exactly at optimal iterates.
 */
struct IterateRecord {
  std::int64_t t;
  Basis basis;
  std::vector<Rational> x;
  Rational objective;
  std::map<int, Rational> reduced_costs;
  std::optional<Rational> delta;
  std::optional<int> entering;
  std::optional<int> leaving;
  std::optional<Rational> step;
  bool degenerate_pivot = false;
  bool new_bfs = true;
  std::optional<PivotRule> arrived_by;
};

struct SolveResult {
  SolveStatus status;
  std::vector<IterateRecord> trace;
  std::optional<Basis> optimal_basis;
  std::optional<std::vector<Rational>> optimal_x;
  std::optional<Rational> z;
  std::int64_t distinct_bfs_count = 0;

  /** Number of pivots taken (the trace also holds iterate 0). */
  std::int64_t iterations() const { return static_cast<std::int64_t>(trace.size()) - 1; }
};

struct RatioTestResult {
  bool unbounded = false;
  int leaving = -1;   // variable index, ties broken by lowest variable index
  Rational step = 0;  // value taken by the entering variable
};

/**
 * Dantzig's rule: (argmin_j reduced cost, Delta = -that cost) over columns
 * with negative reduced cost, lowest index on ties; nullopt iff all reduced
 * costs are nonnegative (optimality).
 */
std::optional<std::pair<int, Rational>> dantzig_entering(const std::map<int, Rational>& rc);

/**
 * Exact ratio test along the entering column: step = min x_Bi / d_i over
 * d_i > 0 for direction d = A_B^{-1} a_entering; unbounded iff d <= 0.
 */
RatioTestResult ratio_test(const LinearProgram& lp, const Basis& basis,
                           const std::vector<Rational>& x, int entering);

/**
 * Best-improvement rule: maximizes the exact objective decrease
 * (-rc_j) * step_j over improving columns. An unbounded candidate wins
 * outright (the caller then reports Unbounded). With every improving step 0,
 * the tie-break reduces to the most-negative choice.
 */
std::optional<int> best_improvement_entering(const LinearProgram& lp, const Basis& basis,
                                             const std::vector<Rational>& x,
                                             const std::map<int, Rational>& rc);

/**
 * Primal simplex from a feasible basis. Cycle detection: a basis revisited
 * since the last strict objective decrease. CyclePolicy::BlandFallback
 * switches to Bland's rule on detection and reverts after the next strict
 * decrease; CyclePolicy::Error stops with SolveStatus::CycleDetected.
 * Throws InfeasibleInitialBasisError / SingularBasisError on corrupt input.
 */
SolveResult solve(const LinearProgram& lp, const Basis& initial_basis, PivotRule rule,
                  const SolveOptions& options = {});

/**
 * Auxiliary-variable Phase I. Returns a feasible basis of lp, or nullopt if
 * the program is infeasible. When the (row-sign normalized) matrix embeds an
 * identity under b >= 0, that basis is returned without pivoting.
 */
std::optional<Basis> phase_one(const LinearProgram& lp, PivotRule rule = PivotRule::MostNegative);

}  // namespace lplab

#endif  // LPLAB_SIMPLEX_HPP
