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

#include "lplab/simplex.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "lplab/errors.hpp"

namespace lplab {

std::optional<std::pair<int, Rational>> dantzig_entering(const std::map<int, Rational>& rc) {
  std::optional<std::pair<int, Rational>> best;
  for (const auto& [j, cost] : rc) {  // ascending j, so first strict minimum wins ties
    if (cost >= 0) continue;
    if (!best || cost < best->second) best = {j, cost};
  }
  if (!best) return std::nullopt;
  return std::make_pair(best->first, Rational(-best->second));
}

RatioTestResult ratio_test(const LinearProgram& lp, const Basis& basis,
                           const std::vector<Rational>& x, int entering) {
  auto direction = solve_square(basis_matrix(lp, basis), lp.a.column(static_cast<std::size_t>(entering)));
  if (!direction) throw SingularBasisError();

  RatioTestResult result;
  result.unbounded = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Rational& d = (*direction)[k];
    if (d <= 0) continue;
    int var = basis.indices()[k];
    Rational ratio = x[static_cast<std::size_t>(var)] / d;
    if (result.unbounded || ratio < result.step ||
        (ratio == result.step && var < result.leaving)) {
      result.unbounded = false;
      result.step = ratio;
      result.leaving = var;
    }
  }
  return result;
}

std::optional<int> best_improvement_entering(const LinearProgram& lp, const Basis& basis,
                                             const std::vector<Rational>& x,
                                             const std::map<int, Rational>& rc) {
  // (decrease, reduced cost, index); unbounded candidates tracked separately
  // and dominate every bounded one.
  std::optional<int> best;
  Rational best_decrease = 0, best_cost = 0;
  std::optional<int> best_unbounded;
  Rational best_unbounded_cost = 0;

  for (const auto& [j, cost] : rc) {
    if (cost >= 0) continue;
    RatioTestResult ratio = ratio_test(lp, basis, x, j);
    if (ratio.unbounded) {
      if (!best_unbounded || cost < best_unbounded_cost) {
        best_unbounded = j;
        best_unbounded_cost = cost;
      }
      continue;
    }
    Rational decrease = -cost * ratio.step;
    if (!best || decrease > best_decrease || (decrease == best_decrease && cost < best_cost)) {
      best = j;
      best_decrease = decrease;
      best_cost = cost;
    }
  }
  if (best_unbounded) return best_unbounded;
  return best;
}

namespace {

std::optional<int> bland_entering(const std::map<int, Rational>& rc) {
  for (const auto& [j, cost] : rc)
    if (cost < 0) return j;
  return std::nullopt;
}

int choose_entering(const LinearProgram& lp, const Basis& basis, const std::vector<Rational>& x,
                    const std::map<int, Rational>& rc, PivotRule rule) {
  switch (rule) {
    case PivotRule::MostNegative:
      return dantzig_entering(rc)->first;
    case PivotRule::BestImprovement:
      return *best_improvement_entering(lp, basis, x, rc);
    case PivotRule::Bland:
      return *bland_entering(rc);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SolveResult solve(const LinearProgram& lp, const Basis& initial_basis, PivotRule rule,
                  const SolveOptions& options) {
  BasicSolution current = basis_solve(lp, initial_basis);
  if (!current.feasible) throw InfeasibleInitialBasisError();

  SolveResult result;
  std::set<std::vector<Rational>> distinct_x;
  std::set<std::vector<int>> bases_since_decrease = {initial_basis.indices()};
  bool bland_active = false;

  // Pivot fields of the record under construction (the move into iterate t).
  std::optional<int> in_entering, in_leaving;
  std::optional<Rational> in_step;
  bool in_degenerate = false, in_new_bfs = true;
  std::optional<PivotRule> in_rule;

  for (std::int64_t t = 0;; ++t) {
    std::map<int, Rational> rc = reduced_costs(lp, current.basis);
    auto dantzig = dantzig_entering(rc);

    IterateRecord rec{t,
                      current.basis,
                      current.x,
                      current.objective,
                      rc,
                      dantzig ? std::optional<Rational>(dantzig->second) : std::nullopt,
                      in_entering,
                      in_leaving,
                      in_step,
                      in_degenerate,
                      in_new_bfs,
                      in_rule};
    distinct_x.insert(current.x);
    result.trace.push_back(std::move(rec));

    if (!dantzig) {
      result.status = SolveStatus::Optimal;
      result.optimal_basis = current.basis;
      result.optimal_x = current.x;
      result.z = current.objective;
      break;
    }
    if (t >= options.max_iterations) {
      result.status = SolveStatus::IterationLimit;
      break;
    }

    PivotRule active = bland_active ? PivotRule::Bland : rule;
    int entering = choose_entering(lp, current.basis, current.x, rc, active);
    RatioTestResult ratio = ratio_test(lp, current.basis, current.x, entering);
    if (ratio.unbounded) {
      result.status = SolveStatus::Unbounded;
      break;
    }
    Basis next_basis = current.basis.replaced(ratio.leaving, entering);

    if (!bland_active && bases_since_decrease.contains(next_basis.indices())) {
      if (options.on_cycle == CyclePolicy::Error) {
        result.status = SolveStatus::CycleDetected;
        break;
      }
      // Bland's rule cannot cycle, so detection is off while it is active.
      bland_active = true;
      active = PivotRule::Bland;
      entering = choose_entering(lp, current.basis, current.x, rc, active);
      ratio = ratio_test(lp, current.basis, current.x, entering);
      if (ratio.unbounded) {
        result.status = SolveStatus::Unbounded;
        break;
      }
      next_basis = current.basis.replaced(ratio.leaving, entering);
    }

    BasicSolution next = basis_solve(lp, next_basis);
    if (next.objective < current.objective) {
      bases_since_decrease.clear();
      bland_active = false;
    }
    bases_since_decrease.insert(next_basis.indices());

    in_entering = entering;
    in_leaving = ratio.leaving;
    in_step = ratio.step;
    in_degenerate = ratio.step == 0;
    in_new_bfs = next.x != current.x;
    in_rule = active;
    current = std::move(next);
  }

  result.distinct_bfs_count = static_cast<std::int64_t>(distinct_x.size());
  return result;
}

std::optional<Basis> phase_one(const LinearProgram& lp, PivotRule rule) {
  const std::size_t m = lp.num_rows(), n = lp.num_cols();

  // Normalize row signs so b >= 0; this rescales rows of Ax = b by -1 and
  // leaves the solution set (hence basis feasibility) unchanged.
  Matrix a = lp.a;
  std::vector<Rational> b = lp.b;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (std::size_t j = 0; j < n; ++j) a(i, j) = -a(i, j);
    }
  }

  // Embedded-identity shortcut: a distinct unit column for every row.
  {
    std::vector<int> unit_col(m, -1);
    for (std::size_t j = 0; j < n; ++j) {
      int one_row = -1;
      bool unit = true;
      for (std::size_t i = 0; i < m && unit; ++i) {
        if (a(i, j) == 1 && one_row < 0) one_row = static_cast<int>(i);
        else if (a(i, j) != 0) unit = false;
      }
      if (unit && one_row >= 0 && unit_col[static_cast<std::size_t>(one_row)] < 0)
        unit_col[static_cast<std::size_t>(one_row)] = static_cast<int>(j);
    }
    if (std::all_of(unit_col.begin(), unit_col.end(), [](int j) { return j >= 0; }))
      return Basis(unit_col);
  }

  // min e^T artificial  s.t.  [A | I] (x, artificial) = b, all >= 0.
  Matrix aux(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aux(i, j) = a(i, j);
    aux(i, n + i) = 1;
  }
  std::vector<Rational> aux_c(n + m, Rational(0));
  for (std::size_t j = n; j < n + m; ++j) aux_c[j] = 1;

  LinearProgram aux_lp(std::move(aux), b, std::move(aux_c), lp.name + "/phase1");
  std::vector<int> artificials(m);
  for (std::size_t i = 0; i < m; ++i) artificials[i] = static_cast<int>(n + i);

  SolveOptions aux_options;  // BlandFallback guarantees termination
  SolveResult aux_result = solve(aux_lp, Basis(artificials), rule, aux_options);
  // The auxiliary objective is bounded below by 0, so the solve is Optimal.
  if (*aux_result.z != 0) return std::nullopt;

  // Drive zero-level artificials out of the basis; rank(A) = m guarantees an
  // original column with a nonzero pivot element in the artificial's row.
  std::vector<int> idx = aux_result.optimal_basis->indices();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (idx[p] < static_cast<int>(n)) continue;
      Matrix ab = basis_matrix(aux_lp, Basis(idx));
      std::vector<Rational> unit(m, Rational(0));
      unit[p] = 1;
      auto row = solve_square(ab.transposed(), unit);  // row p of A_B^{-1}
      if (!row) throw SingularBasisError("phase one: basis became singular");
      for (int j = 0; j < static_cast<int>(n); ++j) {
        if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
        if (dot(*row, a.column(static_cast<std::size_t>(j))) != 0) {
          idx[p] = j;
          std::sort(idx.begin(), idx.end());
          changed = true;
          break;
        }
      }
      if (changed) break;
      throw RankDeficientError(m - 1, m);  // cannot happen on a validated lp
    }
  }
  return Basis(idx);
}

}  // namespace lplab
