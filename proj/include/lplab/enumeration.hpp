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

#ifndef LPLAB_ENUMERATION_HPP
#define LPLAB_ENUMERATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lplab/basis.hpp"
#include "lplab/lp.hpp"

namespace lplab {

inline constexpr std::int64_t kDefaultEnumerationBudget = 1'000'000;

struct VertexRecord {
  std::vector<Rational> x;
  Rational objective;
};

/**
 * Exhaustive ground truth over all C(n, m) column subsets. delta and gamma
 * are the minimum and maximum over all positive components of all feasible
 * basic solutions; they depend on (A, b) only. A degenerate vertex reached
 * by several bases appears once in distinct_vertices, but every feasible
 * basis is retained.
 */
struct VertexCensus {
  std::vector<BasicSolution> feasible_bases;
  std::vector<VertexRecord> distinct_vertices;  // sorted by x, ascending
  Rational delta = 0;
  Rational gamma = 0;
  Rational z_star = 0;
  std::optional<Rational> second_value;  // min objective above z_star; none if all optimal
  bool all_nondegenerate = false;
};

/**
 * Brute-force census of every basis. Throws BudgetExceededError before
 * starting when C(n, m) > budget, and NoFeasibleBasisError when the program
 * is infeasible.
 */
VertexCensus enumerate_vertices(const LinearProgram& lp,
                                std::int64_t budget = kDefaultEnumerationBudget);

/**
 * (y*, s*) from an optimal basis whose reduced costs are all nonnegative.
 * Searches the census's optimal-vertex bases in order; one must qualify.
 */
DualCertificate certify_optimal(const LinearProgram& lp, const VertexCensus& census);

}  // namespace lplab

#endif  // LPLAB_ENUMERATION_HPP
