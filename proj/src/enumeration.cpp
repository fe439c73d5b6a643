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

#include "lplab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long>(n - k + i);
    result /= static_cast<unsigned long>(i);
  }
  return result;
}

// Lexicographic successor of an m-subset of {0..n-1}; false when exhausted.
bool next_subset(std::vector<int>& subset, int n) {
  int m = static_cast<int>(subset.size());
  for (int i = m - 1; i >= 0; --i) {
    if (subset[static_cast<std::size_t>(i)] < n - m + i) {
      ++subset[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < m; ++k)
        subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

VertexCensus enumerate_vertices(const LinearProgram& lp, std::int64_t budget) {
  const std::size_t m = lp.num_rows(), n = lp.num_cols();
  BigInt subsets = binomial(n, m);
  if (subsets > budget) {
    throw BudgetExceededError("C(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
                              subsets.str() + " exceeds enumeration budget " +
                              std::to_string(budget));
  }

  VertexCensus census;
  std::map<std::vector<Rational>, Rational> vertices;  // x -> objective
  bool have_positive = false;
  bool any_degenerate = false;

  std::vector<int> subset(m);
  for (std::size_t i = 0; i < m; ++i) subset[i] = static_cast<int>(i);
  do {
    Basis basis(subset);
    if (determinant(basis_matrix(lp, basis)) == 0) continue;
    BasicSolution sol = basis_solve(lp, basis);
    if (!sol.feasible) continue;

    any_degenerate = any_degenerate || sol.degenerate;
    for (const Rational& q : sol.x) {
      if (q > 0) {
        if (!have_positive) {
          census.delta = census.gamma = q;
          have_positive = true;
        } else {
          if (q < census.delta) census.delta = q;
          if (q > census.gamma) census.gamma = q;
        }
      }
    }
    vertices.emplace(sol.x, sol.objective);
    census.feasible_bases.push_back(std::move(sol));
  } while (next_subset(subset, static_cast<int>(n)));

  if (census.feasible_bases.empty())
    throw NoFeasibleBasisError("'" + lp.name + "' has no feasible basis");

  census.all_nondegenerate = !any_degenerate;
  bool first = true;
  for (const auto& [x, objective] : vertices) {
    if (first || objective < census.z_star) census.z_star = objective;
    first = false;
    census.distinct_vertices.push_back(VertexRecord{x, objective});
  }
  for (const auto& [x, objective] : vertices) {
    if (objective > census.z_star &&
        (!census.second_value || objective < *census.second_value))
      census.second_value = objective;
  }
  return census;
}

DualCertificate certify_optimal(const LinearProgram& lp, const VertexCensus& census) {
  for (const BasicSolution& sol : census.feasible_bases) {
    if (sol.objective != census.z_star) continue;
    DualCertificate dual = dual_from_basis(lp, sol.basis);
    if (is_nonnegative(dual.s)) return dual;
  }
  throw NoOptimalBasisFoundError();
}

}  // namespace lplab
