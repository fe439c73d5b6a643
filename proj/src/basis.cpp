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

#include "lplab/basis.hpp"

#include <algorithm>
#include <utility>

#include "lplab/errors.hpp"

namespace lplab {

Basis::Basis(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw DimensionMismatchError("basis has duplicate indices");
  if (!indices_.empty() && indices_.front() < 0)
    throw DimensionMismatchError("basis has negative index");
}

bool Basis::contains(int j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

Basis Basis::replaced(int leaving, int entering) const {
  std::vector<int> next = indices_;
  auto it = std::find(next.begin(), next.end(), leaving);
  if (it == next.end()) throw DimensionMismatchError("leaving index not in basis");
  *it = entering;
  return Basis(std::move(next));
}

Matrix basis_matrix(const LinearProgram& lp, const Basis& basis) {
  const std::size_t m = lp.num_rows();
  if (basis.size() != m) throw DimensionMismatchError("basis size != m");
  Matrix ab(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    int j = basis.indices()[k];
    if (j >= static_cast<int>(lp.num_cols()))
      throw DimensionMismatchError("basis index out of range");
    for (std::size_t i = 0; i < m; ++i) ab(i, k) = lp.a(i, static_cast<std::size_t>(j));
  }
  return ab;
}

std::vector<int> nonbasic_indices(const LinearProgram& lp, const Basis& basis) {
  std::vector<int> nb;
  nb.reserve(lp.num_cols() - basis.size());
  for (int j = 0; j < static_cast<int>(lp.num_cols()); ++j)
    if (!basis.contains(j)) nb.push_back(j);
  return nb;
}

BasicSolution basis_solve(const LinearProgram& lp, const Basis& basis) {
  auto xb = solve_square(basis_matrix(lp, basis), lp.b);
  if (!xb) throw SingularBasisError();

  std::vector<Rational> x(lp.num_cols(), Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    x[static_cast<std::size_t>(basis.indices()[k])] = (*xb)[k];

  bool feasible = is_nonnegative(*xb);
  bool degenerate =
      feasible && std::any_of(xb->begin(), xb->end(), [](const Rational& q) { return q == 0; });
  Rational objective = dot(lp.c, x);
  return BasicSolution{basis, std::move(x), std::move(objective), feasible, degenerate};
}

DualCertificate dual_from_basis(const LinearProgram& lp, const Basis& basis) {
  std::vector<Rational> cb(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    cb[k] = lp.c[static_cast<std::size_t>(basis.indices()[k])];

  auto y = solve_square(basis_matrix(lp, basis).transposed(), cb);
  if (!y) throw SingularBasisError();

  std::vector<Rational> s(lp.num_cols());
  for (std::size_t j = 0; j < lp.num_cols(); ++j) s[j] = lp.c[j] - dot(lp.a.column(j), *y);
  return DualCertificate{std::move(*y), std::move(s)};
}

std::map<int, Rational> reduced_costs(const LinearProgram& lp, const Basis& basis) {
  DualCertificate dual = dual_from_basis(lp, basis);
  std::map<int, Rational> rc;
  for (int j : nonbasic_indices(lp, basis)) rc.emplace(j, dual.s[static_cast<std::size_t>(j)]);
  return rc;
}

}  // namespace lplab
