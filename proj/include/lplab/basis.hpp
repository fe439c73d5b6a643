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

#ifndef LPLAB_BASIS_HPP
#define LPLAB_BASIS_HPP

#include <compare>
#include <map>
#include <vector>

#include "lplab/lp.hpp"

namespace lplab {

/** A sorted set of m column indices (0-based). */
class Basis {
 public:
  explicit Basis(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int j) const;

  /** Basis with `leaving` swapped for `entering`; both must apply. */
  Basis replaced(int leaving, int entering) const;

  auto operator<=>(const Basis&) const = default;

 private:
  std::vector<int> indices_;
};

/** The point x determined by a basis: x_B = A_B^{-1} b, x_N = 0, exactly. */
struct BasicSolution {
  Basis basis;
  std::vector<Rational> x;
  Rational objective;
  bool feasible;    // x >= 0 componentwise
  bool degenerate;  // feasible and some basic component is exactly 0
};

/** y with s = c - A^T y; s_B = 0 when built from a basis. */
struct DualCertificate {
  std::vector<Rational> y;
  std::vector<Rational> s;
};

Matrix basis_matrix(const LinearProgram& lp, const Basis& basis);
std::vector<int> nonbasic_indices(const LinearProgram& lp, const Basis& basis);

/** Throws SingularBasisError when det(A_B) = 0. */
BasicSolution basis_solve(const LinearProgram& lp, const Basis& basis);

/** y = (A_B^{-1})^T c_B and s = c - A^T y, both exact. */
DualCertificate dual_from_basis(const LinearProgram& lp, const Basis& basis);

/** Reduced cost for each nonbasic index; equals s restricted to N. */
std::map<int, Rational> reduced_costs(const LinearProgram& lp, const Basis& basis);

}  // namespace lplab

#endif  // LPLAB_BASIS_HPP
