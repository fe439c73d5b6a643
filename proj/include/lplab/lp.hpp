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

#ifndef LPLAB_LP_HPP
#define LPLAB_LP_HPP

#include <string>
#include <vector>

#include "lplab/matrix.hpp"
#include "lplab/rational.hpp"

namespace lplab {

/**
 * Standard form data: min c^T x subject to A x = b, x >= 0,
 * with A an m-by-n rational matrix. Immutable after construction.
 * The constructor checks dimensions only; validate() checks rank.
 */
struct LinearProgram {
  LinearProgram(Matrix a_in, std::vector<Rational> b_in, std::vector<Rational> c_in,
                std::string name_in = "");

  std::size_t num_rows() const { return a.rows(); }  // m
  std::size_t num_cols() const { return a.cols(); }  // n

  Matrix a;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::string name;
};

/**
 * Passes the program through iff rank(A) = m, computed exactly.
 * Rank deficiency is an error, never auto-repaired.
 */
LinearProgram validate(LinearProgram lp);

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace lplab

#endif  // LPLAB_LP_HPP
