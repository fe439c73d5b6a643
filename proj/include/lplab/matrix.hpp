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

#ifndef LPLAB_MATRIX_HPP
#define LPLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lplab/rational.hpp"

namespace lplab {

/**
 * Dense rational matrix. Desk-scale sizes only; every operation on it is
 * exact, and singularity detection is a pivot that is exactly zero.
 */
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  Matrix transposed() const;
  std::vector<Rational> column(std::size_t j) const;
  std::vector<Rational> row(std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);

  /** Square submatrix selecting the given rows and columns, in order. */
  Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> cells_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& x);
bool is_nonnegative(const std::vector<Rational>& v);

/** Exact Gaussian elimination; nullopt iff the matrix is singular. */
std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> rhs);

Rational determinant(Matrix a);

std::size_t rank(Matrix a);

}  // namespace lplab

#endif  // LPLAB_MATRIX_HPP
