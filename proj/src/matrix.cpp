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

#include "lplab/matrix.hpp"

#include <algorithm>
#include <utility>

#include "lplab/errors.hpp"

namespace lplab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  std::vector<Rational> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  Matrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(static_cast<std::size_t>(row_idx[i]), static_cast<std::size_t>(col_idx[j]));
  return s;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("dot: size mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& x) {
  if (a.cols() != x.size()) throw DimensionMismatchError("multiply: size mismatch");
  std::vector<Rational> y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
  return y;
}

bool is_nonnegative(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= 0; });
}

std::optional<std::vector<Rational>> solve_square(Matrix a, std::vector<Rational> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) throw DimensionMismatchError("solve_square: not square");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      a.swap_rows(k, pivot);
      std::swap(rhs[k], rhs[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      a(i, k) = 0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      rhs[i] -= factor * rhs[k];
    }
  }

  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational sum = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) sum -= a(i, j) * x[j];
    x[i] = sum / a(i, i);
  }
  return x;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatchError("determinant: not square");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.swap_rows(k, pivot);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

std::size_t rank(Matrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && a(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, col) == 0) continue;
      Rational factor = a(i, col) / a(r, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace lplab
