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

#ifndef LPLAB_TESTS_TEST_INSTANCES_HPP
#define LPLAB_TESTS_TEST_INSTANCES_HPP

#include <vector>

#include "lplab/lp.hpp"

namespace lplab::testing {

inline Matrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

/** min -x0 - x1 s.t. x0 + x1 + x2 = 2, x1 + x3 = 1, x >= 0. */
inline LinearProgram worked_example() {
  return LinearProgram(matrix_from_rows({{1, 1, 1, 0}, {0, 1, 0, 1}}),
                       {Rational(2), Rational(1)}, {Rational(-1), Rational(-1), Rational(0), Rational(0)},
                       "worked_2x4");
}

inline LinearProgram identity_example(Rational c0 = 0, Rational c1 = 0) {
  return LinearProgram(Matrix::identity(2), {Rational(1), Rational(2)}, {c0, c1}, "identity_2x2");
}

}  // namespace lplab::testing

#endif  // LPLAB_TESTS_TEST_INSTANCES_HPP
