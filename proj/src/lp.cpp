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

#include "lplab/lp.hpp"

#include <utility>

#include "lplab/errors.hpp"

namespace lplab {

LinearProgram::LinearProgram(Matrix a_in, std::vector<Rational> b_in, std::vector<Rational> c_in,
                             std::string name_in)
    : a(std::move(a_in)), b(std::move(b_in)), c(std::move(c_in)), name(std::move(name_in)) {
  if (a.rows() < 1) throw DimensionMismatchError("lp '" + name + "': m must be >= 1");
  if (a.cols() < a.rows())
    throw DimensionMismatchError("lp '" + name + "': n must be >= m");
  if (b.size() != a.rows())
    throw DimensionMismatchError("lp '" + name + "': b has wrong length");
  if (c.size() != a.cols())
    throw DimensionMismatchError("lp '" + name + "': c has wrong length");
}

LinearProgram validate(LinearProgram lp) {
  std::size_t r = rank(lp.a);
  if (r != lp.num_rows()) throw RankDeficientError(r, lp.num_rows());
  return lp;
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) {
  return dot(lp.c, x);
}

}  // namespace lplab
