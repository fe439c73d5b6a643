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

#ifndef LPLAB_ERRORS_HPP
#define LPLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lplab {

/** Raised when matrix/vector dimensions are inconsistent. */
class DimensionMismatchError : public std::runtime_error {
 public:
  explicit DimensionMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised when rank(A) < m for a standard-form program. */
class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(std::size_t found, std::size_t required)
      : std::runtime_error("rank deficient: rank " + std::to_string(found) +
                           " < " + std::to_string(required)),
        rank_found(found) {}
  std::size_t rank_found;
};

/** Raised when a candidate basis matrix has zero determinant. */
class SingularBasisError : public std::runtime_error {
 public:
  explicit SingularBasisError(const std::string& what = "singular basis")
      : std::runtime_error(what) {}
};

/** Raised when a solve is started from a basis whose BFS is infeasible. */
class InfeasibleInitialBasisError : public std::runtime_error {
 public:
  explicit InfeasibleInitialBasisError(const std::string& what = "initial basis is infeasible")
      : std::runtime_error(what) {}
};

/** Raised when an exhaustive computation would exceed its subset budget. */
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised by enumeration when no basis is primal feasible. */
class NoFeasibleBasisError : public std::runtime_error {
 public:
  explicit NoFeasibleBasisError(const std::string& what = "no feasible basis")
      : std::runtime_error(what) {}
};

/**
 * Raised when no optimal-vertex basis has nonnegative reduced costs. An LP
 * with an optimal BFS always has one, so this signals internal inconsistency.
 */
class NoOptimalBasisFoundError : public std::runtime_error {
 public:
  explicit NoOptimalBasisFoundError(const std::string& what = "no dual-feasible optimal basis")
      : std::runtime_error(what) {}
};

/** Raised when a generator exhausts its retry budget. */
class GenerationFailedError : public std::runtime_error {
 public:
  explicit GenerationFailedError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised on malformed rational text or instance files. */
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lplab

#endif  // LPLAB_ERRORS_HPP
