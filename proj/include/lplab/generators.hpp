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

#ifndef LPLAB_GENERATORS_HPP
#define LPLAB_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lplab/lp.hpp"

namespace lplab {

/**
 * mt19937_64 with an explicit integer-range mapping, so sequences are
 * reproducible across standard libraries (uniform_int_distribution is
 * implementation-defined).
 */
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /** Uniform-ish integer in [lo, hi], inclusive. */
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_u64() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/**
 * Two-action discounted MDP data. Rows of p1/p2 are transition
 * distributions (nonnegative, summing to exactly 1). The LP assembles the
 * occupancy-measure constraints [I - theta*P1^T | I - theta*P2^T] x = e,
 * under which every feasible basis picks one action per state.
 */
struct MdpSpec {
  std::int64_t m = 0;
  Rational theta;
  Matrix p1, p2;
  std::vector<Rational> c1, c2;
};

/** Min-cost-flow data; supplies sum to zero and the graph is connected. */
struct TuNetworkSpec {
  std::int64_t nodes = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
  std::vector<Rational> supplies;         // per node, integral
  std::vector<Rational> costs;            // per arc, nonnegative integral
};

MdpSpec gen_mdp_spec(std::int64_t m, const Rational& theta, std::uint64_t seed);
LinearProgram to_lp(const MdpSpec& spec);
LinearProgram gen_mdp(std::int64_t m, const Rational& theta, std::uint64_t seed);

TuNetworkSpec gen_tu_network_spec(std::int64_t nodes, std::int64_t arcs, std::uint64_t seed);
/** Flow-conservation LP on the reduced incidence matrix (last node row dropped). */
LinearProgram to_lp(const TuNetworkSpec& spec);
LinearProgram gen_tu_network(std::int64_t nodes, std::int64_t arcs, std::uint64_t seed);

/**
 * True iff every square submatrix has determinant in {-1, 0, 1}, checked
 * exhaustively and exactly. Throws BudgetExceededError when the submatrix
 * count is over budget.
 */
bool is_totally_unimodular(const Matrix& a, std::int64_t budget = 1'000'000);

/**
 * d-dimensional Klee-Minty cube in standard form (m = d, n = 2d):
 * row i is x_i + 2*(x_0 + ... + x_{i-1}) + slack_i = 2^i, objective
 * min -x_{d-1}. gamma/delta grows as 2^(d-1), so the count bound is
 * consistent with exponential pivot counts.
 */
LinearProgram gen_klee_minty(std::int64_t d);

/**
 * Random dense LP with a guaranteed optimum: A resampled to full rank,
 * b = A*x_hat for a random x_hat >= 0 with at least m positive entries,
 * c resampled until the solve is bounded. Deterministic per seed,
 * rejections included.
 */
LinearProgram gen_random_dense(std::int64_t m, std::int64_t n, std::uint64_t seed);

}  // namespace lplab

#endif  // LPLAB_GENERATORS_HPP
