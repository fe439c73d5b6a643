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

#ifndef LPLAB_BOUNDS_HPP
#define LPLAB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lplab/enumeration.hpp"
#include "lplab/simplex.hpp"

namespace lplab {

/**
 * The smallest integer STRICTLY greater than its argument. This differs from
 * the standard ceiling at integers: paper_ceil(0) = 1, paper_ceil(5) = 6.
 * With the standard ceiling the count bound would degenerate to 0 whenever
 * m*gamma/delta = 1.
 */
BigInt paper_ceil(const Rational& value);

/**
 * Certified rational bounds lo <= ln(x) <= hi via directed rounding at the
 * given mantissa precision. x must be positive.
 */
std::pair<Rational, Rational> log_bracket(const Rational& x, int precision_bits);

/**
 * paper_ceil(scale * ln(arg)) for rational scale > 0 and arg >= 1, exactly:
 * ln(arg) is irrational for rational arg != 1, so a bracket not straddling
 * an integer pins the value; the bracket is tightened until it does not.
 */
std::int64_t paper_ceil_scaled_log(const Rational& scale, const Rational& arg);

/** n * paper_ceil(M ln M) with M = m*gamma/delta; distinct-BFS count bound. */
std::int64_t theorem5_bound(std::int64_t m, std::int64_t n, const Rational& delta,
                            const Rational& gamma);

/**
 * paper_ceil(m*(gamma/delta) * ln((c^T x0 - z*) / (c^T xbar - z*))), the
 * objective-dependent count of improving steps; 0 when x0 is already optimal.
 */
std::int64_t corollary3_bound(std::int64_t m, const Rational& delta, const Rational& gamma,
                              const Rational& initial_objective, const Rational& z_star,
                              const Rational& second_value);

/** Totally unimodular specialization: n * paper_ceil(m*||b||_1 * ln(m*||b||_1)). */
std::int64_t tu_bound(std::int64_t m, std::int64_t n, const Rational& b_l1);

/** Two-action MDP specialization: 2m * paper_ceil(M ln M), M = m^2/(1-theta). */
std::int64_t mdp_bound(std::int64_t m, const Rational& theta);

/**
 * One named verdict. Violations are data, never exceptions: each failing
 * comparison appends an exact-rational witness line.
 */
struct CheckResult {
  std::string name;
  bool pass = true;
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::vector<std::string> witnesses;
};

/** z* >= c^T x^t - Delta^t * m * gamma at every non-optimal iterate. */
CheckResult check_lemma1(const std::vector<IterateRecord>& trace, const Rational& z_star,
                         std::int64_t m, const Rational& gamma);

/**
 * c^T x^{t+1} - z* <= (1 - delta/(m*gamma)) (c^T x^t - z*) for every updating
 * step. Degenerate steps are exempt by the hypothesis x^{t+1} != x^t; pivots
 * chosen by the Bland fallback are exempt because the statement assumes the
 * most-negative or best-improvement rule.
 */
CheckResult check_theorem2(const std::vector<IterateRecord>& trace, const Rational& z_star,
                           std::int64_t m, const Rational& delta, const Rational& gamma);

/**
 * Per non-optimal iterate t, with jbar = argmax_j s*_j x^t_j:
 *  - witness:   x^t_jbar > 0 and s*_jbar x^t_jbar >= (c^T x^t - z*)/m,
 *  - decay:     x^k_jbar <= m (c^T x^k - z*)/(c^T x^t - z*) x^t_jbar for all k,
 *  - vanishing: once more than m*(gamma/delta)*ln(m*gamma/delta) distinct
 *    BFSs appear after t, x_jbar is 0 at every later iterate.
 * Returned in that order.
 */
std::vector<CheckResult> check_vanishing_witness(const std::vector<IterateRecord>& trace,
                                                 const std::vector<Rational>& s_star,
                                                 const Rational& z_star, std::int64_t m,
                                                 const Rational& delta, const Rational& gamma);

/** Everything the bound formulas need, gathered from census, trace and metadata. */
struct BoundInputs {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational delta;
  Rational gamma;
  Rational z_star;
  std::optional<Rational> second_value;
  Rational initial_objective;
  std::optional<Rational> b_l1;   // TU instances
  std::optional<Rational> theta;  // MDP instances
};

/**
 * Count checks: distinct BFSs (including x^0) <= theorem5_bound; distinct
 * BFSs beyond x^0 <= corollary3_bound when a second-optimal value exists;
 * and, on nondegenerate programs, iterations <= theorem5_bound.
 */
std::vector<CheckResult> check_counts(const SolveResult& result, const BoundInputs& inputs,
                                      bool all_nondegenerate);

/** TU corollary evidence: integral BFSs, delta >= 1, gamma <= ||b||_1, count bound. */
std::vector<CheckResult> check_tu_properties(const LinearProgram& lp, const VertexCensus& census,
                                             const SolveResult& result);

/** MDP properties: nondegenerate, delta >= 1, gamma <= m/(1-theta), iteration bound. */
std::vector<CheckResult> check_mdp_properties(const VertexCensus& census,
                                              const SolveResult& result, std::int64_t m,
                                              const Rational& theta);

/** Machine-readable verdict over every applicable paper statement. */
struct BoundReport {
  std::int64_t theorem5 = 0;
  std::optional<std::int64_t> corollary3;
  std::optional<std::int64_t> tu;
  std::optional<std::int64_t> mdp;
  std::int64_t observed_distinct_bfs = 0;
  std::int64_t observed_iterations = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

BoundInputs gather_bound_inputs(const LinearProgram& lp, const VertexCensus& census,
                                const SolveResult& result, std::optional<Rational> b_l1,
                                std::optional<Rational> theta);

/** Runs every applicable check against one solve trace. */
BoundReport evaluate_bounds(const LinearProgram& lp, const VertexCensus& census,
                            const SolveResult& result, const DualCertificate& optimal_dual,
                            const BoundInputs& inputs);

}  // namespace lplab

#endif  // LPLAB_BOUNDS_HPP
