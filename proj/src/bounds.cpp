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

#include "lplab/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace lplab {

BigInt paper_ceil(const Rational& value) { return floor_rational(value) + 1; }

std::pair<Rational, Rational> log_bracket(const Rational& x, int precision_bits) {
  if (x <= 0) throw std::invalid_argument("log_bracket: argument must be positive");
  mpfr_t lo, hi;
  mpfr_init2(lo, precision_bits);
  mpfr_init2(hi, precision_bits);
  mpfr_set_q(lo, x.backend().data(), MPFR_RNDD);
  mpfr_log(lo, lo, MPFR_RNDD);  // ln is increasing, so rounding down twice stays below
  mpfr_set_q(hi, x.backend().data(), MPFR_RNDU);
  mpfr_log(hi, hi, MPFR_RNDU);

  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, lo);
  Rational lower(q);
  mpfr_get_q(q, hi);
  Rational upper(q);
  mpq_clear(q);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return {lower, upper};
}

std::int64_t paper_ceil_scaled_log(const Rational& scale, const Rational& arg) {
  if (scale <= 0) throw std::invalid_argument("paper_ceil_scaled_log: scale must be positive");
  if (arg < 1) throw std::invalid_argument("paper_ceil_scaled_log: argument must be >= 1");
  if (arg == 1) return to_int64_checked(paper_ceil(Rational(0)));

  // scale * ln(arg) is irrational here, so some bracket lands strictly
  // between consecutive integers; that fixes paper_ceil's output exactly.
  for (int bits = 128; bits <= (1 << 16); bits *= 2) {
    auto [lo, hi] = log_bracket(arg, bits);
    BigInt floor_lo = floor_rational(scale * lo);
    BigInt floor_hi = floor_rational(scale * hi);
    if (floor_lo == floor_hi) return to_int64_checked(floor_lo + 1);
  }
  throw std::runtime_error("paper_ceil_scaled_log: bracket failed to separate integers");
}

std::int64_t theorem5_bound(std::int64_t m, std::int64_t n, const Rational& delta,
                            const Rational& gamma) {
  if (m < 1 || n < 1) throw std::invalid_argument("theorem5_bound: m, n must be >= 1");
  if (delta <= 0 || gamma < delta)
    throw std::invalid_argument("theorem5_bound: need 0 < delta <= gamma");
  Rational ratio = Rational(m) * gamma / delta;
  return to_int64_checked(BigInt(n) * paper_ceil_scaled_log(ratio, ratio));
}

std::int64_t corollary3_bound(std::int64_t m, const Rational& delta, const Rational& gamma,
                              const Rational& initial_objective, const Rational& z_star,
                              const Rational& second_value) {
  if (initial_objective == z_star) return 0;
  if (initial_objective < z_star || second_value <= z_star)
    throw std::invalid_argument("corollary3_bound: need x0 and xbar above z*");
  Rational scale = Rational(m) * gamma / delta;
  Rational gap_ratio = (initial_objective - z_star) / (second_value - z_star);
  return paper_ceil_scaled_log(scale, gap_ratio);
}

std::int64_t tu_bound(std::int64_t m, std::int64_t n, const Rational& b_l1) {
  if (b_l1 < 1) throw std::invalid_argument("tu_bound: need ||b||_1 >= 1");
  Rational inner = Rational(m) * b_l1;
  return to_int64_checked(BigInt(n) * paper_ceil_scaled_log(inner, inner));
}

std::int64_t mdp_bound(std::int64_t m, const Rational& theta) {
  if (theta <= 0 || theta >= 1) throw std::invalid_argument("mdp_bound: need 0 < theta < 1");
  Rational inner = Rational(m) * m / (1 - theta);
  return to_int64_checked(BigInt(2 * m) * paper_ceil_scaled_log(inner, inner));
}

namespace {

std::string rat(const Rational& q) { return format_rational(q); }

}  // namespace

CheckResult check_lemma1(const std::vector<IterateRecord>& trace, const Rational& z_star,
                         std::int64_t m, const Rational& gamma) {
  CheckResult check{"lemma1_lower_bound"};
  for (const IterateRecord& rec : trace) {
    if (!rec.delta) {
      ++check.skipped;  // optimal iterate: Delta undefined
      continue;
    }
    ++check.checked;
    Rational lower = rec.objective - *rec.delta * m * gamma;
    if (z_star < lower) {
      check.pass = false;
      check.witnesses.push_back("t=" + std::to_string(rec.t) + ": z*=" + rat(z_star) +
                                " < c^Tx - Delta*m*gamma = " + rat(lower));
    }
  }
  return check;
}

CheckResult check_theorem2(const std::vector<IterateRecord>& trace, const Rational& z_star,
                           std::int64_t m, const Rational& delta, const Rational& gamma) {
  CheckResult check{"theorem2_gap_reduction"};
  Rational ratio = 1 - delta / (Rational(m) * gamma);
  for (std::size_t t = 0; t + 1 < trace.size(); ++t) {
    const IterateRecord& cur = trace[t];
    const IterateRecord& next = trace[t + 1];
    if (next.x == cur.x || next.arrived_by == PivotRule::Bland) {
      ++check.skipped;  // degenerate step, or pivot outside the theorem's rules
      continue;
    }
    ++check.checked;
    Rational lhs = next.objective - z_star;
    Rational rhs = ratio * (cur.objective - z_star);
    if (lhs > rhs) {
      check.pass = false;
      check.witnesses.push_back("t=" + std::to_string(cur.t) + "->" + std::to_string(next.t) +
                                ": gap " + rat(lhs) + " > " + rat(rhs));
    }
  }
  return check;
}

std::vector<CheckResult> check_vanishing_witness(const std::vector<IterateRecord>& trace,
                                                 const std::vector<Rational>& s_star,
                                                 const Rational& z_star, std::int64_t m,
                                                 const Rational& delta, const Rational& gamma) {
  CheckResult witness{"lemma3_witness"};
  CheckResult decay{"lemma3_decay"};
  CheckResult vanishing{"lemma4_vanishing"};

  Rational count_ratio = Rational(m) * gamma / delta;
  std::int64_t threshold = paper_ceil_scaled_log(count_ratio, count_ratio);
  bool bland_update = std::any_of(trace.begin(), trace.end(), [](const IterateRecord& r) {
    return r.arrived_by == PivotRule::Bland && r.new_bfs;
  });

  for (const IterateRecord& rec : trace) {
    Rational gap = rec.objective - z_star;
    if (gap == 0) {
      ++witness.skipped;
      ++decay.skipped;
      ++vanishing.skipped;
      continue;
    }

    // jbar = argmax_j s*_j x^t_j, lowest index on ties.
    std::size_t jbar = 0;
    Rational best = s_star[0] * rec.x[0];
    for (std::size_t j = 1; j < rec.x.size(); ++j) {
      Rational product = s_star[j] * rec.x[j];
      if (product > best) {
        best = product;
        jbar = j;
      }
    }

    ++witness.checked;
    if (!(rec.x[jbar] > 0 && best * m >= gap)) {
      witness.pass = false;
      witness.witnesses.push_back("t=" + std::to_string(rec.t) + ": max s*_j x_j = " + rat(best) +
                                  " < gap/m = " + rat(gap / m));
    }

    for (const IterateRecord& other : trace) {
      ++decay.checked;
      // x^k_jbar <= m (c^T x^k - z*)/(c^T x^t - z*) x^t_jbar, cross-multiplied.
      Rational lhs = other.x[jbar] * gap;
      Rational rhs = Rational(m) * (other.objective - z_star) * rec.x[jbar];
      if (lhs > rhs) {
        decay.pass = false;
        decay.witnesses.push_back("t=" + std::to_string(rec.t) + ", k=" + std::to_string(other.t) +
                                  ", j=" + std::to_string(jbar) + ": " + rat(lhs) + " > " +
                                  rat(rhs));
      }
    }

    if (bland_update) {
      ++vanishing.skipped;  // update counts assume most-negative/best-improvement pivots
      continue;
    }
    std::int64_t updates = 0;
    std::size_t start = static_cast<std::size_t>(rec.t);
    for (std::size_t k = start + 1; k < trace.size(); ++k) {
      if (trace[k].x != trace[k - 1].x) ++updates;
      if (updates < threshold) continue;
      ++vanishing.checked;
      if (trace[k].x[jbar] != 0) {
        vanishing.pass = false;
        vanishing.witnesses.push_back("t=" + std::to_string(rec.t) + ", k=" +
                                      std::to_string(trace[k].t) + ", j=" + std::to_string(jbar) +
                                      ": x_j = " + rat(trace[k].x[jbar]) + " != 0");
      }
    }
  }
  return {witness, decay, vanishing};
}

std::vector<CheckResult> check_counts(const SolveResult& result, const BoundInputs& inputs,
                                      bool all_nondegenerate) {
  std::int64_t bound5 = theorem5_bound(inputs.m, inputs.n, inputs.delta, inputs.gamma);
  std::int64_t distinct = result.distinct_bfs_count;

  CheckResult theorem5{"theorem5_distinct_bfs_count"};
  theorem5.checked = 1;
  if (distinct > bound5) {
    theorem5.pass = false;
    theorem5.witnesses.push_back("distinct BFSs " + std::to_string(distinct) + " > bound " +
                                 std::to_string(bound5));
  }

  // Corollary 3 counts the improving steps, i.e. the BFSs beyond x^0.
  CheckResult corollary3{"corollary3_distinct_bfs_count"};
  if (inputs.second_value) {
    std::int64_t bound3 = corollary3_bound(inputs.m, inputs.delta, inputs.gamma,
                                           inputs.initial_objective, inputs.z_star,
                                           *inputs.second_value);
    corollary3.checked = 1;
    if (distinct - 1 > bound3) {
      corollary3.pass = false;
      corollary3.witnesses.push_back("BFSs beyond x^0 " + std::to_string(distinct - 1) +
                                     " > bound " + std::to_string(bound3));
    }
  } else {
    corollary3.skipped = 1;  // every vertex optimal: statement not applicable
  }

  CheckResult corollary6{"corollary6_iteration_count"};
  if (all_nondegenerate) {
    corollary6.checked = 1;
    if (result.iterations() > bound5) {
      corollary6.pass = false;
      corollary6.witnesses.push_back("iterations " + std::to_string(result.iterations()) +
                                     " > bound " + std::to_string(bound5));
    }
  } else {
    corollary6.skipped = 1;
  }
  return {theorem5, corollary3, corollary6};
}

std::vector<CheckResult> check_tu_properties(const LinearProgram& lp, const VertexCensus& census,
                                             const SolveResult& result) {
  Rational b_l1 = l1_norm(lp.b);

  CheckResult integral{"tu_integral_bfs"};
  for (const BasicSolution& sol : census.feasible_bases) {
    ++integral.checked;
    for (std::size_t j = 0; j < sol.x.size(); ++j) {
      if (!is_integral(sol.x[j])) {
        integral.pass = false;
        integral.witnesses.push_back("basis vertex component x_" + std::to_string(j) + " = " +
                                     rat(sol.x[j]) + " not integral");
      }
    }
  }

  CheckResult delta_check{"tu_delta_ge_1"};
  delta_check.checked = 1;
  if (census.delta < 1) {
    delta_check.pass = false;
    delta_check.witnesses.push_back("delta = " + rat(census.delta) + " < 1");
  }

  CheckResult gamma_check{"tu_gamma_le_b_l1"};
  gamma_check.checked = 1;
  if (census.gamma > b_l1) {
    gamma_check.pass = false;
    gamma_check.witnesses.push_back("gamma = " + rat(census.gamma) + " > ||b||_1 = " + rat(b_l1));
  }

  CheckResult count{"tu_count_bound"};
  count.checked = 1;
  std::int64_t bound = tu_bound(static_cast<std::int64_t>(lp.num_rows()),
                                static_cast<std::int64_t>(lp.num_cols()), b_l1);
  if (result.distinct_bfs_count > bound) {
    count.pass = false;
    count.witnesses.push_back("distinct BFSs " + std::to_string(result.distinct_bfs_count) +
                              " > bound " + std::to_string(bound));
  }
  return {integral, delta_check, gamma_check, count};
}

std::vector<CheckResult> check_mdp_properties(const VertexCensus& census,
                                              const SolveResult& result, std::int64_t m,
                                              const Rational& theta) {
  CheckResult nondegenerate{"mdp_nondegenerate"};
  nondegenerate.checked = 1;
  if (!census.all_nondegenerate) {
    nondegenerate.pass = false;
    nondegenerate.witnesses.push_back("census found a degenerate feasible basis");
  }

  CheckResult delta_check{"mdp_delta_ge_1"};
  delta_check.checked = 1;
  if (census.delta < 1) {
    delta_check.pass = false;
    delta_check.witnesses.push_back("delta = " + rat(census.delta) + " < 1");
  }

  CheckResult gamma_check{"mdp_gamma_le_m_over_1_minus_theta"};
  gamma_check.checked = 1;
  Rational cap = Rational(m) / (1 - theta);
  if (census.gamma > cap) {
    gamma_check.pass = false;
    gamma_check.witnesses.push_back("gamma = " + rat(census.gamma) + " > " + rat(cap));
  }

  CheckResult iteration{"mdp_iteration_bound"};
  iteration.checked = 1;
  std::int64_t bound = mdp_bound(m, theta);
  if (result.iterations() > bound) {
    iteration.pass = false;
    iteration.witnesses.push_back("iterations " + std::to_string(result.iterations()) +
                                  " > bound " + std::to_string(bound));
  }
  return {nondegenerate, delta_check, gamma_check, iteration};
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

BoundInputs gather_bound_inputs(const LinearProgram& lp, const VertexCensus& census,
                                const SolveResult& result, std::optional<Rational> b_l1,
                                std::optional<Rational> theta) {
  BoundInputs inputs;
  inputs.m = static_cast<std::int64_t>(lp.num_rows());
  inputs.n = static_cast<std::int64_t>(lp.num_cols());
  inputs.delta = census.delta;
  inputs.gamma = census.gamma;
  inputs.z_star = census.z_star;
  inputs.second_value = census.second_value;
  inputs.initial_objective = result.trace.front().objective;
  inputs.b_l1 = std::move(b_l1);
  inputs.theta = std::move(theta);
  return inputs;
}

BoundReport evaluate_bounds(const LinearProgram& lp, const VertexCensus& census,
                            const SolveResult& result, const DualCertificate& optimal_dual,
                            const BoundInputs& inputs) {
  BoundReport report;
  report.theorem5 = theorem5_bound(inputs.m, inputs.n, inputs.delta, inputs.gamma);
  if (inputs.second_value)
    report.corollary3 = corollary3_bound(inputs.m, inputs.delta, inputs.gamma,
                                         inputs.initial_objective, inputs.z_star,
                                         *inputs.second_value);
  if (inputs.b_l1) report.tu = tu_bound(inputs.m, inputs.n, *inputs.b_l1);
  if (inputs.theta) report.mdp = mdp_bound(inputs.m, *inputs.theta);
  report.observed_distinct_bfs = result.distinct_bfs_count;
  report.observed_iterations = result.iterations();

  report.checks.push_back(check_lemma1(result.trace, inputs.z_star, inputs.m, inputs.gamma));
  report.checks.push_back(
      check_theorem2(result.trace, inputs.z_star, inputs.m, inputs.delta, inputs.gamma));
  for (CheckResult& check : check_vanishing_witness(result.trace, optimal_dual.s, inputs.z_star,
                                                    inputs.m, inputs.delta, inputs.gamma))
    report.checks.push_back(std::move(check));
  for (CheckResult& check : check_counts(result, inputs, census.all_nondegenerate))
    report.checks.push_back(std::move(check));
  if (inputs.b_l1)
    for (CheckResult& check : check_tu_properties(lp, census, result))
      report.checks.push_back(std::move(check));
  if (inputs.theta)
    for (CheckResult& check : check_mdp_properties(census, result, inputs.m, *inputs.theta))
      report.checks.push_back(std::move(check));
  return report;
}

}  // namespace lplab
