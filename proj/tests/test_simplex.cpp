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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lplab/enumeration.hpp"
#include "lplab/errors.hpp"
#include "lplab/generators.hpp"
#include "lplab/simplex.hpp"
#include "test_instances.hpp"

using lplab::Basis;
using lplab::LinearProgram;
using lplab::PivotRule;
using lplab::Rational;
using lplab::SolveStatus;
using lplab::testing::matrix_from_rows;
using lplab::testing::worked_example;

namespace {

/** Beale's cycling program: three slacks, objective picked to stall Dantzig. */
LinearProgram beale_example() {
  return LinearProgram(
      matrix_from_rows({{Rational(1, 4), -60, Rational(-1, 25), 9, 1, 0, 0},
                        {Rational(1, 2), -90, Rational(-1, 50), 3, 0, 1, 0},
                        {0, 0, 1, 0, 0, 0, 1}}),
      {Rational(0), Rational(0), Rational(1)},
      {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6), Rational(0), Rational(0),
       Rational(0)},
      "beale");
}

}  // namespace

TEST_CASE("dantzig_entering picks the most negative cost, lowest index on ties") {
  CHECK(lplab::dantzig_entering({{0, Rational(-1)}, {1, Rational(-1)}}) ==
        std::make_pair(0, Rational(1)));
  CHECK(!lplab::dantzig_entering({{1, Rational(0)}, {2, Rational(1)}}));
  CHECK(lplab::dantzig_entering({{5, Rational(-3, 2)}, {7, Rational(-2)}}) ==
        std::make_pair(7, Rational(2)));
}

TEST_CASE("ratio_test picks the blocking variable and exact step") {
  auto lp = worked_example();
  auto x = lplab::basis_solve(lp, Basis({2, 3})).x;

  auto r0 = lplab::ratio_test(lp, Basis({2, 3}), x, 0);
  CHECK(!r0.unbounded);
  CHECK(r0.leaving == 2);
  CHECK(r0.step == 2);

  auto r1 = lplab::ratio_test(lp, Basis({2, 3}), x, 1);
  CHECK(!r1.unbounded);
  CHECK(r1.leaving == 3);
  CHECK(r1.step == 1);
}

TEST_CASE("ratio_test reports unbounded directions") {
  LinearProgram lp(matrix_from_rows({{1, -1}}), {Rational(1)}, {Rational(0), Rational(-1)},
                   "ray");
  auto x = lplab::basis_solve(lp, Basis({0})).x;
  CHECK(lplab::ratio_test(lp, Basis({0}), x, 1).unbounded);
}

TEST_CASE("best_improvement_entering maximizes the objective decrease") {
  auto lp = worked_example();
  auto x = lplab::basis_solve(lp, Basis({2, 3})).x;
  auto rc = lplab::reduced_costs(lp, Basis({2, 3}));
  CHECK(lplab::best_improvement_entering(lp, Basis({2, 3}), x, rc) == 0);  // 1*2 beats 1*1

  CHECK(!lplab::best_improvement_entering(lp, Basis({0, 3}), lplab::basis_solve(lp, Basis({0, 3})).x,
                                          lplab::reduced_costs(lp, Basis({0, 3}))));

  std::map<int, Rational> single{{2, Rational(-1)}, {3, Rational(4)}};
  CHECK(lplab::best_improvement_entering(lp, Basis({0, 1}),
                                         lplab::basis_solve(lp, Basis({0, 1})).x, single) == 2);
}

TEST_CASE("solve reproduces the worked trace under both analyzed rules") {
  auto lp = worked_example();
  for (PivotRule rule : {PivotRule::MostNegative, PivotRule::BestImprovement}) {
    CAPTURE(static_cast<int>(rule));
    auto result = lplab::solve(lp, Basis({2, 3}), rule);
    REQUIRE(result.status == SolveStatus::Optimal);
    CHECK(*result.z == -2);
    CHECK(*result.optimal_x == std::vector<Rational>{2, 0, 0, 1});
    CHECK(result.optimal_basis->indices() == std::vector<int>{0, 3});
    CHECK(result.iterations() == 1);
    CHECK(result.distinct_bfs_count == 2);

    REQUIRE(result.trace.size() == 2);
    const auto& first = result.trace[0];
    CHECK(!first.entering);
    CHECK(!first.leaving);
    CHECK(first.new_bfs);
    CHECK(*first.delta == 1);
    const auto& second = result.trace[1];
    CHECK(*second.entering == 0);
    CHECK(*second.leaving == 2);
    CHECK(*second.step == 2);
    CHECK(!second.degenerate_pivot);
    CHECK(second.new_bfs);
    CHECK(!second.delta);  // optimal iterate
  }
}

TEST_CASE("one-basis program is optimal at t=0") {
  auto lp = lplab::testing::identity_example(5, -7);
  auto result = lplab::solve(lp, Basis({0, 1}), PivotRule::MostNegative);
  CHECK(result.status == SolveStatus::Optimal);
  CHECK(result.iterations() == 0);
  CHECK(result.distinct_bfs_count == 1);
}

TEST_CASE("solve rejects an infeasible initial basis") {
  auto lp = worked_example();
  CHECK_THROWS_AS(lplab::solve(lp, Basis({1, 3}), PivotRule::MostNegative),
                  lplab::InfeasibleInitialBasisError);
}

TEST_CASE("unbounded program is reported, not thrown") {
  LinearProgram lp(matrix_from_rows({{1, -1}}), {Rational(1)}, {Rational(0), Rational(-1)},
                   "ray");
  auto result = lplab::solve(lp, Basis({0}), PivotRule::MostNegative);
  CHECK(result.status == SolveStatus::Unbounded);
  CHECK(!result.z);
}

TEST_CASE("iteration limit halts a runnable solve") {
  auto lp = worked_example();
  lplab::SolveOptions options;
  options.max_iterations = 0;
  auto result = lplab::solve(lp, Basis({2, 3}), PivotRule::MostNegative, options);
  CHECK(result.status == SolveStatus::IterationLimit);
  CHECK(result.trace.size() == 1);
}

TEST_CASE("Beale's example cycles under Dantzig and Bland fallback rescues it") {
  auto lp = lplab::validate(beale_example());

  lplab::SolveOptions raw;
  raw.on_cycle = lplab::CyclePolicy::Error;
  auto cycled = lplab::solve(lp, Basis({4, 5, 6}), PivotRule::MostNegative, raw);
  CHECK(cycled.status == SolveStatus::CycleDetected);
  // Every pivot of the cycle is degenerate: the point never moves.
  CHECK(cycled.distinct_bfs_count == 1);

  auto rescued = lplab::solve(lp, Basis({4, 5, 6}), PivotRule::MostNegative);
  REQUIRE(rescued.status == SolveStatus::Optimal);
  auto census = lplab::enumerate_vertices(lp);
  CHECK(*rescued.z == census.z_star);
}

TEST_CASE("phase_one finds the embedded identity basis") {
  auto basis = lplab::phase_one(worked_example());
  REQUIRE(basis.has_value());
  CHECK(basis->indices() == std::vector<int>{2, 3});
}

TEST_CASE("phase_one detects infeasibility after row normalization") {
  LinearProgram lp(matrix_from_rows({{1, 1}}), {Rational(-1)}, {Rational(0), Rational(0)},
                   "negative_rhs");
  CHECK(!lplab::phase_one(lp));
}

TEST_CASE("phase_one produces a feasible basis when the aux solve is needed") {
  LinearProgram lp(matrix_from_rows({{1, 1, 1}, {1, -1, 0}}), {Rational(2), Rational(0)},
                   {Rational(1), Rational(0), Rational(0)}, "aux_needed");
  auto basis = lplab::phase_one(lp);
  REQUIRE(basis.has_value());
  for (int j : basis->indices()) CHECK(j < 3);
  CHECK(lplab::basis_solve(lp, *basis).feasible);
}

TEST_CASE("trace invariants on random programs, all three rules agree on z*") {
  lplab::SeededRng seeds(2026);
  for (int i = 0; i < 15; ++i) {
    auto lp = lplab::gen_random_dense(3, 6, seeds.next_u64());
    auto start = lplab::phase_one(lp);
    REQUIRE(start.has_value());

    std::optional<Rational> agreed_z;
    for (PivotRule rule : {PivotRule::MostNegative, PivotRule::BestImprovement, PivotRule::Bland}) {
      auto result = lplab::solve(lp, *start, rule);
      REQUIRE(result.status == SolveStatus::Optimal);
      if (!agreed_z) agreed_z = *result.z;
      CHECK(*result.z == *agreed_z);

      std::set<std::vector<Rational>> xs;
      for (std::size_t t = 0; t < result.trace.size(); ++t) {
        const auto& rec = result.trace[t];
        xs.insert(rec.x);
        if (rec.delta) CHECK(*rec.delta > 0);
        if (t > 0) {
          const auto& prev = result.trace[t - 1];
          CHECK(rec.objective <= prev.objective);
          CHECK((rec.objective < prev.objective) == rec.new_bfs);  // strict decrease <=> moved
          CHECK(rec.degenerate_pivot == (*rec.step == 0));
          CHECK(rec.degenerate_pivot == !rec.new_bfs);
          CHECK(rec.degenerate_pivot == (rec.x == prev.x));
        }
      }
      CHECK(result.distinct_bfs_count == static_cast<std::int64_t>(xs.size()));

      const auto& last = result.trace.back();
      for (const auto& [j, cost] : last.reduced_costs) CHECK(cost >= 0);
      auto dual = lplab::dual_from_basis(lp, *result.optimal_basis);
      CHECK(*result.z == lplab::dot(lp.b, dual.y));  // strong duality at the optimum
    }
  }
}
