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
#include "lplab/io.hpp"
#include "lplab/simplex.hpp"
#include "test_instances.hpp"

using lplab::Basis;
using lplab::LinearProgram;
using lplab::Matrix;
using lplab::MdpSpec;
using lplab::Rational;
using lplab::TuNetworkSpec;

TEST_CASE("mdp assembly matches the two-action formulation") {
  // Identity transitions, m = 2, theta = 1/2.
  MdpSpec spec;
  spec.m = 2;
  spec.theta = Rational(1, 2);
  spec.p1 = Matrix::identity(2);
  spec.p2 = Matrix::identity(2);
  spec.c1 = {Rational(1), Rational(2)};
  spec.c2 = {Rational(3), Rational(4)};
  auto lp = lplab::to_lp(spec);
  auto expected = lplab::testing::matrix_from_rows(
      {{Rational(1, 2), 0, Rational(1, 2), 0}, {0, Rational(1, 2), 0, Rational(1, 2)}});
  CHECK(lp.a == expected);
  CHECK(lp.b == std::vector<Rational>{1, 1});
  CHECK(lp.c == std::vector<Rational>{1, 2, 3, 4});
}

TEST_CASE("mdp rows are stochastic and diagonals stay positive") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto spec = lplab::gen_mdp_spec(3, Rational(3, 4), seed);
    for (const Matrix* p : {&spec.p1, &spec.p2}) {
      for (std::size_t i = 0; i < 3; ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          CHECK((*p)(i, j) >= 0);
          sum += (*p)(i, j);
        }
        CHECK(sum == 1);
      }
    }
    auto lp = lplab::to_lp(spec);
    for (std::size_t j = 0; j < 6; ++j) CHECK(lp.a(j % 3, j) >= 1 - spec.theta);
  }
}

TEST_CASE("mdp m=1 has both vertices at 1/(1-theta)") {
  auto lp = lplab::gen_mdp(1, Rational(1, 2), 42);
  CHECK(lp.a(0, 0) == Rational(1, 2));
  CHECK(lp.a(0, 1) == Rational(1, 2));
  auto census = lplab::enumerate_vertices(lp);
  CHECK(census.delta == 2);  // 1/(1-theta)
  CHECK(census.gamma == 2);
  CHECK(census.gamma <= Rational(1) / (1 - Rational(1, 2)));  // m/(1-theta), with equality
}

TEST_CASE("mdp censuses at small m satisfy the three asserted properties") {
  lplab::SeededRng seeds(5150);
  for (std::int64_t m : {1, 2, 3}) {
    for (int i = 0; i < 3; ++i) {
      auto lp = lplab::gen_mdp(m, Rational(1, 2), seeds.next_u64());
      auto census = lplab::enumerate_vertices(lp);
      CHECK(census.all_nondegenerate);
      CHECK(census.delta >= 1);
      CHECK(census.gamma <= Rational(m) / (1 - Rational(1, 2)));
      // Every feasible BFS has exactly m nonzero entries.
      for (const auto& sol : census.feasible_bases) {
        int nonzeros = 0;
        for (const auto& q : sol.x) nonzeros += q != 0 ? 1 : 0;
        CHECK(nonzeros == static_cast<int>(m));
      }
    }
  }
}

TEST_CASE("tu network single arc reduces to A=[1]") {
  TuNetworkSpec spec;
  spec.nodes = 2;
  spec.arcs = {{0, 1}};
  spec.supplies = {Rational(1), Rational(-1)};
  spec.costs = {Rational(1)};
  auto lp = lplab::to_lp(spec);
  CHECK(lp.num_rows() == 1);
  CHECK(lp.num_cols() == 1);
  CHECK(lp.a(0, 0) == 1);
  CHECK(lp.b == std::vector<Rational>{1});
}

TEST_CASE("tu directed triangle gives a 2x3 incidence with entries in {-1,0,1}") {
  TuNetworkSpec spec;
  spec.nodes = 3;
  spec.arcs = {{0, 1}, {1, 2}, {2, 0}};
  spec.supplies = {Rational(1), Rational(0), Rational(-1)};
  spec.costs = {Rational(1), Rational(1), Rational(1)};
  auto lp = lplab::to_lp(spec);
  CHECK(lp.num_rows() == 2);
  CHECK(lp.num_cols() == 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK((lp.a(i, j) == 0 || lp.a(i, j) == 1 || lp.a(i, j) == -1));
}

TEST_CASE("generated tu networks are TU, integral and feasible") {
  lplab::SeededRng seeds(88);
  for (int i = 0; i < 6; ++i) {
    auto spec = lplab::gen_tu_network_spec(4, 6, seeds.next_u64());
    Rational total = 0;
    for (const auto& s : spec.supplies) total += s;
    CHECK(total == 0);
    auto lp = lplab::gen_tu_network(4, 6, seeds.next_u64());
    CHECK(lplab::is_totally_unimodular(lp.a));
    for (const auto& q : lp.b) CHECK(lplab::is_integral(q));
    auto census = lplab::enumerate_vertices(lp);  // feasible by construction
    CHECK(census.delta >= 1);
    CHECK(census.gamma <= lplab::l1_norm(lp.b));
    for (const auto& sol : census.feasible_bases)
      for (const auto& q : sol.x) CHECK(lplab::is_integral(q));
  }
}

TEST_CASE("is_totally_unimodular oracle") {
  CHECK(lplab::is_totally_unimodular(Matrix::identity(4)));
  auto bad = lplab::testing::matrix_from_rows({{1, 1}, {-1, 1}});
  CHECK(!lplab::is_totally_unimodular(bad));  // det = 2
  CHECK_THROWS_AS(lplab::is_totally_unimodular(Matrix::identity(30), 100),
                  lplab::BudgetExceededError);
}

TEST_CASE("klee-minty shapes and census ratio") {
  auto d1 = lplab::gen_klee_minty(1);
  CHECK(d1.num_rows() == 1);
  CHECK(d1.num_cols() == 2);
  CHECK(d1.a(0, 0) == 1);
  CHECK(d1.a(0, 1) == 1);
  CHECK(d1.b == std::vector<Rational>{1});
  CHECK(d1.c == std::vector<Rational>{-1, 0});

  auto d2 = lplab::gen_klee_minty(2);
  auto start = lplab::phase_one(d2);
  REQUIRE(start.has_value());
  auto result = lplab::solve(d2, *start, lplab::PivotRule::MostNegative);
  REQUIRE(result.status == lplab::SolveStatus::Optimal);
  CHECK(result.distinct_bfs_count >= 2);  // visits multiple vertices

  auto census3 = lplab::enumerate_vertices(lplab::gen_klee_minty(3));
  CHECK(census3.gamma / census3.delta >= 4);
}

TEST_CASE("random dense instances are feasible, full rank and bounded") {
  lplab::SeededRng seeds(1234);
  for (int i = 0; i < 8; ++i) {
    auto lp = lplab::gen_random_dense(3, 7, seeds.next_u64());
    CHECK(lplab::rank(lp.a) == 3);
    auto start = lplab::phase_one(lp);
    REQUIRE(start.has_value());  // feasible by construction
    auto result = lplab::solve(lp, *start, lplab::PivotRule::MostNegative);
    CHECK(result.status == lplab::SolveStatus::Optimal);
  }
}

TEST_CASE("generators are deterministic functions of their seed") {
  auto a1 = lplab::gen_random_dense(3, 6, 99);
  auto a2 = lplab::gen_random_dense(3, 6, 99);
  auto bytes = [](const LinearProgram& lp) {
    return lplab::lp_file_to_json(lplab::LpFile{lp, std::nullopt, {}}).dump();
  };
  CHECK(bytes(a1) == bytes(a2));
  CHECK(bytes(lplab::gen_mdp(2, Rational(1, 2), 7)) == bytes(lplab::gen_mdp(2, Rational(1, 2), 7)));
  CHECK(bytes(lplab::gen_tu_network(4, 6, 3)) == bytes(lplab::gen_tu_network(4, 6, 3)));
  CHECK(bytes(a1) != bytes(lplab::gen_random_dense(3, 6, 100)));
}
