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

#include "lplab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lplab/errors.hpp"
#include "lplab/simplex.hpp"

namespace lplab {

namespace {

// Random stochastic row: small integer numerators normalized by their sum,
// which keeps rational bit sizes bounded.
std::vector<Rational> random_stochastic_row(std::int64_t m, SeededRng& rng) {
  std::vector<std::int64_t> weights(static_cast<std::size_t>(m));
  std::int64_t total = 0;
  while (total == 0) {
    for (auto& w : weights) w = rng.next_int(0, 9);
    total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
  }
  std::vector<Rational> row(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) row[j] = Rational(weights[j], total);
  return row;
}

std::string rational_tag(const Rational& q) {
  std::string s = format_rational(q);
  std::replace(s.begin(), s.end(), '/', '_');
  return s;
}

}  // namespace

MdpSpec gen_mdp_spec(std::int64_t m, const Rational& theta, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("gen_mdp: m must be >= 1");
  if (theta <= 0 || theta >= 1) throw std::invalid_argument("gen_mdp: need 0 < theta < 1");

  SeededRng rng(seed);
  MdpSpec spec;
  spec.m = m;
  spec.theta = theta;
  spec.p1 = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  spec.p2 = Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (Matrix* p : {&spec.p1, &spec.p2}) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      std::vector<Rational> row = random_stochastic_row(m, rng);
      for (std::size_t j = 0; j < row.size(); ++j) (*p)(i, j) = row[j];
    }
  }
  spec.c1.resize(static_cast<std::size_t>(m));
  spec.c2.resize(static_cast<std::size_t>(m));
  for (auto& c : spec.c1) c = rng.next_int(-9, 9);
  for (auto& c : spec.c2) c = rng.next_int(-9, 9);
  return spec;
}

LinearProgram to_lp(const MdpSpec& spec) {
  const std::size_t m = static_cast<std::size_t>(spec.m);
  Matrix a(m, 2 * m);
  // Occupancy orientation: column j of block k is e_j - theta * (row j of Pk).
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = (i == j ? Rational(1) : Rational(0)) - spec.theta * spec.p1(j, i);
      a(i, m + j) = (i == j ? Rational(1) : Rational(0)) - spec.theta * spec.p2(j, i);
    }
  }
  std::vector<Rational> b(m, Rational(1));
  std::vector<Rational> c(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    c[j] = spec.c1[j];
    c[m + j] = spec.c2[j];
  }
  return LinearProgram(std::move(a), std::move(b), std::move(c),
                       "mdp_m" + std::to_string(spec.m) + "_theta_" + rational_tag(spec.theta));
}

LinearProgram gen_mdp(std::int64_t m, const Rational& theta, std::uint64_t seed) {
  LinearProgram lp = to_lp(gen_mdp_spec(m, theta, seed));
  lp.name += "_seed" + std::to_string(seed);
  return validate(std::move(lp));
}

TuNetworkSpec gen_tu_network_spec(std::int64_t nodes, std::int64_t arcs, std::uint64_t seed) {
  if (nodes < 2) throw std::invalid_argument("gen_tu_network: need >= 2 nodes");
  if (arcs < nodes - 1)
    throw GenerationFailedError("gen_tu_network: too few arcs to connect the graph");

  SeededRng rng(seed);
  TuNetworkSpec spec;
  spec.nodes = nodes;

  // Random spanning tree keeps the (undirected) graph connected, which makes
  // the reduced incidence matrix full row rank; extra arcs are arbitrary.
  for (std::int64_t v = 1; v < nodes; ++v) {
    std::int64_t u = rng.next_int(0, v - 1);
    if (rng.next_int(0, 1) == 0)
      spec.arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    else
      spec.arcs.emplace_back(static_cast<int>(v), static_cast<int>(u));
  }
  while (static_cast<std::int64_t>(spec.arcs.size()) < arcs) {
    std::int64_t tail = rng.next_int(0, nodes - 1);
    std::int64_t head = rng.next_int(0, nodes - 1);
    if (tail == head) continue;
    spec.arcs.emplace_back(static_cast<int>(tail), static_cast<int>(head));
  }

  // Supplies from a random nonnegative integral flow, so the program is
  // feasible (and bounded: costs are nonnegative). Resample b = 0.
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> supplies(static_cast<std::size_t>(nodes), Rational(0));
    bool nonzero = false;
    std::vector<Rational> flow(spec.arcs.size());
    for (std::size_t e = 0; e < spec.arcs.size(); ++e) flow[e] = rng.next_int(0, 3);
    for (std::size_t e = 0; e < spec.arcs.size(); ++e) {
      supplies[static_cast<std::size_t>(spec.arcs[e].first)] += flow[e];
      supplies[static_cast<std::size_t>(spec.arcs[e].second)] -= flow[e];
    }
    for (std::size_t i = 0; i + 1 < supplies.size(); ++i) nonzero = nonzero || supplies[i] != 0;
    if (!nonzero) continue;
    spec.supplies = std::move(supplies);
    break;
  }
  if (spec.supplies.empty())
    throw GenerationFailedError("gen_tu_network: could not draw a nonzero supply vector");

  spec.costs.resize(spec.arcs.size());
  for (auto& cost : spec.costs) cost = rng.next_int(0, 9);
  return spec;
}

LinearProgram to_lp(const TuNetworkSpec& spec) {
  const std::size_t m = static_cast<std::size_t>(spec.nodes - 1);
  Matrix a(m, spec.arcs.size());
  for (std::size_t e = 0; e < spec.arcs.size(); ++e) {
    auto [tail, head] = spec.arcs[e];
    if (static_cast<std::size_t>(tail) < m) a(static_cast<std::size_t>(tail), e) = 1;
    if (static_cast<std::size_t>(head) < m) a(static_cast<std::size_t>(head), e) = -1;
  }
  std::vector<Rational> b(spec.supplies.begin(), spec.supplies.end() - 1);
  return LinearProgram(std::move(a), std::move(b), spec.costs,
                       "tu_network_n" + std::to_string(spec.nodes) + "_a" +
                           std::to_string(spec.arcs.size()));
}

LinearProgram gen_tu_network(std::int64_t nodes, std::int64_t arcs, std::uint64_t seed) {
  LinearProgram lp = to_lp(gen_tu_network_spec(nodes, arcs, seed));
  lp.name += "_seed" + std::to_string(seed);
  return validate(std::move(lp));
}

bool is_totally_unimodular(const Matrix& a, std::int64_t budget) {
  const std::size_t m = a.rows(), n = a.cols();

  BigInt total = 0;
  {
    // sum_k C(m,k) * C(n,k)
    BigInt cm = 1, cn = 1;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
      cm = cm * static_cast<unsigned long>(m - k + 1) / static_cast<unsigned long>(k);
      cn = cn * static_cast<unsigned long>(n - k + 1) / static_cast<unsigned long>(k);
      total += cm * cn;
    }
    if (total > budget)
      throw BudgetExceededError("is_totally_unimodular: " + total.str() +
                                " submatrices exceed budget " + std::to_string(budget));
  }

  auto first_subset = [](std::size_t k) {
    std::vector<int> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<int>(i);
    return s;
  };
  auto advance = [](std::vector<int>& s, std::size_t limit) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
      if (s[i] < static_cast<int>(limit - k + i)) {
        ++s[i];
        for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::vector<int> rows = first_subset(k);
    do {
      std::vector<int> cols = first_subset(k);
      do {
        Rational det = determinant(a.submatrix(rows, cols));
        if (det != 0 && det != 1 && det != -1) return false;
      } while (advance(cols, n));
    } while (advance(rows, m));
  }
  return true;
}

LinearProgram gen_klee_minty(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("gen_klee_minty: d must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(d);
  Matrix a(dim, 2 * dim);
  std::vector<Rational> b(dim);
  std::vector<Rational> c(2 * dim, Rational(0));
  Rational rhs = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) a(i, j) = 2;
    a(i, i) = 1;
    a(i, dim + i) = 1;  // slack
    b[i] = rhs;
    rhs *= 2;
  }
  c[dim - 1] = -1;
  return validate(
      LinearProgram(std::move(a), std::move(b), std::move(c), "klee_minty_d" + std::to_string(d)));
}

LinearProgram gen_random_dense(std::int64_t m, std::int64_t n, std::uint64_t seed) {
  if (m < 1 || n <= m) throw std::invalid_argument("gen_random_dense: need n > m >= 1");
  const std::size_t rows = static_cast<std::size_t>(m), cols = static_cast<std::size_t>(n);
  SeededRng rng(seed);
  std::string name =
      "random_m" + std::to_string(m) + "_n" + std::to_string(n) + "_seed" + std::to_string(seed);

  Matrix a(rows, cols);
  bool full_rank = false;
  for (int attempt = 0; attempt < 100 && !full_rank; ++attempt) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        a(i, j) = Rational(rng.next_int(-6, 6), rng.next_int(1, 3));
    full_rank = rank(a) == rows;
  }
  if (!full_rank) throw GenerationFailedError(name + ": no full-rank matrix found");

  // Feasible by construction: b is A times a nonnegative point with at
  // least m positive entries.
  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = cols; i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(i) - 1))]);
  std::int64_t positive = rng.next_int(m, n);
  std::vector<Rational> x_hat(cols, Rational(0));
  for (std::int64_t k = 0; k < positive; ++k)
    x_hat[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] =
        Rational(rng.next_int(1, 5), rng.next_int(1, 2));
  std::vector<Rational> b = multiply(a, x_hat);

  std::optional<Basis> start;
  std::vector<Rational> c(cols, Rational(0));
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (auto& q : c) q = rng.next_int(-9, 9);
    LinearProgram candidate(a, b, c, name);
    if (!start) start = phase_one(candidate);  // c-independent, computed once
    SolveResult probe = solve(candidate, *start, PivotRule::MostNegative);
    if (probe.status == SolveStatus::Optimal) return validate(std::move(candidate));
  }
  throw GenerationFailedError(name + ": no bounded objective found");
}

}  // namespace lplab
