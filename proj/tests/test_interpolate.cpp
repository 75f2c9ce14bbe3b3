// Copyright 2026 The mgn Authors
//
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

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "mgn/interpolate.hpp"
#include "mgn/recursion.hpp"

using mgn::EvalContext;
using mgn::LevelKey;
using mgn::Poly;
using mgn::PolyMap;
using mgn::Rat;

TEST_CASE("monomial bases are one representative per block orbit", "[interpolate]") {
  // n=1, k=0, D=1: {1, x}
  CHECK(mgn::monomialBasis(1, 0, 1).size() == 2);
  // n=2, k=0, D=2: {1, sym(x1), sym(x1^2), x1 x2}
  const auto b2 = mgn::monomialBasis(2, 0, 2);
  CHECK(b2.size() == 4);
  // n=3, k=2, D=1: {1, odd-block x1, even-block x3}
  const auto b3 = mgn::monomialBasis(3, 2, 1);
  CHECK(b3.size() == 3);
  CHECK(std::set<std::vector<int>>(b3.begin(), b3.end()) ==
        std::set<std::vector<int>>{{0, 0, 0}, {1, 0, 0}, {0, 0, 1}});
  // representatives are non-increasing within each block
  for (const auto& rep : mgn::monomialBasis(5, 2, 3)) {
    CHECK(rep[0] >= rep[1]);
    CHECK((rep[2] >= rep[3] && rep[3] >= rep[4]));
    CHECK(std::accumulate(rep.begin(), rep.end(), 0) <= 3);
  }
}

TEST_CASE("sample grids are parity-correct with spare validation points", "[interpolate]") {
  const auto grid = mgn::sampleGrid(1, 2, 2);
  CHECK(grid.fit.size() == grid.basis.size());
  CHECK(grid.validation.size() >= 3);
  auto checkParity = [](const std::vector<long long>& b) {
    CHECK(b[0] % 2 == 1);
    CHECK(b[1] % 2 == 1);
    CHECK(b[0] >= 1);
  };
  for (const auto& b : grid.fit) checkParity(b);
  for (const auto& b : grid.validation) checkParity(b);
  CHECK_THROWS_AS(mgn::sampleGrid(0, 4, 1), std::invalid_argument);
}

TEST_CASE("fitting the base levels reproduces the closed forms", "[interpolate]") {
  PolyMap none;
  EvalContext ctx(none);
  const auto fit03 = mgn::fitLevel(0, 3, [&](const std::vector<long long>& b) {
    return mgn::nbarValue(LevelKey{0, 3}, b, ctx);
  });
  CHECK(fit03.qp.coset(0) == Poly::constant(3, Rat(1)));
  CHECK(fit03.qp.coset(2) == Poly::constant(3, Rat(1)));
  CHECK(fit03.qp.coset(1).isZero());

  const auto fit11 = mgn::fitLevel(1, 1, [&](const std::vector<long long>& b) {
    return mgn::nbarValue(LevelKey{1, 1}, b, ctx);
  });
  Poly expected(1);
  expected.addTerm({1}, Rat(1, 48));
  expected.addTerm({0}, Rat(5, 12));
  CHECK(fit11.qp.coset(0) == expected);
}

TEST_CASE("fitting on a disjoint grid yields the identical polynomial", "[interpolate]") {
  PolyMap fitted;
  for (const LevelKey key : mgn::levelsUpTo(1)) {
    EvalContext ctx(fitted);
    fitted.emplace(key, mgn::fitLevel(key.g, key.n, [&](const std::vector<long long>& b) {
                          return mgn::nbarValue(key, b, ctx);
                        }).qp);
  }
  EvalContext ctx(fitted);
  const auto evaluator = [&](const std::vector<long long>& b) {
    return mgn::nbarValue(LevelKey{0, 4}, b, ctx);
  };
  const auto direct = mgn::fitLevel(0, 4, evaluator);

  // Re-solve every class on samples shifted by +2 (still parity-correct,
  // disjoint from the smallest-first grid).
  for (int k = 0; k <= 4; k += 2) {
    const auto grid = mgn::sampleGrid(0, 4, k);
    const int m = static_cast<int>(grid.basis.size());
    mgn::Matrix a(m, std::vector<Rat>(m));
    std::vector<Rat> rhs(m);
    for (int r = 0; r < m; ++r) {
      std::vector<long long> shifted = grid.fit[r];
      for (auto& v : shifted) v += 2;
      std::vector<Rat> x;
      for (long long v : shifted) x.emplace_back(Rat(v) * Rat(v));
      for (int c = 0; c < m; ++c)
        a[r][c] = mgn::detail::orbitValue(grid.basis[c], k, x);
      rhs[r] = evaluator(shifted);
    }
    const auto coef = mgn::solveExact(a, rhs);
    Poly p(4);
    for (int c = 0; c < m; ++c)
      for (const auto& e : mgn::detail::orbitOf(grid.basis[c], k)) p.addTerm(e, coef[c]);
    CHECK(p == direct.qp.coset(k));
  }
}
