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

#include "mgn/intersection.hpp"

using mgn::DvvTable;
using mgn::Rat;

TEST_CASE("seeds and small brackets", "[intersection]") {
  DvvTable t;
  CHECK(t.bracket(0, {0, 0, 0}) == Rat(1));
  CHECK(t.bracket(1, {1}) == Rat(1, 24));
  CHECK(t.bracket(1, {0, 2}) == Rat(1, 24));
  CHECK(t.bracket(1, {1, 1}) == Rat(1, 24));
  CHECK(t.bracket(0, {1, 0, 0, 0}) == Rat(1));
  CHECK(t.bracket(2, {4}) == Rat(1, 1152));
  CHECK(t.bracket(2, {2, 3}) == Rat(29, 5760));
  CHECK(t.bracket(3, {7}) == Rat(1, 82944));
}

TEST_CASE("dimension mismatch and instability give zero", "[intersection]") {
  DvvTable t;
  CHECK(t.bracket(0, {0, 0, 0, 0}) == Rat(0));
  CHECK(t.bracket(1, {2}) == Rat(0));
  CHECK(t.bracket(0, {5}) == Rat(0));
  CHECK(t.bracket(0, {0, 0}) == Rat(0));
  CHECK(t.bracket(-1, {0}) == Rat(0));
}

TEST_CASE("genus-0 brackets match the multinomial closed form", "[intersection]") {
  // <tau_{a1}...tau_{an}>_0 = (n-3)! / prod a_i!  when sum a_i = n-3
  DvvTable t;
  const std::vector<std::vector<int>> cases = {
      {0, 0, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 2}, {0, 0, 0, 0, 1, 2},
      {0, 0, 0, 0, 0, 3}, {1, 1, 1, 0, 0, 0}, {2, 2, 0, 0, 0, 0, 0}};
  for (const auto& alphas : cases) {
    const int n = static_cast<int>(alphas.size());
    const int total = std::accumulate(alphas.begin(), alphas.end(), 0);
    REQUIRE(total == n - 3);
    mpz_class denom = 1;
    for (int a : alphas) denom *= mgn::factorialZ(a);
    CHECK(t.bracket(0, alphas) == Rat(mgn::factorialZ(n - 3)) / Rat(denom));
  }
}

TEST_CASE("string equation for brackets", "[intersection]") {
  // <tau_0 prod tau_{a_i}> = sum_j <prod with a_j lowered by one>
  DvvTable t;
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {1, {1, 1}}, {1, {0, 2}}, {2, {1, 4}}, {2, {2, 3}}, {0, {0, 1, 1, 1}},
      {2, {0, 2, 3}}, {3, {3, 5}}};
  for (const auto& [g, alphas] : cases) {
    std::vector<int> withZero = alphas;
    withZero.push_back(0);
    Rat rhs(0);
    for (size_t j = 0; j < alphas.size(); ++j) {
      if (alphas[j] == 0) continue;
      std::vector<int> lowered = alphas;
      --lowered[j];
      rhs += t.bracket(g, lowered);
    }
    CHECK(t.bracket(g, withZero) == rhs);
  }
}

TEST_CASE("dilaton equation for brackets", "[intersection]") {
  // <tau_1 prod tau_{a_i}>_g = (2g-2+n) <prod tau_{a_i}>_g
  DvvTable t;
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {1, {1}}, {2, {4}}, {0, {0, 0, 0}}, {0, {1, 0, 0, 0}}, {2, {2, 3}}};
  for (const auto& [g, alphas] : cases) {
    std::vector<int> withOne = alphas;
    withOne.push_back(1);
    const int n = static_cast<int>(alphas.size());
    CHECK(t.bracket(g, withOne) == Rat(2 * g - 2 + n) * t.bracket(g, alphas));
  }
}
