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

#include "mgn/eulerchi.hpp"
#include "mgn/pipeline.hpp"
#include "mgn/statesum.hpp"

using mgn::LevelKey;
using mgn::Poly;
using mgn::Rat;

namespace {

const mgn::ValueStore& levelThreeStore() {
  static const mgn::ValueStore store = mgn::pipelineRun(3);
  return store;
}

}  // namespace

TEST_CASE("smooth counts recovered by inversion", "[statesum]") {
  const auto& store = levelThreeStore();

  // (0,3): no boundary strata
  CHECK(store.smooth.at(LevelKey{0, 3}).coset(0) == Poly::constant(3, Rat(1)));

  // (1,2): (1/384)(b1^4 + b2^4 + 2 b1^2 b2^2 - 12 b1^2 - 12 b2^2 + 32)
  Poly n12(2);
  n12.addTerm({2, 0}, Rat(1, 384));
  n12.addTerm({0, 2}, Rat(1, 384));
  n12.addTerm({1, 1}, Rat(1, 192));
  n12.addTerm({1, 0}, Rat(-1, 32));
  n12.addTerm({0, 1}, Rat(-1, 32));
  n12.addTerm({0, 0}, Rat(1, 12));
  CHECK(store.smooth.at(LevelKey{1, 2}).coset(0) == n12);

  // (0,4): (1/4) sum b_i^2 - 1
  Poly n04(4);
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(4, 0);
    e[i] = 1;
    n04.addTerm(e, Rat(1, 4));
  }
  n04.addTerm({0, 0, 0, 0}, Rat(-1));
  CHECK(store.smooth.at(LevelKey{0, 4}).coset(0) == n04);

  // genus-one constant term is the open Euler characteristic -1/12
  CHECK(store.smooth.at(LevelKey{1, 1}).constantTerm() == Rat(-1, 12));
}

TEST_CASE("state sum rebuilds the compactified counts", "[statesum]") {
  const auto& store = levelThreeStore();
  for (const auto& [key, qp] : store.nbar) {
    const mgn::QuasiPoly rebuilt = mgn::stateSumNbar(key.g, key.n, store.smooth);
    CHECK(rebuilt == qp);
  }
  // (1,1) decomposes as (b^2-4)/48 + (1/2) * 1
  const mgn::QuasiPoly nbar11 = mgn::stateSumNbar(1, 1, store.smooth);
  CHECK(nbar11.evaluate({2}) == Rat(1, 2));
  CHECK(nbar11.constantTerm() == Rat(5, 12));
}

TEST_CASE("missing vertex polynomial is reported", "[statesum]") {
  const auto& store = levelThreeStore();
  mgn::PolyMap partial;
  partial.emplace(LevelKey{0, 3}, store.smooth.at(LevelKey{0, 3}));
  CHECK_THROWS_WITH(mgn::stateSumNbar(1, 2, partial),
                    Catch::Matchers::ContainsSubstring("missing smooth count"));
}

TEST_CASE("stratification Euler characteristics", "[statesum]") {
  CHECK(mgn::chiCompactifiedViaStrata(0, 4, mgn::chiOpen) == Rat(2));
  CHECK(mgn::chiCompactifiedViaStrata(1, 1, mgn::chiOpen) == Rat(5, 12));
  CHECK(mgn::chiCompactifiedViaStrata(0, 5, mgn::chiOpen) == Rat(7));
  CHECK(mgn::chiCompactifiedViaStrata(1, 2, mgn::chiOpen) == Rat(1, 2));
  CHECK(mgn::chiCompactifiedViaStrata(2, 1, mgn::chiOpen) == Rat(247, 1440));
}
