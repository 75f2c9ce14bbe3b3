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

#include <algorithm>

#include "mgn/interpolate.hpp"
#include "mgn/recursion.hpp"

using mgn::EvalContext;
using mgn::LevelKey;
using mgn::PolyMap;
using mgn::Rat;

namespace {

// Fitted quasi-polynomials for every level strictly below `level`.
PolyMap fittedThrough(int level) {
  PolyMap fitted;
  for (const LevelKey key : mgn::levelsUpTo(level)) {
    EvalContext ctx(fitted);
    fitted.emplace(key, mgn::fitLevel(key.g, key.n, [&](const std::vector<long long>& b) {
                          return mgn::nbarValue(key, b, ctx);
                        }).qp);
  }
  return fitted;
}

}  // namespace

TEST_CASE("base cases", "[recursion]") {
  CHECK(mgn::nbarBase(LevelKey{0, 3}, {1, 1, 2}) == Rat(1));
  CHECK(mgn::nbarBase(LevelKey{0, 3}, {1, 2, 2}) == Rat(0));
  CHECK(mgn::nbarBase(LevelKey{1, 1}, {2}) == Rat(1, 2));
  CHECK(mgn::nbarBase(LevelKey{1, 1}, {3}) == Rat(0));
  CHECK(mgn::nbarBase(LevelKey{1, 1}, {4}) == Rat(3, 4));
  CHECK_THROWS(mgn::nbarBase(LevelKey{0, 4}, {1, 1, 1, 1}));
  CHECK_THROWS(mgn::nbarBase(LevelKey{1, 1}, {0}));
}

TEST_CASE("worked example and hand-expanded values", "[recursion]") {
  const PolyMap fitted = fittedThrough(1);
  EvalContext ctx(fitted);
  CHECK(mgn::nbarValue(LevelKey{1, 2}, {2, 2}, ctx) == Rat(17, 12));
  // six unordered pairs, each contributing 8, divided by the total perimeter
  CHECK(mgn::nbarValue(LevelKey{0, 4}, {2, 2, 2, 2}, ctx) == Rat(6));
  CHECK(mgn::nbarValue(LevelKey{0, 4}, {1, 1, 1, 1}, ctx) == Rat(3));
  // odd total perimeter
  CHECK(mgn::nbarValue(LevelKey{0, 4}, {1, 2, 2, 2}, ctx) == Rat(0));
}

TEST_CASE("input validation", "[recursion]") {
  const PolyMap fitted = fittedThrough(1);
  EvalContext ctx(fitted);
  CHECK_THROWS(mgn::nbarValue(LevelKey{0, 2}, {1, 1}, ctx));
  CHECK_THROWS(mgn::nbarValue(LevelKey{1, 2}, {0, 2}, ctx));
  CHECK_THROWS(mgn::nbarValue(LevelKey{1, 2}, {2}, ctx));
  // missing lower level
  PolyMap empty;
  EvalContext bare(empty);
  CHECK_THROWS(mgn::nbarValue(LevelKey{1, 2}, {2, 2}, bare));
}

TEST_CASE("permutation invariance and non-negativity", "[recursion]") {
  const PolyMap fitted = fittedThrough(2);
  EvalContext ctx(fitted);
  const Rat reference = mgn::nbarValue(LevelKey{0, 5}, {2, 2, 4, 4, 6}, ctx);
  CHECK(reference > Rat(0));
  std::vector<long long> v{2, 2, 4, 4, 6};
  std::sort(v.begin(), v.end());
  do {
    CHECK(mgn::nbarValue(LevelKey{0, 5}, v, ctx) == reference);
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("memoized and fresh evaluation agree", "[recursion]") {
  const PolyMap fitted = fittedThrough(2);
  EvalContext warm(fitted);
  const Rat first = mgn::nbarValue(LevelKey{1, 3}, {2, 2, 2}, warm);
  const Rat second = mgn::nbarValue(LevelKey{1, 3}, {2, 2, 2}, warm);
  EvalContext cold(fitted);
  const Rat fresh = mgn::nbarValue(LevelKey{1, 3}, {2, 2, 2}, cold);
  CHECK(first == second);
  CHECK(first == fresh);
}

TEST_CASE("fitted polynomial agrees with the recursion at unseen points", "[recursion]") {
  PolyMap fitted = fittedThrough(2);
  EvalContext ctx(fitted);
  // points far outside the fitting grid
  for (const std::vector<long long>& b :
       {std::vector<long long>{20, 18, 16, 14}, {21, 19, 3, 1}, {30, 2, 2, 2}}) {
    CHECK(fitted.at(LevelKey{0, 4}).evaluate(b) == mgn::nbarValue(LevelKey{0, 4}, b, ctx));
  }
  CHECK(fitted.at(LevelKey{1, 2}).evaluate({12, 10}) ==
        mgn::nbarValue(LevelKey{1, 2}, {12, 10}, ctx));
}
