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

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mgn/polynomial.hpp"

namespace mgn {

/// One reference polynomial: the parity-class-k compactified count of type
/// (g,n), in the squared variables with the k odd slots first.
struct TableRow {
  int g;
  int n;
  int k;
  Poly poly;
};

namespace detail {

// coef * (sum over all distinct arrangements of the exponent multiset over
// the n squared variables).
inline void addFullSym(Poly& p, int n, std::vector<int> exps, const Rat& coef) {
  exps.resize(n, 0);
  std::sort(exps.begin(), exps.end());
  do {
    p.addTerm(exps, coef);
  } while (std::next_permutation(exps.begin(), exps.end()));
}

inline void addSingle(Poly& p, int n, int var, int exp, const Rat& coef) {
  std::vector<int> e(n, 0);
  e[var] = exp;
  p.addTerm(e, coef);
}

}  // namespace detail

/// The reference table of compactified lattice point polynomials through
/// (0,6), (1,3) and (2,1).
inline const std::vector<TableRow>& referenceTable() {
  static const std::vector<TableRow> rows = [] {
    using detail::addFullSym;
    using detail::addSingle;
    std::vector<TableRow> t;

    {  // (0,3), k = 0 and k = 2: a single point.
      Poly p = Poly::constant(3, Rat(1));
      t.push_back({0, 3, 0, p});
      t.push_back({0, 3, 2, p});
    }
    {  // (1,1), k = 0: (b^2 + 20)/48.
      Poly p(1);
      p.addTerm({1}, Rat(1, 48));
      p.addTerm({0}, Rat(5, 12));
      t.push_back({1, 1, 0, p});
    }
    {  // (0,4): (sum b_i^2 + c)/4 with c = 8, 2, 8.
      for (auto [k, c] : {std::pair{0, Rat(2)}, {2, Rat(1, 2)}, {4, Rat(2)}}) {
        Poly p(4);
        addFullSym(p, 4, {1}, Rat(1, 4));
        p.addTerm({0, 0, 0, 0}, c);
        t.push_back({0, 4, k, p});
      }
    }
    {  // (1,2): (b1^4 + b2^4 + 2 b1^2 b2^2 + 36 b1^2 + 36 b2^2 + c)/384.
      for (auto [k, c] : {std::pair{0, Rat(1, 2)}, {2, Rat(7, 32)}}) {
        Poly p(2);
        addFullSym(p, 2, {2}, Rat(1, 384));
        addFullSym(p, 2, {1, 1}, Rat(1, 192));
        addFullSym(p, 2, {1}, Rat(3, 32));
        p.addTerm({0, 0}, c);
        t.push_back({1, 2, k, p});
      }
    }
    {  // (0,5), k = 0.
      Poly p(5);
      addFullSym(p, 5, {2}, Rat(1, 32));
      addFullSym(p, 5, {1, 1}, Rat(1, 8));
      addFullSym(p, 5, {1}, Rat(7, 8));
      p.addTerm({0, 0, 0, 0, 0}, Rat(7));
      t.push_back({0, 5, 0, p});
    }
    {  // (0,5), k = 2: odd slots carry 5/16, even slots 1/8.
      Poly p(5);
      addFullSym(p, 5, {2}, Rat(1, 32));
      addFullSym(p, 5, {1, 1}, Rat(1, 8));
      addSingle(p, 5, 0, 1, Rat(5, 16));
      addSingle(p, 5, 1, 1, Rat(5, 16));
      for (int v = 2; v < 5; ++v) addSingle(p, 5, v, 1, Rat(1, 8));
      p.addTerm({0, 0, 0, 0, 0}, Rat(19, 16));
      t.push_back({0, 5, 2, p});
    }
    {  // (0,5), k = 4.
      Poly p(5);
      addFullSym(p, 5, {2}, Rat(1, 32));
      addFullSym(p, 5, {1, 1}, Rat(1, 8));
      for (int v = 0; v < 4; ++v) addSingle(p, 5, v, 1, Rat(5, 16));
      addSingle(p, 5, 4, 1, Rat(7, 8));
      p.addTerm({0, 0, 0, 0, 0}, Rat(7, 8));
      t.push_back({0, 5, 4, p});
    }
    {  // (1,3), k = 0.
      Poly p(3);
      addFullSym(p, 3, {3}, Rat(1, 4608));
      addFullSym(p, 3, {2, 1}, Rat(1, 768));
      addFullSym(p, 3, {1, 1, 1}, Rat(1, 384));
      addFullSym(p, 3, {2}, Rat(13, 1152));
      addFullSym(p, 3, {1, 1}, Rat(1, 24));
      addFullSym(p, 3, {1}, Rat(29, 144));
      p.addTerm({0, 0, 0}, Rat(17, 12));
      t.push_back({1, 3, 0, p});
    }
    {  // (1,3), k = 2: quartic and quadratic parts split by parity block.
      Poly p(3);
      addFullSym(p, 3, {3}, Rat(1, 4608));
      addFullSym(p, 3, {2, 1}, Rat(1, 768));
      addFullSym(p, 3, {1, 1, 1}, Rat(1, 384));
      addSingle(p, 3, 0, 2, Rat(43, 4608));
      addSingle(p, 3, 1, 2, Rat(43, 4608));
      addSingle(p, 3, 2, 2, Rat(13, 1152));
      addFullSym(p, 3, {1, 1}, Rat(1, 24));
      addSingle(p, 3, 0, 1, Rat(277, 4608));
      addSingle(p, 3, 1, 1, Rat(277, 4608));
      addSingle(p, 3, 2, 1, Rat(35, 576));
      p.addTerm({0, 0, 0}, Rat(81, 256));
      t.push_back({1, 3, 2, p});
    }
    {  // (2,1), k = 0.
      Poly p(1);
      p.addTerm({4}, Rat(1, 1769472));
      p.addTerm({3}, Rat(3, 40960));
      p.addTerm({2}, Rat(133, 61440));
      p.addTerm({1}, Rat(1087, 34560));
      p.addTerm({0}, Rat(247, 1440));
      t.push_back({2, 1, 0, p});
    }
    {  // (0,6), k = 0.
      Poly p(6);
      addFullSym(p, 6, {3}, Rat(1, 384));
      addFullSym(p, 6, {2, 1}, Rat(3, 128));
      addFullSym(p, 6, {1, 1, 1}, Rat(3, 32));
      addFullSym(p, 6, {2}, Rat(1, 6));
      addFullSym(p, 6, {1, 1}, Rat(9, 16));
      addFullSym(p, 6, {1}, Rat(109, 24));
      p.addTerm({0, 0, 0, 0, 0, 0}, Rat(34));
      t.push_back({0, 6, 0, p});
    }
    return t;
  }();
  return rows;
}

}  // namespace mgn
