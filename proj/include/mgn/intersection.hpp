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
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mgn/levels.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// Psi-class intersection numbers <tau_{a1} ... tau_{an}>_g via the
/// Virasoro (DVV) recursion, seeded by <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24.
/// Brackets violating the dimension constraint sum(a) = 3g-3+n are zero by
/// convention, as are unstable ones.
class DvvTable {
 public:
  Rat bracket(int g, std::vector<int> alphas) {
    const int n = static_cast<int>(alphas.size());
    if (g < 0 || !LevelKey{g, n}.stable()) return Rat(0);
    for (int a : alphas)
      if (a < 0) return Rat(0);
    int dim = 0;
    for (int a : alphas) dim += a;
    if (dim != 3 * g - 3 + n) return Rat(0);

    std::sort(alphas.begin(), alphas.end());
    if (g == 0 && n == 3) return Rat(1);                       // <tau_0^3>_0
    if (g == 1 && n == 1) return Rat(1, 24);                   // <tau_1>_1
    const auto key = std::make_pair(g, alphas);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Distinguish the largest index; it is >= 1 for every non-seed bracket.
    const int k = alphas.back();
    if (k < 1) throw std::logic_error("DvvTable: no index to recurse on");
    std::vector<int> rest(alphas.begin(), alphas.end() - 1);
    const int m = static_cast<int>(rest.size());

    Rat sum(0);
    for (int j = 0; j < m; ++j) {
      std::vector<int> next = rest;
      next[j] = k + rest[j] - 1;
      sum += Rat(oddDoubleFactorialZ(2 * (k + rest[j]) - 1)) /
             Rat(oddDoubleFactorialZ(2 * rest[j] - 1)) * bracket(g, next);
    }
    for (int a = 0; a + 2 <= k; ++a) {
      const int b = k - 2 - a;
      const Rat weight = Rat(oddDoubleFactorialZ(2 * a + 1)) *
                         Rat(oddDoubleFactorialZ(2 * b + 1));
      Rat inner(0);
      {
        std::vector<int> next = rest;
        next.push_back(a);
        next.push_back(b);
        inner += bracket(g - 1, next);
      }
      for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> left{a}, right{b};
        for (int t = 0; t < m; ++t) (mask >> t & 1 ? left : right).push_back(rest[t]);
        for (int g1 = 0; g1 <= g; ++g1)
          inner += bracket(g1, left) * bracket(g - g1, right);
      }
      sum += weight * inner / Rat(2);
    }
    const Rat result = sum / Rat(oddDoubleFactorialZ(2 * k + 1));
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::map<std::pair<int, std::vector<int>>, Rat> memo_;
};

/// One-shot convenience wrapper around DvvTable.
inline Rat dvvIntersection(int g, const std::vector<int>& alphas) {
  DvvTable table;
  return table.bracket(g, alphas);
}

}  // namespace mgn
