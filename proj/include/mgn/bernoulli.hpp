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

#include <stdexcept>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// First m+1 Bernoulli numbers B_0..B_m in the convention B_1 = -1/2,
/// B_2 = 1/6 (the one that makes the genus-one Euler characteristic -1/12),
/// via the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0.
inline std::vector<Rat> bernoulliUpTo(int m) {
  if (m < 0) throw std::invalid_argument("bernoulliUpTo: negative index");
  std::vector<Rat> b(m + 1);
  b[0] = Rat(1);
  for (int k = 1; k <= m; ++k) {
    Rat s(0);
    for (int j = 0; j < k; ++j) s += Rat(binomialZ(k + 1, j)) * b[j];
    b[k] = -s / Rat(k + 1);
  }
  return b;
}

inline Rat bernoulli(int m) { return bernoulliUpTo(m)[m]; }

}  // namespace mgn
