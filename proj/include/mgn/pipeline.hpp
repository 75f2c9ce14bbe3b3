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
#include <stdexcept>
#include <utility>

#include "mgn/eulerchi.hpp"
#include "mgn/interpolate.hpp"
#include "mgn/recursion.hpp"
#include "mgn/statesum.hpp"
#include "mgn/store.hpp"

namespace mgn {

/// Largest genus whose one-pointed type fits within the level cap; its
/// constant term seeds the compactified Euler characteristic recursion.
inline int maxSeedGenus(int maxLevel) { return (maxLevel + 1) / 2; }

/// Euler characteristic tables derived from the fitted counts: one-pointed
/// constant terms seed the closed recursion, per-genus depth follows the
/// fitted range of the store (rows are deepened internally as the recursion
/// demands).
inline ChiTable chiFromStore(const ValueStore& store, int gMax, int extraDepth = 0) {
  return ChiTable::build(
      gMax,
      [&](int g) { return std::max(1, store.maxLevel - 2 * g + 2) + extraDepth; },
      [&](int g) {
        auto it = store.nbar.find(LevelKey{g, 1});
        if (it == store.nbar.end())
          throw std::runtime_error("chiFromStore: no fitted (" + std::to_string(g) +
                                   ",1) to seed the closed recursion");
        return it->second.constantTerm();
      });
}

/// Runs the fit pipeline through the given level, extending the supplied
/// store: sample the recursion, fit the quasi-polynomial, recover the smooth
/// count by state-sum inversion, then refresh the Euler tables. Levels are
/// processed in increasing order with genus ascending inside a level, which
/// makes every inversion prerequisite available when needed.
inline ValueStore pipelineRun(int maxLevel, ValueStore store = {}) {
  if (maxLevel < 1) throw std::invalid_argument("pipelineRun: level must be >= 1");
  for (const LevelKey key : levelsUpTo(maxLevel)) {
    if (store.hasLevel(key)) continue;
    EvalContext ctx(store.nbar);
    FitResult fit = fitLevel(key.g, key.n, [&](const std::vector<long long>& b) {
      return nbarValue(key, b, ctx);
    });
    store.samples[key] = std::move(fit.evaluations);
    QuasiPoly smooth = invertStateSum(key.g, key.n, fit.qp, store.smooth);
    store.nbar.emplace(key, std::move(fit.qp));
    store.smooth.emplace(key, std::move(smooth));
  }
  store.maxLevel = std::max(store.maxLevel, maxLevel);

  const ChiTable chi = chiFromStore(store, maxSeedGenus(store.maxLevel));
  store.chiOpenTable = chi.openEntries();
  store.chiClosedTable = chi.closedEntries();
  return store;
}

}  // namespace mgn
