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

#include <compare>
#include <string>
#include <vector>

namespace mgn {

/// A stable type (g,n). The complexity level 2g-2+n orders the pipeline:
/// every term on the right of the perimeter recursion sits exactly one level
/// lower, and every boundary stratum vertex sits at a lower level or at the
/// same level with smaller genus.
struct LevelKey {
  int g = 0;
  int n = 0;

  int level() const { return 2 * g - 2 + n; }
  bool stable() const { return g >= 0 && n >= 1 && level() > 0; }
  auto operator<=>(const LevelKey&) const = default;

  std::string str() const {
    return "(" + std::to_string(g) + "," + std::to_string(n) + ")";
  }
};

/// All stable (g,n) with level <= maxLevel, ordered by (level, genus).
inline std::vector<LevelKey> levelsUpTo(int maxLevel) {
  std::vector<LevelKey> keys;
  for (int level = 1; level <= maxLevel; ++level)
    for (int g = 0; 2 * g <= level + 1; ++g) {
      LevelKey key{g, level - 2 * g + 2};
      if (key.stable()) keys.push_back(key);
    }
  return keys;
}

}  // namespace mgn
