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
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mgn/levels.hpp"
#include "mgn/quasipoly.hpp"
#include "mgn/rational.hpp"

namespace mgn {

using PolyMap = std::map<LevelKey, QuasiPoly>;

/// Context for raw recursion evaluations at one level: the fitted
/// quasi-polynomials of all strictly lower levels, plus a memo keyed by the
/// sorted perimeter vector.
struct EvalContext {
  explicit EvalContext(const PolyMap& fittedLower) : fitted(&fittedLower) {}
  const PolyMap* fitted;
  std::map<std::pair<LevelKey, std::vector<long long>>, Rat> memo;
};

/// Base cases of the recursion: a count of 1 for (0,3) on even total
/// perimeter, and (b^2+20)/48 for (1,1) on even b.
inline Rat nbarBase(LevelKey key, const std::vector<long long>& b) {
  if (static_cast<int>(b.size()) != key.n)
    throw std::invalid_argument("nbarBase: arity mismatch");
  for (long long v : b)
    if (v < 1) throw std::invalid_argument("nbarBase: perimeters must be positive");
  if (key == LevelKey{0, 3})
    return (b[0] + b[1] + b[2]) % 2 == 0 ? Rat(1) : Rat(0);
  if (key == LevelKey{1, 1})
    return b[0] % 2 == 0 ? Rat(b[0] * b[0] + 20, 48) : Rat(0);
  throw std::invalid_argument("nbarBase: " + key.str() + " is not a base case");
}

namespace detail {

// Evaluates a lower-level count from its fitted quasi-polynomial; zero
// arguments are pointed-count evaluations and are legal here. Unstable types
// contribute zero.
inline Rat fittedEval(const EvalContext& ctx, LevelKey key,
                      const std::vector<long long>& args) {
  if (!key.stable()) return Rat(0);
  auto it = ctx.fitted->find(key);
  if (it == ctx.fitted->end())
    throw std::runtime_error("recursion: missing fitted polynomial for " + key.str());
  return it->second.evaluate(args);
}

inline Rat fWeight(long long p) { return p == 0 ? Rat(1) : Rat(p); }

}  // namespace detail

/// Count at positive integer perimeters via the perimeter recursion. All
/// terms on the right-hand side have strictly smaller level and are served
/// from ctx.fitted; pair indices {i,j} are unordered and unstable summands
/// contribute zero.
inline Rat nbarValue(LevelKey key, const std::vector<long long>& b, EvalContext& ctx) {
  if (!key.stable()) throw std::invalid_argument("nbarValue: unstable type " + key.str());
  if (static_cast<int>(b.size()) != key.n)
    throw std::invalid_argument("nbarValue: arity mismatch");
  for (long long v : b)
    if (v < 1) throw std::invalid_argument("nbarValue: perimeters must be positive");

  const long long totalPerimeter = std::accumulate(b.begin(), b.end(), 0LL);
  if (totalPerimeter % 2 != 0) return Rat(0);
  if (key == LevelKey{0, 3} || key == LevelKey{1, 1}) return nbarBase(key, b);

  std::vector<long long> sortedB = b;
  std::sort(sortedB.begin(), sortedB.end());
  const auto memoKey = std::make_pair(key, sortedB);
  if (auto it = ctx.memo.find(memoKey); it != ctx.memo.end()) return it->second;

  const int g = key.g, n = key.n;
  Rat total(0);

  // Unordered pairs {i,j}: remove two boundaries, add one of perimeter p.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<long long> rest;
      rest.reserve(n - 1);
      rest.push_back(0);
      for (int t = 0; t < n; ++t)
        if (t != i && t != j) rest.push_back(b[t]);
      const long long sum = b[i] + b[j];
      for (long long p = 0; p <= sum; ++p) {
        const long long q = sum - p;
        if (q == 0) continue;
        rest[0] = p;
        total += detail::fWeight(p) * Rat(q) *
                 detail::fittedEval(ctx, LevelKey{g, n - 1}, rest);
      }
    }

  // Split one boundary into two of perimeters p and q: either a handle is
  // removed or the surface separates into two stable pieces.
  for (int i = 0; i < n; ++i) {
    std::vector<long long> others;
    others.reserve(n - 1);
    for (int t = 0; t < n; ++t)
      if (t != i) others.push_back(b[t]);
    const int m = n - 1;
    for (long long p = 0; p <= b[i]; ++p)
      for (long long q = 0; p + q <= b[i]; ++q) {
        const long long r = b[i] - p - q;
        if (r == 0) continue;
        Rat inner(0);
        if (g >= 1) {
          std::vector<long long> args;
          args.reserve(n + 1);
          args.push_back(p);
          args.push_back(q);
          args.insert(args.end(), others.begin(), others.end());
          inner += detail::fittedEval(ctx, LevelKey{g - 1, n + 1}, args);
        }
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
          std::vector<long long> part1{p}, part2{q};
          for (int t = 0; t < m; ++t)
            (mask >> t & 1 ? part1 : part2).push_back(others[t]);
          for (int g1 = 0; g1 <= g; ++g1) {
            LevelKey k1{g1, static_cast<int>(part1.size())};
            LevelKey k2{g - g1, static_cast<int>(part2.size())};
            if (!k1.stable() || !k2.stable()) continue;
            inner += detail::fittedEval(ctx, k1, part1) *
                     detail::fittedEval(ctx, k2, part2);
          }
        }
        total += detail::fWeight(p) * detail::fWeight(q) * Rat(r) * inner / Rat(2);
      }
  }

  const Rat result = total / Rat(totalPerimeter);
  ctx.memo.emplace(memoKey, result);
  return result;
}

}  // namespace mgn
