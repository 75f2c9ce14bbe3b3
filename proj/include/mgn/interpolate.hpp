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
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mgn/linalg.hpp"
#include "mgn/quasipoly.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// Canonical monomial representatives for the parity class k: one exponent
/// vector per orbit of the block symmetric group S_k x S_{n-k} acting on
/// monomials in the squared variables of total degree <= degreeBound.
/// Representatives are non-increasing within each block.
inline std::vector<std::vector<int>> monomialBasis(int n, int k, int degreeBound) {
  if (k < 0 || k > n) throw std::invalid_argument("monomialBasis: bad k");
  std::vector<std::vector<int>> oddParts, evenParts;
  auto gen = [](int len, int budget, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int pos, int maxv, int left) -> void {
      if (pos == len) { out.push_back(cur); return; }
      for (int v = std::min(maxv, left); v >= 0; --v) {
        cur[pos] = v;
        self(self, pos + 1, v, left - v);
      }
    };
    rec(rec, 0, budget, budget);
  };
  gen(k, degreeBound, oddParts);
  std::vector<std::vector<int>> basis;
  for (const auto& o : oddParts) {
    int used = std::accumulate(o.begin(), o.end(), 0);
    evenParts.clear();
    gen(n - k, degreeBound - used, evenParts);
    for (const auto& e : evenParts) {
      std::vector<int> exp = o;
      exp.insert(exp.end(), e.begin(), e.end());
      basis.push_back(exp);
    }
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  });
  return basis;
}

namespace detail {

// All distinct arrangements of a block-sorted exponent vector under
// S_k x S_{n-k}.
inline std::vector<std::vector<int>> orbitOf(const std::vector<int>& rep, int k) {
  const int n = static_cast<int>(rep.size());
  std::vector<int> odd(rep.begin(), rep.begin() + k);
  std::vector<int> even(rep.begin() + k, rep.end());
  std::sort(odd.begin(), odd.end());
  std::sort(even.begin(), even.end());
  std::vector<std::vector<int>> odds, evens;
  do { odds.push_back(odd); } while (std::next_permutation(odd.begin(), odd.end()));
  do { evens.push_back(even); } while (std::next_permutation(even.begin(), even.end()));
  std::vector<std::vector<int>> orbit;
  orbit.reserve(odds.size() * evens.size());
  for (const auto& o : odds)
    for (const auto& e : evens) {
      std::vector<int> v(n);
      std::copy(o.begin(), o.end(), v.begin());
      std::copy(e.begin(), e.end(), v.begin() + k);
      orbit.push_back(v);
    }
  return orbit;
}

inline Rat orbitValue(const std::vector<int>& rep, int k, const std::vector<Rat>& x) {
  Rat s(0);
  for (const auto& e : orbitOf(rep, k)) {
    Rat t(1);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= x[i].pow(static_cast<unsigned>(e[i]));
    s += t;
  }
  return s;
}

// Block-sorted parity-correct positive vectors (odd slots first), ordered by
// total sum then lexicographically, with entries bounded by maxVal.
inline std::vector<std::vector<long long>> parityCandidates(int n, int k, long long maxVal) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(n);
  auto rec = [&](auto&& self, int pos, long long prev) -> void {
    if (pos == n) { out.push_back(cur); return; }
    const bool odd = pos < k;
    long long hi = (pos == 0 || pos == k) ? maxVal : prev;
    if (hi % 2 != (odd ? 1 : 0)) --hi;
    for (long long v = hi; v >= (odd ? 1 : 2); v -= 2) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, maxVal);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long long sa = std::accumulate(a.begin(), a.end(), 0LL);
    long long sb = std::accumulate(b.begin(), b.end(), 0LL);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

inline std::vector<Rat> squares(const std::vector<long long>& b) {
  std::vector<Rat> x;
  x.reserve(b.size());
  for (long long v : b) x.emplace_back(Rat(v) * Rat(v));
  return x;
}

}  // namespace detail

struct SampleGrid {
  std::vector<std::vector<int>> basis;
  std::vector<std::vector<long long>> fit;         // full-rank, one per basis element
  std::vector<std::vector<long long>> validation;  // extra points, never used in fitting
};

/// Parity-correct sample points for the class k of type (g,n): the smallest
/// block-sorted vectors whose orbit-sum evaluation matrix has full column
/// rank, plus three validation points. k must be even.
inline SampleGrid sampleGrid(int g, int n, int k) {
  if (k % 2 != 0) throw std::invalid_argument("sampleGrid: odd classes need no samples");
  const int degreeBound = 3 * g - 3 + n;
  SampleGrid grid;
  grid.basis = monomialBasis(n, k, degreeBound);
  const int m = static_cast<int>(grid.basis.size());

  // Reduced rows of accepted candidates, for incremental rank checks.
  std::vector<std::vector<Rat>> reduced;
  std::vector<int> pivots;
  long long maxVal = 2 * (degreeBound + 2) + 1;
  for (int round = 0; round < 5; ++round, maxVal *= 2) {
    for (const auto& cand : detail::parityCandidates(n, k, maxVal)) {
      if (static_cast<int>(grid.fit.size()) == m) {
        if (std::find(grid.fit.begin(), grid.fit.end(), cand) == grid.fit.end())
          grid.validation.push_back(cand);
        if (grid.validation.size() >= 3) return grid;
        continue;
      }
      const std::vector<Rat> x = detail::squares(cand);
      std::vector<Rat> row(m);
      for (int c = 0; c < m; ++c) row[c] = detail::orbitValue(grid.basis[c], k, x);
      for (size_t r = 0; r < reduced.size(); ++r) {
        if (row[pivots[r]].isZero()) continue;
        const Rat f = row[pivots[r]] / reduced[r][pivots[r]];
        for (int c = 0; c < m; ++c) row[c] -= f * reduced[r][c];
      }
      int pivot = -1;
      for (int c = 0; c < m; ++c)
        if (!row[c].isZero()) { pivot = c; break; }
      if (pivot < 0) continue;
      reduced.push_back(std::move(row));
      pivots.push_back(pivot);
      grid.fit.push_back(cand);
    }
  }
  std::vector<int> missing;
  for (int c = 0; c < m; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) missing.push_back(c);
  throw RankDeficiencyError("sampleGrid: rank not reached for (g,n,k)=(" +
                                std::to_string(g) + "," + std::to_string(n) + "," +
                                std::to_string(k) + ")",
                            missing);
}

struct FitResult {
  QuasiPoly qp;
  // Every evaluator call made while fitting, including validation points.
  std::vector<std::pair<std::vector<long long>, Rat>> evaluations;
};

/// Fits the full quasi-polynomial of type (g,n) from exact point values. The
/// evaluator must accept arbitrary positive parity-correct vectors. Fitted
/// classes are checked against validation points the solve never saw; any
/// mismatch throws.
inline FitResult fitLevel(int g, int n,
                          const std::function<Rat(const std::vector<long long>&)>& evaluate) {
  const int degreeBound = 3 * g - 3 + n;
  FitResult result{QuasiPoly(g, n, degreeBound), {}};
  for (int k = 0; k <= n; k += 2) {
    const SampleGrid grid = sampleGrid(g, n, k);
    const int m = static_cast<int>(grid.basis.size());
    Matrix a(m, std::vector<Rat>(m));
    std::vector<Rat> rhs(m);
    for (int r = 0; r < m; ++r) {
      const std::vector<Rat> x = detail::squares(grid.fit[r]);
      for (int c = 0; c < m; ++c) a[r][c] = detail::orbitValue(grid.basis[c], k, x);
      rhs[r] = evaluate(grid.fit[r]);
      result.evaluations.emplace_back(grid.fit[r], rhs[r]);
    }
    const std::vector<Rat> coef = solveExact(std::move(a), std::move(rhs));
    Poly p(n);
    for (int c = 0; c < m; ++c) {
      if (coef[c].isZero()) continue;
      for (const auto& e : detail::orbitOf(grid.basis[c], k)) p.addTerm(e, coef[c]);
    }
    for (const auto& point : grid.validation) {
      const Rat expected = evaluate(point);
      result.evaluations.emplace_back(point, expected);
      if (p.evaluate(detail::squares(point)) != expected)
        throw std::runtime_error("fitLevel: validation mismatch for (g,n,k)=(" +
                                 std::to_string(g) + "," + std::to_string(n) + "," +
                                 std::to_string(k) + ")");
    }
    result.qp.setCoset(k, std::move(p));
  }
  return result;
}

}  // namespace mgn
