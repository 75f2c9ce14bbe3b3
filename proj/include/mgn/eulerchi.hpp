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

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "mgn/bernoulli.hpp"
#include "mgn/levels.hpp"
#include "mgn/quasipoly.hpp"
#include "mgn/series.hpp"

namespace mgn {

/// Orbifold Euler characteristic of the open moduli space. Genus >= 1 uses
/// the Harer-Zagier closed form (-1)^n (2g+n-3)! B_{2g} / (2g (2g-2)!);
/// genus 0 is seeded by a point at n = 3 and extended with
/// chi(0, n+1) = (2 - n) chi(0, n).
inline Rat chiOpen(int g, int n) {
  if (!LevelKey{g, n}.stable())
    throw std::invalid_argument("chiOpen: unstable (g,n)");
  if (g == 0) {
    Rat chi(1);
    for (int m = 3; m < n; ++m) chi *= Rat(2 - m);
    return chi;
  }
  const Rat sign = n % 2 == 0 ? Rat(1) : Rat(-1);
  return sign * Rat(factorialZ(2 * g + n - 3)) * bernoulli(2 * g) /
         (Rat(2 * g) * Rat(factorialZ(2 * g - 2)));
}

/// Euler characteristics of open and compactified moduli spaces. The
/// compactified values are generated by the recursion
///   chi~(g,n+1) = (2-2g-n) chi~(g,n) + 1/2 chi~(g-1,n+2)
///                 + 1/2 sum_{h,k} C(n,k) chi~(h,k+1) chi~(g-h,n-k+1)
/// from one-pointed seeds per genus, with the conventions chi~(0,1) = 0 and
/// chi~(0,2) = 1 (the genus -1 term is absent at g = 0).
class ChiTable {
 public:
  /// Builds the table for genus <= gMax and (per genus) n <= depth(g).
  /// closedSeed(g) must supply chi~(g,1) for 1 <= g <= gMax; the genus-0 row
  /// needs no seed. Lower-genus rows are computed deep enough internally.
  static ChiTable build(int gMax, const std::function<int(int)>& depth,
                        const std::function<Rat(int)>& closedSeed) {
    ChiTable t;
    std::map<int, int> need;  // genus -> required n depth
    for (int g = gMax; g >= 0; --g) {
      need[g] = std::max(need.count(g) ? need[g] : 0, depth(g));
      if (g >= 1) need[g - 1] = std::max(need.count(g - 1) ? need[g - 1] : 0, need[g] + 2);
    }
    for (int g = 0; g <= gMax; ++g) {
      const int nMax = need[g];
      if (g >= 1) t.closed_[{g, 1}] = closedSeed(g);
      for (int n = 1; n < nMax; ++n) {
        Rat next = Rat(2 - 2 * g - n) * t.closed(g, n);
        if (g >= 1) next += t.closed(g - 1, n + 2) / Rat(2);
        Rat split(0);
        for (int h = 0; h <= g; ++h)
          for (int k = 0; k <= n; ++k) {
            // Terms carrying a chi~(0,1) = 0 factor; skipping them keeps the
            // not-yet-computed chi~(g,n+1) out of the right-hand side.
            if ((h == 0 && k == 0) || (g - h == 0 && n - k == 0)) continue;
            split += Rat(binomialZ(n, k)) * t.closed(h, k + 1) * t.closed(g - h, n - k + 1);
          }
        next += split / Rat(2);
        t.closed_[{g, n + 1}] = next;
      }
      for (int n = std::max(1, g == 0 ? 3 : 1); n <= nMax; ++n)
        if (LevelKey{g, n}.stable()) t.open_[{g, n}] = chiOpen(g, n);
    }
    return t;
  }

  Rat closed(int g, int n) const {
    if (g == 0 && n == 1) return Rat(0);
    if (g == 0 && n == 2) return Rat(1);
    auto it = closed_.find({g, n});
    if (it == closed_.end())
      throw std::out_of_range("ChiTable: chi~(" + std::to_string(g) + "," +
                              std::to_string(n) + ") not computed");
    return it->second;
  }

  Rat open(int g, int n) const {
    auto it = open_.find({g, n});
    if (it == open_.end())
      throw std::out_of_range("ChiTable: chi(" + std::to_string(g) + "," +
                              std::to_string(n) + ") not computed");
    return it->second;
  }

  int maxGenus() const {
    int g = -1;
    for (const auto& [key, value] : closed_) g = std::max(g, key.first);
    return g;
  }
  int closedDepth(int g) const {
    int n = 0;
    for (const auto& [key, value] : closed_)
      if (key.first == g) n = std::max(n, key.second);
    return n;
  }

  const std::map<std::pair<int, int>, Rat>& closedEntries() const { return closed_; }
  const std::map<std::pair<int, int>, Rat>& openEntries() const { return open_; }
  void setClosed(int g, int n, const Rat& v) { closed_[{g, n}] = v; }
  void setOpen(int g, int n, const Rat& v) { open_[{g, n}] = v; }

 private:
  std::map<std::pair<int, int>, Rat> open_;
  std::map<std::pair<int, int>, Rat> closed_;
};

/// The one non-vanishing evaluation behind the recursion: checks
///   Nbar_{g,n+1}(0,...,0,2) = 1/2 chi~(g-1,n+2)
///                             + 1/2 sum C(n,k) chi~(h,k+1) chi~(g-h,n-k+1)
/// exactly against the fitted polynomial.
inline bool p3primeCheck(int g, int n, const QuasiPoly& nbarNext, const ChiTable& chi) {
  if (nbarNext.g() != g || nbarNext.n() != n + 1)
    throw std::invalid_argument("p3primeCheck: need the fitted (g,n+1) count");
  std::vector<long long> point(n + 1, 0);
  point[n] = 2;
  Rat lhs = nbarNext.evaluate(point);
  Rat rhs(0);
  if (g >= 1) rhs += chi.closed(g - 1, n + 2) / Rat(2);
  Rat split(0);
  for (int h = 0; h <= g; ++h)
    for (int k = 0; k <= n; ++k)
      split += Rat(binomialZ(n, k)) * chi.closed(h, k + 1) * chi.closed(g - h, n - k + 1);
  rhs += split / Rat(2);
  return lhs == rhs;
}

/// Genus-0 generating series F0(x) = sum chi~(0,n)/(n-1)! x^{n-1}, computed
/// as the solution of F0' = (F0+1)/(1+x-F0) with F0(0) = 0 by order-by-order
/// fixed-point iteration.
inline Series f0Series(int order) {
  Series f(order);
  if (order == 0) return f;
  for (int it = 0; it <= order; ++it) {
    Series one = Series::constant(order, Rat(1));
    Series denom = one + Series::x(order) - f;
    Series rhs = (f + one).dividedBy(denom);
    f = rhs.truncated(order - 1).integral();  // F0(0) = 0
  }
  return f;
}

/// Genus-1 series F1(x) = sum chi~(1,n)/(n-1)! x^{n-1}: the q-linear layer
/// of the generating function PDE,
///   F1' = (F1 (F0' - 1) + F0''/2) / (1 + x - F0),
/// with the supplied initial value F1(0) = chi~(1,1).
inline Series f1Series(int order, const Rat& f1At0) {
  Series f1 = Series::constant(order, f1At0);
  if (order == 0) return f1;
  const Series f0 = f0Series(order + 2);
  const Series f0p = f0.derivative().truncated(order);
  const Series f0pp = f0.derivative().derivative();  // order `order`
  Series one = Series::constant(order, Rat(1));
  Series denom = (one + Series::x(order) - f0.truncated(order));
  for (int it = 0; it <= order; ++it) {
    Series num = f1 * (f0p - one) + f0pp.scaled(Rat(1, 2));
    Series rhs = num.dividedBy(denom);
    f1 = Series::constant(order, f1At0) + rhs.truncated(order - 1).integral();
  }
  return f1;
}

/// Generating function G(x,q) = sum chi~(g,n)/(n-1)! x^{n-1} q^g assembled
/// from the table, truncated to the given orders.
inline Series2 chiGeneratingFunction(const ChiTable& chi, int orderX, int orderQ) {
  Series2 g(orderX, orderQ);
  for (int gg = 0; gg <= orderQ; ++gg)
    for (int n = 1; n - 1 <= orderX; ++n)
      g.set(n - 1, gg, chi.closed(gg, n) / Rat(factorialZ(n - 1)));
  return g;
}

/// Residual of the PDE G_x = G + 1 - x G_x + G G_x + (q/2) G_xx - 2q G_q,
/// truncated to (orderX, orderQ). Identically zero when the table satisfies
/// the recursion. The table must hold chi~(g,n) for g <= orderQ and
/// n <= orderX + 3.
inline Series2 pdeResidual(int orderX, int orderQ, const ChiTable& chi) {
  const Series2 g = chiGeneratingFunction(chi, orderX + 2, orderQ);
  const Series2 gx = g.dx();    // orders (orderX+1, orderQ)
  const Series2 gxx = gx.dx();  // orders (orderX, orderQ)
  Series2 one(orderX, orderQ);
  one.set(0, 0, Rat(1));
  Series2 acc = gx.truncated(orderX, orderQ) - g.truncated(orderX, orderQ) - one;
  acc = acc + gx.shifted(1, 0).truncated(orderX, orderQ);                      // + x G_x
  acc = acc - (g * gx).truncated(orderX, orderQ);                              // - G G_x
  acc = acc - gxx.shifted(0, 1).scaled(Rat(1, 2)).truncated(orderX, orderQ);   // - (q/2) G_xx
  if (orderQ >= 1)
    acc = acc + g.dq().shifted(0, 1).scaled(Rat(2)).truncated(orderX, orderQ);  // + 2q G_q
  return acc;
}

}  // namespace mgn
