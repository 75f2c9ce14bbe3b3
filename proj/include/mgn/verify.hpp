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
#include <numeric>
#include <string>
#include <vector>

#include "mgn/census.hpp"
#include "mgn/eulerchi.hpp"
#include "mgn/intersection.hpp"
#include "mgn/pipeline.hpp"
#include "mgn/statesum.hpp"
#include "mgn/store.hpp"
#include "mgn/table_data.hpp"

namespace mgn {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline void addCheck(std::vector<Check>& out, const std::string& name, bool pass,
                     const std::string& detail = "") {
  out.push_back(Check{name, pass, pass ? "" : detail});
}

inline std::string vecStr(const std::vector<long long>& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

inline std::string expStr(const std::vector<int>& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

// Non-increasing positive vectors of the given length with entries and total
// bounded; symmetric identities need each vector only once.
inline std::vector<std::vector<long long>> boundedVectors(int len, long long maxEntry,
                                                          long long sumBound) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(len);
  auto rec = [&](auto&& self, int pos, long long prev, long long left) -> void {
    if (pos == len) { out.push_back(cur); return; }
    for (long long v = std::min(prev, left - (len - 1 - pos)); v >= 1; --v) {
      cur[pos] = v;
      self(self, pos + 1, v, left - v);
    }
  };
  rec(rec, 0, maxEntry, sumBound);
  return out;
}

}  // namespace detail

/// Appendix-style regression: every reference polynomial must match the
/// fitted one coefficient for coefficient.
inline std::vector<Check> verifyTable(const ValueStore& store) {
  std::vector<Check> checks;
  for (const TableRow& row : referenceTable()) {
    const std::string name = "table (" + std::to_string(row.g) + "," +
                             std::to_string(row.n) + ") k=" + std::to_string(row.k);
    auto it = store.nbar.find(LevelKey{row.g, row.n});
    if (it == store.nbar.end()) {
      detail::addCheck(checks, name, false, "level not fitted");
      continue;
    }
    const Poly& fitted = it->second.coset(row.k);
    detail::addCheck(checks, name, fitted == row.poly,
                     "fitted " + toString(fitted) + " vs reference " + toString(row.poly));
  }
  return checks;
}

/// String equation, pointwise: removing the perimeter-1 boundary matches the
/// weighted partial sums of the smaller count.
inline std::vector<Check> verifyString(const ValueStore& store, long long maxEntry = 8,
                                       int maxTargetLevel = 4) {
  std::vector<Check> checks;
  for (const auto& [key, qp] : store.nbar) {
    const LevelKey target{key.g, key.n + 1};
    if (target.level() > maxTargetLevel) continue;
    auto it = store.nbar.find(target);
    if (it == store.nbar.end()) continue;
    const std::string name = "string " + key.str() + " -> " + target.str();
    bool pass = true;
    std::string detail;
    for (const auto& b : detail::boundedVectors(key.n, maxEntry, maxEntry * key.n)) {
      std::vector<long long> extended = b;
      extended.push_back(1);
      const Rat lhs = it->second.evaluate(extended);
      if (std::accumulate(b.begin(), b.end(), 0LL) % 2 == 0) {
        // Even total: the identity is vacuous (both sides read as zero);
        // only the left side vanishes mechanically, by parity.
        if (!lhs.isZero()) {
          pass = false;
          detail = "nonzero left side at even-total b=" + detail::vecStr(b);
          break;
        }
        continue;
      }
      Rat rhs(0);
      for (int k = 0; k < key.n; ++k) {
        std::vector<long long> sub = b;
        for (long long m = 0; m <= b[k]; ++m) {
          sub[k] = m;
          rhs += (m == 0 ? Rat(1) : Rat(m)) * qp.evaluate(sub);
        }
      }
      if (lhs != rhs) {
        pass = false;
        detail = "mismatch at b=" + detail::vecStr(b) + ": " + lhs.str() + " vs " + rhs.str();
        break;
      }
    }
    detail::addCheck(checks, name, pass, detail);
  }
  return checks;
}

/// Dilaton equation as a polynomial identity per parity class, plus the
/// vanishing of the smooth count at (0,...,0,2).
inline std::vector<Check> verifyDilaton(const ValueStore& store, int maxTargetLevel = 4) {
  std::vector<Check> checks;
  for (const auto& [key, qp] : store.nbar) {
    const LevelKey target{key.g, key.n + 1};
    if (target.level() > maxTargetLevel) continue;
    auto it = store.nbar.find(target);
    if (it == store.nbar.end()) continue;
    const std::string name = "dilaton " + key.str() + " -> " + target.str();
    bool pass = true;
    std::string detail;
    const Rat factor(2 * key.g - 2 + key.n);
    for (int k = 0; k <= key.n && pass; k += 2) {
      std::vector<QuasiPoly::Arg> at2, at0;
      for (int i = 0; i < key.n; ++i) {
        at2.push_back(QuasiPoly::Arg::var(i, i < k));
        at0.push_back(QuasiPoly::Arg::var(i, i < k));
      }
      at2.push_back(QuasiPoly::Arg::constant(2));
      at0.push_back(QuasiPoly::Arg::constant(0));
      const Poly lhs = it->second.specialize(key.n, at2) - it->second.specialize(key.n, at0);
      const Poly rhs = qp.coset(k).scaled(factor);
      if (lhs != rhs) {
        pass = false;
        detail = "class k=" + std::to_string(k) + ": " + toString(lhs) + " vs " + toString(rhs);
      }
    }
    detail::addCheck(checks, name, pass, detail);
  }
  // On the smooth counts: the dilaton identity at the origin and the
  // vanishing one dot above it.
  for (const auto& [key, smooth] : store.smooth) {
    if (key.n < 2 || key.level() > maxTargetLevel) continue;
    auto lower = store.smooth.find(LevelKey{key.g, key.n - 1});
    if (lower == store.smooth.end()) continue;
    std::vector<long long> at2(key.n, 0), at0(key.n, 0);
    at2.back() = 2;
    const Rat lhs = smooth.evaluate(at2) - smooth.evaluate(at0);
    const Rat rhs = Rat(2 * key.g - 2 + key.n - 1) *
                    lower->second.evaluate(std::vector<long long>(key.n - 1, 0));
    detail::addCheck(checks, "smooth dilaton at origin " + key.str(), lhs == rhs,
                     lhs.str() + " vs " + rhs.str());
    if (2 * key.g - 2 + (key.n - 1) > 0) {
      const Rat value = smooth.evaluate(at2);
      detail::addCheck(checks, "smooth vanishing " + key.str() + " at (0,...,0,2)",
                       value.isZero(), "got " + value.str());
    }
  }
  return checks;
}

/// Top coefficients against the independent intersection-number oracle: the
/// coefficient of b^{2a} with |a| = 3g-3+n must be <prod tau_a>_g divided by
/// 2^{5g-6+2n} prod a_i!, identically across parity classes.
inline std::vector<Check> verifyTop(const ValueStore& store, int maxLevel = 5) {
  std::vector<Check> checks;
  DvvTable dvv;
  for (const auto& [key, qp] : store.nbar) {
    if (key.level() > maxLevel) continue;
    const int degree = 3 * key.g - 3 + key.n;
    mpz_class denomPow;
    mpz_ui_pow_ui(denomPow.get_mpz_t(), 2, static_cast<unsigned>(5 * key.g - 6 + 2 * key.n));
    const std::string name = "top coefficients " + key.str();
    bool pass = true;
    std::string detail;

    std::vector<int> alpha(key.n, 0);
    auto compositions = [&](auto&& self, int pos, int left) -> bool {
      if (pos == key.n - 1) {
        alpha[pos] = left;
        mpz_class denom = denomPow;
        for (int a : alpha) denom *= factorialZ(a);
        const Rat expected = dvv.bracket(key.g, alpha) / Rat(denom);
        for (int k = 0; k <= key.n; k += 2) {
          const Rat got = qp.coset(k).coefficient(alpha);
          if (got != expected) {
            pass = false;
            detail = "k=" + std::to_string(k) + " exponent " + detail::expStr(alpha) +
                     ": " + got.str() + " vs " + expected.str();
            return false;
          }
        }
        return true;
      }
      for (int a = left; a >= 0; --a) {
        alpha[pos] = a;
        if (!self(self, pos + 1, left - a)) return false;
      }
      return true;
    };
    compositions(compositions, 0, degree);
    // The whole degree-(3g-3+n) part must agree across classes, with no
    // stray monomials beyond the compositions just checked.
    for (int k = 2; k <= key.n && pass; k += 2)
      if (qp.coset(k).homogeneousPart(degree) != qp.coset(0).homogeneousPart(degree)) {
        pass = false;
        detail = "degree-" + std::to_string(degree) + " parts differ between k=0 and k=" +
                 std::to_string(k);
      }
    detail::addCheck(checks, name, pass, detail);
  }
  return checks;
}

/// Constant terms by three routes (fitted, closed recursion, stratification
/// sum), the smooth constants against the open-form Euler characteristic,
/// and the one non-vanishing evaluation of the closed recursion.
inline std::vector<Check> verifyConst(const ValueStore& store, int maxLevel = 4) {
  std::vector<Check> checks;
  const ChiTable chi = chiFromStore(store, maxSeedGenus(store.maxLevel));
  for (const auto& [key, qp] : store.nbar) {
    if (key.level() > maxLevel) continue;
    const Rat fitted = qp.constantTerm();
    const Rat recursed = chi.closed(key.g, key.n);
    const Rat strata = chiCompactifiedViaStrata(key.g, key.n, chiOpen);
    detail::addCheck(checks, "chi~ three routes " + key.str(),
                     fitted == recursed && fitted == strata,
                     fitted.str() + " / " + recursed.str() + " / " + strata.str());
  }
  for (const auto& [key, smooth] : store.smooth) {
    if (key.level() > maxLevel) continue;
    const Rat constant = smooth.constantTerm();
    const Rat open = chiOpen(key.g, key.n);
    detail::addCheck(checks, "chi open constant " + key.str(), constant == open,
                     constant.str() + " vs " + open.str());
  }
  for (const auto& [key, qp] : store.nbar) {
    if (key.n < 2) continue;
    if (key.level() > maxLevel) continue;
    const int g = key.g, n = key.n - 1;
    detail::addCheck(checks,
                     "closed recursion evaluation (" + std::to_string(g) + "," +
                         std::to_string(n) + "+1) at (0,...,0,2)",
                     p3primeCheck(g, n, qp, chi), "sides differ");
  }
  return checks;
}

/// The state sum over dual graphs rebuilt from the smooth counts must equal
/// the fitted compactified count coefficient for coefficient.
inline std::vector<Check> verifyStateSum(const ValueStore& store, int maxLevel = 5) {
  std::vector<Check> checks;
  for (const auto& [key, qp] : store.nbar) {
    if (key.level() > maxLevel) continue;
    const QuasiPoly rebuilt = stateSumNbar(key.g, key.n, store.smooth);
    detail::addCheck(checks, "state sum " + key.str(), rebuilt == qp,
                     "state sum disagrees with the fitted count");
  }
  return checks;
}

/// Census oracle equivalence: the brute-force weighted fatgraph counts must
/// match the inversion-derived smooth counts at every feasible point, with
/// trailing zeros handled by the pointed census.
inline std::vector<Check> verifyCensus(const ValueStore& store, long long sumBound = 12,
                                       int maxHalfEdges = 14) {
  std::vector<Check> checks;
  const std::vector<LevelKey> keys{{0, 3}, {0, 4}, {1, 1}, {0, 5}, {1, 2}};
  for (const LevelKey key : keys) {
    auto it = store.smooth.find(key);
    if (it == store.smooth.end()) {
      detail::addCheck(checks, "census " + key.str(), false, "level not fitted");
      continue;
    }
    bool pass = true;
    std::string detail;
    for (const auto& b : detail::boundedVectors(key.n, sumBound, sumBound)) {
      if (std::accumulate(b.begin(), b.end(), 0LL) % 2 != 0) continue;
      const Rat counted = censusN(key.g, key.n, b, maxHalfEdges).count;
      const Rat predicted = it->second.evaluate(b);
      if (counted != predicted) {
        pass = false;
        detail = "b=" + detail::vecStr(b) + ": census " + counted.str() +
                 " vs polynomial " + predicted.str();
        break;
      }
    }
    detail::addCheck(checks, "census " + key.str(), pass, detail);

    bool ppass = true;
    std::string pdetail;
    for (int p = 1; p < key.n && ppass; ++p) {
      for (const auto& prefix : detail::boundedVectors(p, sumBound, sumBound)) {
        if (std::accumulate(prefix.begin(), prefix.end(), 0LL) % 2 != 0) continue;
        std::vector<long long> b = prefix;
        b.resize(key.n, 0);
        const Rat counted = censusNPointed(key.g, key.n, b, maxHalfEdges).count;
        const Rat predicted = it->second.evaluate(b);
        if (counted != predicted) {
          ppass = false;
          pdetail = "b=" + detail::vecStr(b) + ": census " + counted.str() +
                    " vs polynomial " + predicted.str();
          break;
        }
      }
    }
    if (key.n > 1) detail::addCheck(checks, "pointed census " + key.str(), ppass, pdetail);
  }
  // Two pinned values the suite must reproduce.
  if (store.smooth.count(LevelKey{1, 2}))
    detail::addCheck(checks, "smooth (1,2) at (2,2) vanishes",
                     store.smooth.at(LevelKey{1, 2}).evaluate({2, 2}).isZero(), "nonzero");
  if (store.smooth.count(LevelKey{1, 1}))
    detail::addCheck(checks, "smooth (1,1) at (4) equals 1/4",
                     store.smooth.at(LevelKey{1, 1}).evaluate({4}) == Rat(1, 4), "differs");
  return checks;
}

using SuiteReport = std::map<std::string, std::vector<Check>>;

inline SuiteReport runSuites(const std::vector<std::string>& names, const ValueStore& store) {
  SuiteReport report;
  for (const std::string& name : names) {
    if (name == "table") report[name] = verifyTable(store);
    else if (name == "string") report[name] = verifyString(store);
    else if (name == "dilaton") report[name] = verifyDilaton(store);
    else if (name == "top") report[name] = verifyTop(store);
    else if (name == "const") report[name] = verifyConst(store);
    else if (name == "statesum") report[name] = verifyStateSum(store);
    else if (name == "census") report[name] = verifyCensus(store);
    else throw std::invalid_argument("unknown verify suite: " + name);
  }
  return report;
}

inline bool allPass(const SuiteReport& report) {
  for (const auto& [suite, checks] : report)
    for (const Check& c : checks)
      if (!c.pass) return false;
  return true;
}

}  // namespace mgn
