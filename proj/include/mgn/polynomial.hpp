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
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Multivariate polynomial with exact rational coefficients. Terms are keyed
/// by exponent vectors of a fixed arity; zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(int arity = 0) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("Poly: negative arity");
  }

  static Poly constant(int arity, const Rat& c) {
    Poly p(arity);
    p.addTerm(std::vector<int>(arity, 0), c);
    return p;
  }

  int arity() const { return arity_; }
  bool isZero() const { return terms_.empty(); }

  /// Max exponent-vector sum over stored terms; -1 for the zero polynomial.
  int totalDegree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  Rat coefficient(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void addTerm(const std::vector<int>& exp, const Rat& c) {
    if (static_cast<int>(exp.size()) != arity_)
      throw std::invalid_argument("Poly: exponent arity mismatch");
    for (int e : exp)
      if (e < 0) throw std::invalid_argument("Poly: negative exponent");
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    requireSameArity(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    requireSameArity(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
  }
  Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
  Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
  Poly operator-() const { return Poly(arity_) - *this; }

  Poly operator*(const Poly& o) const {
    requireSameArity(o);
    Poly r(arity_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        std::vector<int> e(arity_);
        for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
        r.addTerm(e, c1 * c2);
      }
    return r;
  }

  Poly scaled(const Rat& s) const {
    Poly r(arity_);
    if (s.isZero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  bool operator==(const Poly& o) const = default;

  Rat evaluate(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != arity_)
      throw std::invalid_argument("Poly: evaluation arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < arity_; ++i)
        if (e[i] != 0) t *= x[i].pow(static_cast<unsigned>(e[i]));
      total += t;
    }
    return total;
  }

  /// Reindexes into a new variable space: slot i maps to result variable
  /// target[i] when target[i] >= 0, otherwise the slot is evaluated at
  /// value[i]. Slots may share a target variable (exponents add).
  Poly remap(int newArity, const std::vector<int>& target,
             const std::vector<Rat>& value) const {
    if (static_cast<int>(target.size()) != arity_ ||
        static_cast<int>(value.size()) != arity_)
      throw std::invalid_argument("Poly: remap arity mismatch");
    Poly r(newArity);
    for (const auto& [e, c] : terms_) {
      std::vector<int> ne(newArity, 0);
      Rat nc = c;
      for (int i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        if (target[i] >= 0) {
          if (target[i] >= newArity) throw std::invalid_argument("Poly: remap target out of range");
          ne[target[i]] += e[i];
        } else {
          nc *= value[i].pow(static_cast<unsigned>(e[i]));
        }
      }
      r.addTerm(ne, nc);
    }
    return r;
  }

  /// Terms of exact total degree d, as a polynomial.
  Poly homogeneousPart(int d) const {
    Poly r(arity_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    return r;
  }

 private:
  void requireSameArity(const Poly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("Poly: arity mismatch");
  }

  int arity_;
  std::map<std::vector<int>, Rat> terms_;
};

/// Terms sorted for display: total degree descending, then exponent vector
/// lexicographically descending (graded-lex).
inline std::vector<std::pair<std::vector<int>, Rat>> gradedTerms(const Poly& p) {
  std::vector<std::pair<std::vector<int>, Rat>> v(p.terms().begin(), p.terms().end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return v;
}

/// Renders in graded-lex order. Stored exponents are scaled by
/// `exponentScale` on display; quasi-polynomials store squared variables, so
/// the default prints b_i with doubled exponents.
inline std::string toString(const Poly& p, const std::string& varPrefix = "b",
                            int exponentScale = 2) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : gradedTerms(p)) {
    Rat coef = c;
    if (first) {
      if (coef.sign() < 0) { out += "-"; coef = -coef; }
    } else {
      out += coef.sign() < 0 ? " - " : " + ";
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += varPrefix + std::to_string(i + 1) + "^" + std::to_string(e[i] * exponentScale);
    }
    if (mono.empty()) {
      out += coef.str();
    } else if (coef == Rat(1)) {
      out += mono;
    } else {
      out += coef.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace mgn
