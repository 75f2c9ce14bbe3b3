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
#include <vector>

#include <json.hpp>

#include "mgn/polynomial.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// Symmetric quasi-polynomial of type (g,n): one polynomial in the n squared
/// perimeters per parity class k (the number of odd arguments), with the odd
/// slots stored first. A count at a vector with an odd number of odd entries
/// vanishes, so odd-k classes hold the zero polynomial. Evaluation sorts the
/// odd arguments to the front, which is valid because each class polynomial
/// is symmetric within its odd and even slot blocks.
class QuasiPoly {
 public:
  QuasiPoly() = default;
  QuasiPoly(int g, int n, int degreeBound)
      : g_(g), n_(n), degreeBound_(degreeBound), coset_(n + 1, Poly(n)) {
    if (g < 0 || n < 1 || degreeBound < 0)
      throw std::invalid_argument("QuasiPoly: bad (g, n, degreeBound)");
  }

  int g() const { return g_; }
  int n() const { return n_; }
  int degreeBound() const { return degreeBound_; }

  const Poly& coset(int k) const {
    if (k < 0 || k > n_) throw std::invalid_argument("QuasiPoly: coset index out of range");
    return coset_[k];
  }

  void setCoset(int k, Poly p) {
    if (k < 0 || k > n_) throw std::invalid_argument("QuasiPoly: coset index out of range");
    if (p.arity() != n_) throw std::invalid_argument("QuasiPoly: coset arity mismatch");
    if (k % 2 == 1 && !p.isZero())
      throw std::invalid_argument("QuasiPoly: odd parity class must be zero");
    if (p.totalDegree() > degreeBound_)
      throw std::invalid_argument("QuasiPoly: degree bound exceeded");
    requireBlockSymmetric(p, k);
    coset_[k] = std::move(p);
  }

  /// Evaluates at a vector of non-negative integers.
  Rat evaluate(const std::vector<long long>& b) const {
    if (static_cast<int>(b.size()) != n_)
      throw std::invalid_argument("QuasiPoly: evaluation arity mismatch");
    std::vector<Rat> x;
    x.reserve(n_);
    int k = 0;
    for (long long v : b) {
      if (v < 0) throw std::invalid_argument("QuasiPoly: negative argument");
      if (v % 2 != 0) {
        x.insert(x.begin() + k, Rat(v) * Rat(v));
        ++k;
      } else {
        x.push_back(Rat(v) * Rat(v));
      }
    }
    return coset_[k].evaluate(x);
  }

  /// Value at the origin (the k = 0 constant coefficient).
  Rat constantTerm() const {
    return coset_[0].coefficient(std::vector<int>(n_, 0));
  }

  /// Argument descriptor for partial specialization: either a variable of
  /// the target space with a declared parity, or an integer constant.
  struct Arg {
    static Arg var(int index, bool odd) { return Arg{index, 0, odd}; }
    static Arg constant(long long value) {
      if (value < 0) throw std::invalid_argument("QuasiPoly::Arg: negative constant");
      return Arg{-1, value, value % 2 != 0};
    }
    int varIndex = -1;
    long long value = 0;
    bool odd = false;
  };

  /// Assembles the class polynomial selected by the argument parities as a
  /// polynomial over targetArity squared variables. Constant arguments are
  /// substituted by their squares.
  Poly specialize(int targetArity, const std::vector<Arg>& args) const {
    if (static_cast<int>(args.size()) != n_)
      throw std::invalid_argument("QuasiPoly: specialize arity mismatch");
    std::vector<const Arg*> ordered;
    ordered.reserve(n_);
    int k = 0;
    for (const Arg& a : args)
      if (a.odd) { ordered.insert(ordered.begin() + k, &a); ++k; }
    for (const Arg& a : args)
      if (!a.odd) ordered.push_back(&a);
    std::vector<int> target(n_);
    std::vector<Rat> value(n_);
    for (int i = 0; i < n_; ++i) {
      target[i] = ordered[i]->varIndex;
      value[i] = Rat(ordered[i]->value) * Rat(ordered[i]->value);
    }
    return coset_[k].remap(targetArity, target, value);
  }

  bool operator==(const QuasiPoly& o) const = default;

  /// One parity class in the interchange schema
  /// {"g":…,"n":…,"k":…,"terms":[{"exp":[…],"coef":"p/q"},…]}.
  nlohmann::ordered_json cosetJson(int k) const {
    nlohmann::ordered_json j;
    j["g"] = g_;
    j["n"] = n_;
    j["k"] = k;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [e, c] : gradedTerms(coset(k))) {
      nlohmann::ordered_json t;
      t["exp"] = e;
      t["coef"] = c.str();
      j["terms"].push_back(t);
    }
    return j;
  }

  nlohmann::ordered_json toJson() const {
    nlohmann::ordered_json j;
    j["g"] = g_;
    j["n"] = n_;
    j["degreeBound"] = degreeBound_;
    j["cosets"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= n_; ++k) j["cosets"].push_back(cosetJson(k));
    return j;
  }

  static QuasiPoly fromJson(const nlohmann::json& j) {
    QuasiPoly qp(j.at("g").get<int>(), j.at("n").get<int>(),
                 j.at("degreeBound").get<int>());
    for (const auto& cj : j.at("cosets")) {
      if (cj.at("g").get<int>() != qp.g_ || cj.at("n").get<int>() != qp.n_)
        throw std::invalid_argument("QuasiPoly: inconsistent coset header");
      int k = cj.at("k").get<int>();
      Poly p(qp.n_);
      for (const auto& tj : cj.at("terms")) {
        std::vector<int> e = tj.at("exp").get<std::vector<int>>();
        p.addTerm(e, Rat::fromString(tj.at("coef").get<std::string>()));
      }
      qp.setCoset(k, std::move(p));
    }
    return qp;
  }

 private:
  // Symmetry within the odd block and within the even block, checked on
  // adjacent transpositions (they generate the two symmetric groups).
  void requireBlockSymmetric(const Poly& p, int k) const {
    auto checkSwap = [&](int a, int b) {
      std::vector<int> target(n_);
      for (int i = 0; i < n_; ++i) target[i] = i;
      std::swap(target[a], target[b]);
      if (p.remap(n_, target, std::vector<Rat>(n_, Rat(0))) != p)
        throw std::invalid_argument("QuasiPoly: class polynomial not block-symmetric");
    };
    for (int i = 0; i + 1 < k; ++i) checkSwap(i, i + 1);
    for (int i = k; i + 1 < n_; ++i) checkSwap(i, i + 1);
  }

  int g_ = 0;
  int n_ = 0;
  int degreeBound_ = 0;
  std::vector<Poly> coset_;
};

}  // namespace mgn
