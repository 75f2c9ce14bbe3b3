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
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Truncated power series in one variable with exact coefficients for
/// exponents 0..order. Coefficients beyond the order are unknown, never
/// assumed zero; binary operations truncate to the smaller order.
class Series {
 public:
  explicit Series(int order = 0) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }
  static Series constant(int order, const Rat& v) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }
  static Series x(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = Rat(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const { return c_.at(i); }
  void set(int i, const Rat& v) { c_.at(i) = v; }

  Series truncated(int order) const {
    Series r(order);
    for (int i = 0; i <= order && i <= this->order(); ++i) r.c_[i] = c_[i];
    if (order > this->order())
      throw std::invalid_argument("Series: cannot extend a truncated series");
    return r;
  }

  Series operator+(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }
  Series operator-(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
  }
  Series operator*(const Series& o) const {
    Series r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i)
      for (int j = 0; i + j <= r.order() && j <= o.order(); ++j)
        r.c_[i + j] += c_[i] * o.c_[j];
    return r;
  }
  Series scaled(const Rat& s) const {
    Series r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  bool operator==(const Series& o) const = default;

  Series derivative() const {
    if (order() == 0) return Series(0);
    Series r(order() - 1);
    for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * Rat(i);
    return r;
  }

  /// Antiderivative with zero constant term; gains one order.
  Series integral() const {
    Series r(order() + 1);
    for (int i = 0; i <= order(); ++i) r.c_[i + 1] = c_[i] / Rat(i + 1);
    return r;
  }

  /// Division by a series with nonzero constant term.
  Series dividedBy(const Series& d) const {
    if (d.c_[0].isZero())
      throw std::domain_error("Series: division by a series with zero constant term");
    Series r(std::min(order(), d.order()));
    for (int i = 0; i <= r.order(); ++i) {
      Rat acc = i <= order() ? c_[i] : Rat(0);
      for (int j = 1; j <= i && j <= d.order(); ++j) acc -= d.c_[j] * r.c_[i - j];
      r.c_[i] = acc / d.c_[0];
    }
    return r;
  }

  /// Substitutes g (with g(0) = 0) into this series.
  Series compose(const Series& g) const {
    if (!g.c_[0].isZero())
      throw std::domain_error("Series: composition requires zero constant term");
    const int ord = std::min(order(), g.order());
    Series r = Series::constant(ord, c_[0]);
    Series gp = Series::constant(ord, Rat(1));
    for (int i = 1; i <= ord; ++i) {
      gp = gp * g.truncated(ord);
      r = r + gp.scaled(c_[i]);
    }
    return r;
  }

  /// ln(1 + this), for a series with zero constant term.
  Series log1p() const {
    if (!c_[0].isZero())
      throw std::domain_error("Series: log1p requires zero constant term");
    if (order() == 0) return Series(0);
    Series one = Series::constant(order(), Rat(1));
    // d/dx ln(1+s) = s' / (1+s), integrated back with ln(1) = 0.
    return derivative().dividedBy((one + *this).truncated(order() - 1)).integral().truncated(order());
  }

  /// Compositional inverse: the series y with this(y(x)) = x. Requires zero
  /// constant term and nonzero linear term.
  Series inverse() const {
    if (!c_[0].isZero())
      throw std::domain_error("Series: inversion requires zero constant term");
    if (order() < 1 || c_[1].isZero())
      throw std::domain_error("Series: inversion requires a nonzero linear term");
    Series y(order());
    y.c_[1] = Rat(1) / c_[1];
    for (int m = 2; m <= order(); ++m) {
      // With y known below order m, [x^m] this(y) = c_1 * y_m + known.
      Series fy = truncated(m).compose(y.truncated(m));
      y.c_[m] = -fy.c_[m] / c_[1];
    }
    return y;
  }

  std::string str(const std::string& var = "x") const {
    std::string out;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
      if (c_[i].isZero()) continue;
      Rat coef = c_[i];
      if (first) {
        if (coef.sign() < 0) { out += "-"; coef = -coef; }
      } else {
        out += coef.sign() < 0 ? " - " : " + ";
        if (coef.sign() < 0) coef = -coef;
      }
      first = false;
      if (i == 0) {
        out += coef.str();
      } else {
        std::string mono = var + (i == 1 ? "" : "^" + std::to_string(i));
        out += coef == Rat(1) ? mono : coef.str() + "*" + mono;
      }
    }
    return first ? "0" : out;
  }

 private:
  std::vector<Rat> c_;
};

/// Truncated power series in two variables (x up to orderX, q up to orderQ).
class Series2 {
 public:
  Series2(int orderX = 0, int orderQ = 0)
      : ox_(orderX), oq_(orderQ),
        c_(orderX + 1, std::vector<Rat>(orderQ + 1)) {
    if (orderX < 0 || orderQ < 0) throw std::invalid_argument("Series2: negative order");
  }

  int orderX() const { return ox_; }
  int orderQ() const { return oq_; }
  const Rat& at(int i, int j) const { return c_.at(i).at(j); }
  void set(int i, int j, const Rat& v) { c_.at(i).at(j) = v; }

  bool isZero() const {
    for (const auto& row : c_)
      for (const auto& v : row)
        if (!v.isZero()) return false;
    return true;
  }

  Series2 truncated(int orderX, int orderQ) const {
    if (orderX > ox_ || orderQ > oq_)
      throw std::invalid_argument("Series2: cannot extend a truncated series");
    Series2 r(orderX, orderQ);
    for (int i = 0; i <= orderX; ++i)
      for (int j = 0; j <= orderQ; ++j) r.c_[i][j] = c_[i][j];
    return r;
  }

  Series2 operator+(const Series2& o) const {
    Series2 r(std::min(ox_, o.ox_), std::min(oq_, o.oq_));
    for (int i = 0; i <= r.ox_; ++i)
      for (int j = 0; j <= r.oq_; ++j) r.c_[i][j] = c_[i][j] + o.c_[i][j];
    return r;
  }
  Series2 operator-(const Series2& o) const {
    Series2 r(std::min(ox_, o.ox_), std::min(oq_, o.oq_));
    for (int i = 0; i <= r.ox_; ++i)
      for (int j = 0; j <= r.oq_; ++j) r.c_[i][j] = c_[i][j] - o.c_[i][j];
    return r;
  }
  Series2 operator*(const Series2& o) const {
    Series2 r(std::min(ox_, o.ox_), std::min(oq_, o.oq_));
    for (int i1 = 0; i1 <= ox_ && i1 <= r.ox_; ++i1)
      for (int j1 = 0; j1 <= oq_ && j1 <= r.oq_; ++j1) {
        if (c_[i1][j1].isZero()) continue;
        for (int i2 = 0; i1 + i2 <= r.ox_ && i2 <= o.ox_; ++i2)
          for (int j2 = 0; j1 + j2 <= r.oq_ && j2 <= o.oq_; ++j2)
            r.c_[i1 + i2][j1 + j2] += c_[i1][j1] * o.c_[i2][j2];
      }
    return r;
  }

  Series2 dx() const {
    Series2 r(ox_ == 0 ? 0 : ox_ - 1, oq_);
    for (int i = 1; i <= ox_; ++i)
      for (int j = 0; j <= oq_; ++j) r.c_[i - 1][j] = c_[i][j] * Rat(i);
    return r;
  }
  Series2 dq() const {
    Series2 r(ox_, oq_ == 0 ? 0 : oq_ - 1);
    for (int i = 0; i <= ox_; ++i)
      for (int j = 1; j <= oq_; ++j) r.c_[i][j - 1] = c_[i][j] * Rat(j);
    return r;
  }
  /// Multiplication by the monomial x^a q^b. Every coefficient of the
  /// result is determined, so the order bounds grow by the shift.
  Series2 shifted(int a, int b) const {
    Series2 r(ox_ + a, oq_ + b);
    for (int i = 0; i <= ox_; ++i)
      for (int j = 0; j <= oq_; ++j) r.c_[i + a][j + b] = c_[i][j];
    return r;
  }
  Series2 scaled(const Rat& s) const {
    Series2 r = *this;
    for (auto& row : r.c_)
      for (auto& v : row) v *= s;
    return r;
  }

  std::string str() const {
    std::string out;
    bool first = true;
    for (int j = 0; j <= oq_; ++j)
      for (int i = 0; i <= ox_; ++i) {
        if (c_[i][j].isZero()) continue;
        if (!first) out += " + ";
        first = false;
        out += c_[i][j].str();
        if (i > 0) out += "*x^" + std::to_string(i);
        if (j > 0) out += "*q^" + std::to_string(j);
      }
    return first ? "0" : out;
  }

 private:
  int ox_, oq_;
  std::vector<std::vector<Rat>> c_;
};

}  // namespace mgn
