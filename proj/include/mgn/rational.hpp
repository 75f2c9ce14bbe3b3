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

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace mgn {

/// Exact rational number, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class; unlike mpq_class,
/// construction from a numerator/denominator pair canonicalizes.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long long n) : q_(mpz_class(static_cast<long>(n))) {}
  Rat(const mpz_class& n) : q_(n) {}
  Rat(long long num, long long den)
      : Rat(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}
  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p" or "p/q" with optional leading '-'.
  static Rat fromString(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    Rat r;
    r.q_ = q;
    return r;
  }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool isZero() const { return q_ == 0; }
  bool isInteger() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p" when the value is integral, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const {
    if (o.isZero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(q_ / o.q_));
  }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }
  bool operator<=(const Rat& o) const { return q_ <= o.q_; }
  bool operator>(const Rat& o) const { return q_ > o.q_; }
  bool operator>=(const Rat& o) const { return q_ >= o.q_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat pow(unsigned e) const {
    Rat r(1), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

 private:
  explicit Rat(const mpq_class& q) : q_(q) {}
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

inline mpz_class factorialZ(long long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline mpz_class binomialZ(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Product of the odd numbers up to j; j must be odd or -1, and (-1)!! = 1.
inline mpz_class oddDoubleFactorialZ(long long j) {
  if (j < -1 || (j >= 0 && j % 2 == 0))
    throw std::invalid_argument("oddDoubleFactorialZ: argument must be odd or -1");
  mpz_class r = 1;
  for (long long i = 1; i <= j; i += 2) r *= static_cast<long>(i);
  return r;
}

}  // namespace mgn
