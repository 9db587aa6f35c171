// Copyright 2026 The linksched Authors
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

#ifndef LINKSCHED_RATIONAL_HPP
#define LINKSCHED_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace linksched {

/// Exact rational number, always kept in canonical form (gcd(p,q) = 1,
/// q > 0). All demand and time arithmetic in the library goes through
/// this type; nothing is ever rounded.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long num) : value_(num) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  /// Accepts "p/q", an integer string, or a decimal string ("0.9" -> 9/10).
  /// Throws StructuralError on anything else.
  static Rational parse(const std::string& text);

  /// Canonical text form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Decimal approximation for display only; never used in comparisons.
  double approx() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class value_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace linksched

#endif  // LINKSCHED_RATIONAL_HPP
