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

#include "linksched/rational.hpp"

#include <cctype>
#include <ostream>

#include "linksched/errors.hpp"

namespace linksched {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw StructuralError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw StructuralError("cannot parse rational: '" + text + "'");
  };

  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return fail();
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) return fail();
    q.canonicalize();
    return Rational(q);
  }

  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole = whole.substr(1);
    }
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !is_integer_token(whole)) return fail();
    if (!frac.empty() && !is_integer_token(frac)) return fail();

    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class numerator = (whole.empty() ? mpz_class(0) : mpz_class(whole)) * scale +
                          (frac.empty() ? mpz_class(0) : mpz_class(frac));
    if (negative) numerator = -numerator;
    mpq_class q(numerator, scale);
    q.canonicalize();
    return Rational(q);
  }

  if (!is_integer_token(text)) return fail();
  return Rational(mpq_class(mpz_class(text)));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace linksched
