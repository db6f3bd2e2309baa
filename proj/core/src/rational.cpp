// Copyright 2026 The dconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dconv/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "dconv/error.hpp"

namespace dconv {

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (!fits(num) || !fits(den)) throw ArithmeticError("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

int Rational::sign() const {
  if (inf_) return 1;
  return (num_ > 0) - (num_ < 0);
}

std::int64_t Rational::floor() const {
  if (inf_) throw ArithmeticError("floor of +inf");
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  if (inf_) throw ArithmeticError("ceil of +inf");
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (inf_ || rhs.inf_) {
    *this = infinity();
    return *this;
  }
  *this = from_wide(Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (rhs.inf_) throw ArithmeticError("subtraction of +inf");
  if (inf_) return *this;
  *this = from_wide(Wide(num_) * rhs.den_ - Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (inf_ || rhs.inf_) {
    const Rational& finite = inf_ ? rhs : *this;
    if (finite.inf_ || finite.num_ > 0) {
      *this = infinity();
      return *this;
    }
    throw ArithmeticError("+inf multiplied by a non-positive value");
  }
  *this = from_wide(Wide(num_) * rhs.num_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (inf_ || rhs.inf_) throw ArithmeticError("division involving +inf");
  if (rhs.num_ == 0) throw ArithmeticError("division by zero");
  *this = from_wide(Wide(num_) * rhs.den_, Wide(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const {
  if (inf_) throw ArithmeticError("negation of +inf");
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (inf_) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw InputError("denominator must be positive in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dconv
