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

#ifndef DCONV_RATIONAL_HPP_
#define DCONV_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dconv {

/// Exact rational number with a distinguished +inf element.
///
/// Numerator and denominator are 64-bit; every operation is carried out in
/// 128-bit intermediates and reduced, and an ArithmeticError is thrown if the
/// reduced result does not fit. The values handled here (function values of
/// small lattice objects, simplex tableaux with 0/1/half entries) stay far
/// from that limit.
///
/// +inf absorbs addition with finite values. Operations without a sensible
/// value (inf - inf, finite - inf, inf * 0, division involving inf) throw.
class Rational {
 public:
  constexpr Rational() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr Rational(std::int64_t value) : num_(value) {}
  Rational(std::int64_t num, std::int64_t den);

  static constexpr Rational infinity() {
    Rational r;
    r.inf_ = true;
    r.num_ = 1;
    return r;
  }

  [[nodiscard]] constexpr bool is_infinite() const { return inf_; }
  [[nodiscard]] constexpr bool is_finite() const { return !inf_; }
  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] constexpr bool is_integer() const { return !inf_ && den_ == 1; }
  [[nodiscard]] int sign() const;

  /// Largest integer <= value. Throws on +inf.
  [[nodiscard]] std::int64_t floor() const;
  /// Smallest integer >= value. Throws on +inf.
  [[nodiscard]] std::int64_t ceil() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.inf_ == b.inf_ && (a.inf_ || (a.num_ == b.num_ && a.den_ == b.den_));
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q" (always with a denominator) or "inf".
  [[nodiscard]] std::string to_string() const;

  /// Accepts "p", "p/q", "-p/q" and "inf". Throws InputError otherwise.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool inf_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dconv

#endif  // DCONV_RATIONAL_HPP_
