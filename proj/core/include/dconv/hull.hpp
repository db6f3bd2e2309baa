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

#ifndef DCONV_HULL_HPP_
#define DCONV_HULL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dconv/lattice.hpp"
#include "dconv/point.hpp"
#include "dconv/rational.hpp"

namespace dconv {

/// Point of (Z/2)^n, stored as twice its coordinates.
class HalfPoint {
 public:
  HalfPoint() = default;
  /// The point doubled / 2.
  explicit HalfPoint(Point doubled) : doubled_(std::move(doubled)) {}
  static HalfPoint from_point(const Point& p) { return HalfPoint(2 * p); }
  /// (x + y) / 2.
  static HalfPoint midpoint(const Point& x, const Point& y) { return HalfPoint(x + y); }

  [[nodiscard]] std::size_t dim() const { return doubled_.dim(); }
  [[nodiscard]] const Point& doubled() const { return doubled_; }
  [[nodiscard]] Rational coord(std::size_t i) const { return Rational(doubled_[i], 2); }
  [[nodiscard]] bool is_half(std::size_t i) const { return doubled_[i] % 2 != 0; }
  [[nodiscard]] bool is_integral() const;
  /// Componentwise floor and ceiling.
  [[nodiscard]] Point floor() const;
  [[nodiscard]] Point ceil() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const HalfPoint&, const HalfPoint&) = default;

 private:
  Point doubled_;
};

struct IntegralNeighborhood {
  HalfPoint center;
  /// The floor/ceiling box, in lexicographic order.
  std::vector<Point> points;
};

IntegralNeighborhood neighborhood(const HalfPoint& x);

/// Result of an exact linear program.
struct LpSolution {
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase simplex with Bland's rule for
///   min c.x  subject to  A x = b, x >= 0.
/// Rows of `a` must have the length of `c`. Returns nullopt when infeasible.
/// The objective must be bounded below on the feasible set (it is whenever
/// the feasible set is bounded, as it is for convex-combination systems).
std::optional<LpSolution> minimize_standard_form(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b,
                                                 const std::vector<Rational>& c);

/// True iff x is a convex combination of S n N(x). Lifted sets throw.
bool in_local_hull(const LatticeSet& s, const HalfPoint& x);

/// Local convex extension at x: the minimum of sum lambda_v f(v) over convex
/// combinations of N(x) n dom f equal to x; +inf when there are none.
Rational local_extension_value(const LatticeFn& f, const HalfPoint& x);

}  // namespace dconv

#endif  // DCONV_HULL_HPP_
