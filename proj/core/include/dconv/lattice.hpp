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

#ifndef DCONV_LATTICE_HPP_
#define DCONV_LATTICE_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dconv/point.hpp"
#include "dconv/rational.hpp"

namespace dconv {

/// Finite subset of Z^n, or a finite set of representatives lifted along the
/// all-ones direction.
///
/// A lifted set denotes {p + a*1 : p in points(), a in Z}. Representatives
/// are normalized so their last coordinate is 0, which makes equality of
/// lifted sets a comparison of representatives.
class LatticeSet {
 public:
  LatticeSet() = default;
  LatticeSet(std::size_t dim, std::vector<Point> points, bool lift_ones = false);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] bool lift_ones() const { return lift_; }
  /// Stored points (representatives when lifted), sorted and distinct.
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }
  [[nodiscard]] bool contains(const Point& p) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  bool lift_ = false;
};

struct FnEntry {
  Point x;
  Rational value;
  friend bool operator==(const FnEntry&, const FnEntry&) = default;
};

/// Function Z^n -> Q u {+inf} with a finite, nonempty effective domain, or
/// (when lifted) one satisfying f(x + 1) = f(x) + ramp whose representatives
/// have last coordinate 0.
class LatticeFn {
 public:
  LatticeFn() = default;
  LatticeFn(std::size_t dim, std::vector<FnEntry> entries, bool lift_ones = false,
            Rational ramp = 0);

  /// 0 on s, +inf elsewhere. Lifted sets give lifted indicators with ramp 0.
  static LatticeFn indicator(const LatticeSet& s);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] bool lift_ones() const { return lift_; }
  [[nodiscard]] const Rational& ramp() const { return ramp_; }
  [[nodiscard]] const std::vector<FnEntry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  /// f(p); +inf outside the effective domain.
  [[nodiscard]] Rational value(const Point& p) const;
  [[nodiscard]] Rational operator()(const Point& p) const { return value(p); }
  [[nodiscard]] bool in_domain(const Point& p) const;
  /// Effective domain, lifted iff f is.
  [[nodiscard]] LatticeSet dom() const;
  /// True iff every value is 0.
  [[nodiscard]] bool is_indicator() const;

  friend bool operator==(const LatticeFn&, const LatticeFn&) = default;

 private:
  const FnEntry* find(const Point& p) const;

  std::size_t dim_ = 0;
  std::vector<FnEntry> entries_;
  bool lift_ = false;
  Rational ramp_;
};

/// p - p_n * 1: the representative of p along the all-ones direction.
Point normalize_lift(const Point& p);

/// Dp for the bidiagonal D (d_ii = 1, d_{i+1,i} = -1):
/// (p_1, p_2 - p_1, ..., p_n - p_{n-1}).
Point d_apply(const Point& p);
/// D^{-1} x: prefix sums (x_1, x_1 + x_2, ..., x_1 + ... + x_n).
Point d_inverse_apply(const Point& x);

/// Pull back through x = Dp: maps every domain point x to D^{-1} x, so a
/// multimodular input yields an L-natural object. Lifted inputs throw.
LatticeSet d_transform(const LatticeSet& s);
LatticeFn d_transform(const LatticeFn& f);
/// Exact inverse of d_transform: maps every domain point p to Dp.
LatticeSet d_inverse_transform(const LatticeSet& s);
LatticeFn d_inverse_transform(const LatticeFn& f);

/// Intersection with the window; lifted objects are materialized first.
/// Throws EmptyResultError if nothing remains.
LatticeSet restrict_to_window(const LatticeSet& s, const Window& w);
LatticeFn restrict_to_window(const LatticeFn& f, const Window& w);

}  // namespace dconv

#endif  // DCONV_LATTICE_HPP_
