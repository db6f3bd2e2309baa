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

#ifndef DCONV_POINT_HPP_
#define DCONV_POINT_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dconv {

using Coord = std::int64_t;

/// Largest dimension a Point can hold. Points live inline (no heap), which
/// keeps the pair loops of the recognizers allocation-free.
inline constexpr std::size_t kMaxDim = 16;

/// Integer vector in Z^n, 1 <= n <= kMaxDim. Ordered lexicographically.
class Point {
 public:
  Point() = default;
  /// Zero vector of dimension `dim`.
  explicit Point(std::size_t dim);
  Point(std::initializer_list<Coord> coords);
  explicit Point(std::span<const Coord> coords);

  static Point unit(std::size_t dim, std::size_t i);
  static Point ones(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  Coord& operator[](std::size_t i) { return c_[i]; }
  Coord operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] std::span<const Coord> coords() const { return {c_.data(), dim_}; }
  [[nodiscard]] const Coord* begin() const { return c_.data(); }
  [[nodiscard]] const Coord* end() const { return c_.data() + dim_; }

  Point& operator+=(const Point& rhs);
  Point& operator-=(const Point& rhs);
  Point& operator*=(Coord k);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Coord k, Point a) { return a *= k; }
  Point operator-() const;

  /// Adds `k` to every coordinate.
  [[nodiscard]] Point shifted(Coord k) const;
  /// Component sum x(A) over the given coordinate indices.
  [[nodiscard]] Coord sum(std::span<const std::size_t> indices) const;
  [[nodiscard]] Coord sum() const;
  [[nodiscard]] Coord norm_inf() const;
  [[nodiscard]] Coord norm_1() const;

  /// Concatenation (x, y).
  [[nodiscard]] Point concat(const Point& tail) const;
  /// Coordinates [first, first + count).
  [[nodiscard]] Point slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const Point& a, const Point& b) {
    return a.dim_ == b.dim_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::array<Coord, kMaxDim> c_{};
  std::size_t dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Throws DimensionError unless a and b share a dimension.
void require_same_dim(const Point& a, const Point& b);

struct Supports {
  std::vector<std::size_t> plus;   // {i : p_i > 0}
  std::vector<std::size_t> minus;  // {i : p_i < 0}
};

/// Positive and negative supports of p (0-based indices).
Supports supports(const Point& p);

/// Componentwise round-up and round-down of (x + y) / 2.
std::pair<Point, Point> midpoint_round(const Point& x, const Point& y);

/// Componentwise max (join) and min (meet).
std::pair<Point, Point> join_meet(const Point& x, const Point& y);

/// Integer box [lo, hi] with lo <= hi componentwise.
class Window {
 public:
  Window(Point lo, Point hi);
  /// The cube [lo, hi]^dim.
  static Window cube(std::size_t dim, Coord lo, Coord hi);
  /// Smallest box containing all points (points must be nonempty).
  static Window bounding(std::span<const Point> points);

  [[nodiscard]] const Point& lo() const { return lo_; }
  [[nodiscard]] const Point& hi() const { return hi_; }
  [[nodiscard]] std::size_t dim() const { return lo_.dim(); }
  [[nodiscard]] bool contains(const Point& p) const;
  /// Number of lattice points in the box.
  [[nodiscard]] std::uint64_t volume() const;
  /// All lattice points in lexicographic order.
  [[nodiscard]] std::vector<Point> points() const;
  /// Calls `fn` on each lattice point in lexicographic order.
  void for_each(const std::function<void(const Point&)>& fn) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Point lo_;
  Point hi_;
};

}  // namespace dconv

template <>
struct std::hash<dconv::Point> {
  std::size_t operator()(const dconv::Point& p) const noexcept {
    std::size_t h = p.dim();
    for (dconv::Coord c : p) h = h * 1000003u ^ std::hash<dconv::Coord>{}(c);
    return h;
  }
};

#endif  // DCONV_POINT_HPP_
