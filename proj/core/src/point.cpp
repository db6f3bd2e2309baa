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

#include "dconv/point.hpp"

#include <ostream>
#include <sstream>

#include "dconv/error.hpp"

namespace dconv {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw DimensionError("point dimension " + std::to_string(dim) + " outside [1, " +
                         std::to_string(kMaxDim) + "]");
  }
}

Coord floor_half(Coord v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
Coord ceil_half(Coord v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

}  // namespace

Point::Point(std::size_t dim) : dim_(dim) { check_dim(dim); }

Point::Point(std::initializer_list<Coord> coords) : dim_(coords.size()) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point::Point(std::span<const Coord> coords) : dim_(coords.size()) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point Point::unit(std::size_t dim, std::size_t i) {
  Point p(dim);
  p[i] = 1;
  return p;
}

Point Point::ones(std::size_t dim) { return Point(dim).shifted(1); }

Point& Point::operator+=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] += rhs.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Point& Point::operator*=(Coord k) {
  for (std::size_t i = 0; i < dim_; ++i) c_[i] *= k;
  return *this;
}

Point Point::operator-() const {
  Point r = *this;
  r *= -1;
  return r;
}

Point Point::shifted(Coord k) const {
  Point r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] += k;
  return r;
}

Coord Point::sum(std::span<const std::size_t> indices) const {
  Coord s = 0;
  for (std::size_t i : indices) s += c_.at(i);
  return s;
}

Coord Point::sum() const {
  Coord s = 0;
  for (Coord c : *this) s += c;
  return s;
}

Coord Point::norm_inf() const {
  Coord m = 0;
  for (Coord c : *this) m = std::max(m, c < 0 ? -c : c);
  return m;
}

Coord Point::norm_1() const {
  Coord m = 0;
  for (Coord c : *this) m += c < 0 ? -c : c;
  return m;
}

Point Point::concat(const Point& tail) const {
  check_dim(dim_ + tail.dim_);
  Point r = *this;
  std::copy(tail.begin(), tail.end(), r.c_.begin() + static_cast<std::ptrdiff_t>(dim_));
  r.dim_ = dim_ + tail.dim_;
  return r;
}

Point Point::slice(std::size_t first, std::size_t count) const {
  if (first + count > dim_) throw DimensionError("slice out of range");
  return Point(coords().subspan(first, count));
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.to_string(); }

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

Supports supports(const Point& p) {
  Supports s;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] > 0) s.plus.push_back(i);
    if (p[i] < 0) s.minus.push_back(i);
  }
  return s;
}

std::pair<Point, Point> midpoint_round(const Point& x, const Point& y) {
  require_same_dim(x, y);
  Point up(x.dim());
  Point down(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    up[i] = ceil_half(x[i] + y[i]);
    down[i] = floor_half(x[i] + y[i]);
  }
  return {up, down};
}

std::pair<Point, Point> join_meet(const Point& x, const Point& y) {
  require_same_dim(x, y);
  Point join(x.dim());
  Point meet(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    join[i] = std::max(x[i], y[i]);
    meet[i] = std::min(x[i], y[i]);
  }
  return {join, meet};
}

Window::Window(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dim(lo_, hi_);
  for (std::size_t i = 0; i < lo_.dim(); ++i) {
    if (lo_[i] > hi_[i]) throw InputError("window with lo > hi in coordinate " + std::to_string(i));
  }
}

Window Window::cube(std::size_t dim, Coord lo, Coord hi) {
  return Window(Point(dim).shifted(lo), Point(dim).shifted(hi));
}

Window Window::bounding(std::span<const Point> points) {
  if (points.empty()) throw EmptyResultError("bounding box of an empty point list");
  Point lo = points.front();
  Point hi = points.front();
  for (const Point& p : points) {
    hi = join_meet(hi, p).first;
    lo = join_meet(lo, p).second;
  }
  return Window(lo, hi);
}

bool Window::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] < lo_[i] || p[i] > hi_[i]) return false;
  }
  return true;
}

std::uint64_t Window::volume() const {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < dim(); ++i) v *= static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1);
  return v;
}

void Window::for_each(const std::function<void(const Point&)>& fn) const {
  Point p = lo_;
  const std::size_t n = dim();
  while (true) {
    fn(p);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < hi_[i]) {
        ++p[i];
        break;
      }
      p[i] = lo_[i];
      if (i == 0) return;
    }
  }
}

std::vector<Point> Window::points() const {
  std::vector<Point> out;
  out.reserve(volume());
  for_each([&](const Point& p) { out.push_back(p); });
  return out;
}

}  // namespace dconv
