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

#include "dconv/lattice.hpp"

#include <algorithm>
#include <string>

#include "dconv/error.hpp"

namespace dconv {

namespace {

void check_points(std::size_t dim, std::span<const Point> points) {
  for (const Point& p : points) {
    if (p.dim() != dim) {
      throw DimensionError("point " + p.to_string() + " does not have dimension " +
                           std::to_string(dim));
    }
  }
}

void require_unlifted(bool lifted, const char* op) {
  if (lifted) throw InputError(std::string(op) + " does not accept lifted objects");
}

// Range of a with lo <= p + a*1 <= hi; empty when first > second.
std::pair<Coord, Coord> lift_range(const Point& p, const Window& w) {
  Coord lo = w.lo()[0] - p[0];
  Coord hi = w.hi()[0] - p[0];
  for (std::size_t i = 1; i < p.dim(); ++i) {
    lo = std::max(lo, w.lo()[i] - p[i]);
    hi = std::min(hi, w.hi()[i] - p[i]);
  }
  return {lo, hi};
}

}  // namespace

Point normalize_lift(const Point& p) { return p.shifted(-p[p.dim() - 1]); }

LatticeSet::LatticeSet(std::size_t dim, std::vector<Point> points, bool lift_ones)
    : dim_(dim), points_(std::move(points)), lift_(lift_ones) {
  if (dim == 0 || dim > kMaxDim) throw DimensionError("set dimension out of range");
  check_points(dim_, points_);
  if (lift_) {
    for (Point& p : points_) p = normalize_lift(p);
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool LatticeSet::contains(const Point& p) const {
  if (p.dim() != dim_) return false;
  return std::binary_search(points_.begin(), points_.end(), lift_ ? normalize_lift(p) : p);
}

LatticeFn::LatticeFn(std::size_t dim, std::vector<FnEntry> entries, bool lift_ones, Rational ramp)
    : dim_(dim), entries_(std::move(entries)), lift_(lift_ones), ramp_(lift_ones ? ramp : Rational(0)) {
  if (dim == 0 || dim > kMaxDim) throw DimensionError("function dimension out of range");
  if (entries_.empty()) throw InputError("function with empty effective domain");
  if (ramp_.is_infinite()) throw InputError("ramp must be finite");
  for (FnEntry& e : entries_) {
    if (e.x.dim() != dim_) {
      throw DimensionError("point " + e.x.to_string() + " does not have dimension " +
                           std::to_string(dim_));
    }
    if (e.value.is_infinite()) {
      throw InputError("explicit +inf entry at " + e.x.to_string() +
                       "; leave the point out of the domain instead");
    }
    if (lift_) {
      Coord shift = e.x[dim_ - 1];
      e.x = normalize_lift(e.x);
      e.value -= Rational(shift) * ramp_;
    }
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const FnEntry& a, const FnEntry& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].x == entries_[i - 1].x) {
      if (entries_[i].value != entries_[i - 1].value) {
        throw InputError("conflicting values at " + entries_[i].x.to_string());
      }
    }
  }
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

LatticeFn LatticeFn::indicator(const LatticeSet& s) {
  std::vector<FnEntry> entries;
  entries.reserve(s.size());
  for (const Point& p : s.points()) entries.push_back({p, Rational(0)});
  return LatticeFn(s.dim(), std::move(entries), s.lift_ones(), Rational(0));
}

const FnEntry* LatticeFn::find(const Point& p) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                             [](const FnEntry& e, const Point& q) { return e.x < q; });
  if (it == entries_.end() || it->x != p) return nullptr;
  return &*it;
}

Rational LatticeFn::value(const Point& p) const {
  if (p.dim() != dim_) return Rational::infinity();
  if (!lift_) {
    const FnEntry* e = find(p);
    return e ? e->value : Rational::infinity();
  }
  Coord shift = p[dim_ - 1];
  const FnEntry* e = find(normalize_lift(p));
  if (!e) return Rational::infinity();
  return e->value + Rational(shift) * ramp_;
}

bool LatticeFn::in_domain(const Point& p) const {
  if (p.dim() != dim_) return false;
  return find(lift_ ? normalize_lift(p) : p) != nullptr;
}

LatticeSet LatticeFn::dom() const {
  std::vector<Point> pts;
  pts.reserve(entries_.size());
  for (const FnEntry& e : entries_) pts.push_back(e.x);
  return LatticeSet(dim_, std::move(pts), lift_);
}

bool LatticeFn::is_indicator() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const FnEntry& e) { return e.value == Rational(0); }) &&
         ramp_ == Rational(0);
}

Point d_apply(const Point& p) {
  Point x = p;
  for (std::size_t i = 1; i < p.dim(); ++i) x[i] = p[i] - p[i - 1];
  return x;
}

Point d_inverse_apply(const Point& x) {
  Point p = x;
  for (std::size_t i = 1; i < x.dim(); ++i) p[i] = p[i - 1] + x[i];
  return p;
}

LatticeSet d_transform(const LatticeSet& s) {
  require_unlifted(s.lift_ones(), "d_transform");
  std::vector<Point> pts;
  for (const Point& x : s.points()) pts.push_back(d_inverse_apply(x));
  return LatticeSet(s.dim(), std::move(pts));
}

LatticeFn d_transform(const LatticeFn& f) {
  require_unlifted(f.lift_ones(), "d_transform");
  std::vector<FnEntry> entries;
  for (const FnEntry& e : f.entries()) entries.push_back({d_inverse_apply(e.x), e.value});
  return LatticeFn(f.dim(), std::move(entries));
}

LatticeSet d_inverse_transform(const LatticeSet& s) {
  require_unlifted(s.lift_ones(), "d_inverse_transform");
  std::vector<Point> pts;
  for (const Point& p : s.points()) pts.push_back(d_apply(p));
  return LatticeSet(s.dim(), std::move(pts));
}

LatticeFn d_inverse_transform(const LatticeFn& f) {
  require_unlifted(f.lift_ones(), "d_inverse_transform");
  std::vector<FnEntry> entries;
  for (const FnEntry& e : f.entries()) entries.push_back({d_apply(e.x), e.value});
  return LatticeFn(f.dim(), std::move(entries));
}

LatticeSet restrict_to_window(const LatticeSet& s, const Window& w) {
  if (w.dim() != s.dim()) throw DimensionError("window dimension does not match the set");
  std::vector<Point> pts;
  for (const Point& p : s.points()) {
    if (!s.lift_ones()) {
      if (w.contains(p)) pts.push_back(p);
      continue;
    }
    auto [lo, hi] = lift_range(p, w);
    for (Coord a = lo; a <= hi; ++a) pts.push_back(p.shifted(a));
  }
  if (pts.empty()) throw EmptyResultError("set does not meet the window");
  return LatticeSet(s.dim(), std::move(pts));
}

LatticeFn restrict_to_window(const LatticeFn& f, const Window& w) {
  if (w.dim() != f.dim()) throw DimensionError("window dimension does not match the function");
  std::vector<FnEntry> entries;
  for (const FnEntry& e : f.entries()) {
    if (!f.lift_ones()) {
      if (w.contains(e.x)) entries.push_back(e);
      continue;
    }
    auto [lo, hi] = lift_range(e.x, w);
    for (Coord a = lo; a <= hi; ++a) {
      entries.push_back({e.x.shifted(a), e.value + Rational(a) * f.ramp()});
    }
  }
  if (entries.empty()) throw EmptyResultError("function domain does not meet the window");
  return LatticeFn(f.dim(), std::move(entries));
}

}  // namespace dconv
