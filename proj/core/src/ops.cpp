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

#include "dconv/ops.hpp"

#include <functional>
#include <map>
#include <string>

#include "dconv/error.hpp"

namespace dconv {

namespace {

void require_finite(bool lifted, const char* op) {
  if (lifted) throw InputError(std::string(op) + " needs finite (non-lifted) input; window it first");
}

Point aggregate_point(const Point& x, const PartitionSpec& spec) {
  Point y(spec.output_dim());
  for (std::size_t j = 0; j < spec.groups.size(); ++j) y[j] = x.sum(spec.groups[j]);
  return y;
}

// Calls emit(y) for every y in w whose block sums equal x.
void for_each_decomposition(const Point& x, const SplitSpec& spec, const Window& w,
                            const std::function<void(const Point&)>& emit) {
  const std::vector<std::size_t> owner = split_owner(spec);
  const std::size_t m = owner.size();
  // rest_lo[k] / rest_hi[k]: range of the sum of coordinates k.. within the
  // same block.
  std::vector<Coord> rest_lo(m + 1, 0);
  std::vector<Coord> rest_hi(m + 1, 0);
  for (std::size_t k = m; k-- > 0;) {
    bool same = k + 1 < m && owner[k + 1] == owner[k];
    rest_lo[k] = w.lo()[k] + (same ? rest_lo[k + 1] : 0);
    rest_hi[k] = w.hi()[k] + (same ? rest_hi[k + 1] : 0);
  }
  Point y(m);
  std::function<void(std::size_t, Coord)> go = [&](std::size_t k, Coord remaining) {
    if (k == m) {
      emit(y);
      return;
    }
    bool last = k + 1 == m || owner[k + 1] != owner[k];
    if (last) {
      if (remaining < w.lo()[k] || remaining > w.hi()[k]) return;
      y[k] = remaining;
      go(k + 1, k + 1 < m ? x[owner[k + 1]] : 0);
      return;
    }
    for (Coord v = w.lo()[k]; v <= w.hi()[k]; ++v) {
      Coord rest = remaining - v;
      if (rest < rest_lo[k + 1] || rest > rest_hi[k + 1]) continue;
      y[k] = v;
      go(k + 1, rest);
    }
  };
  go(0, x[0]);
}

// Box of block sums reachable from w.
Window sum_window(const SplitSpec& spec, const Window& w) {
  const std::vector<std::size_t> owner = split_owner(spec);
  Point lo(spec.input_dim());
  Point hi(spec.input_dim());
  for (std::size_t k = 0; k < owner.size(); ++k) {
    lo[owner[k]] += w.lo()[k];
    hi[owner[k]] += w.hi()[k];
  }
  return Window(lo, hi);
}

void check_split_args(std::size_t n, const SplitSpec& spec, const Window& w) {
  spec.validate(n);
  if (w.dim() != spec.output_dim()) {
    throw DimensionError("split window has dimension " + std::to_string(w.dim()) + ", expected " +
                         std::to_string(spec.output_dim()));
  }
}

}  // namespace

std::size_t SplitSpec::output_dim() const {
  std::size_t m = 0;
  for (std::size_t b : blocks) m += b;
  return m;
}

void SplitSpec::validate(std::size_t n) const {
  if (blocks.size() != n) {
    throw DimensionError("split spec has " + std::to_string(blocks.size()) + " blocks for " +
                         std::to_string(n) + " coordinates");
  }
  for (std::size_t b : blocks) {
    if (b == 0) throw InputError("split blocks must be positive");
  }
  if (output_dim() > kMaxDim) throw DimensionError("split output dimension exceeds the limit");
}

SplitSpec SplitSpec::elementary(std::size_t n, std::size_t k) {
  if (k >= n) throw InputError("elementary split index out of range");
  SplitSpec spec{std::vector<std::size_t>(n, 1)};
  spec.blocks[k] = 2;
  return spec;
}

void PartitionSpec::validate(std::size_t n) const {
  std::vector<int> seen(n, 0);
  for (const auto& g : groups) {
    if (g.empty()) throw InputError("partition groups must be nonempty");
    for (std::size_t i : g) {
      if (i >= n) throw InputError("partition index " + std::to_string(i + 1) + " out of range");
      if (seen[i]++) throw InputError("partition index " + std::to_string(i + 1) + " repeated");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) throw InputError("partition misses index " + std::to_string(i + 1));
  }
}

PartitionSpec PartitionSpec::elementary(std::size_t n, std::size_t k) {
  if (k + 1 >= n) throw InputError("elementary aggregation index out of range");
  PartitionSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k + 1) continue;
    if (i == k) {
      spec.groups.push_back({k, k + 1});
    } else {
      spec.groups.push_back({i});
    }
  }
  return spec;
}

PartitionSpec PartitionSpec::pairing(std::size_t n) {
  PartitionSpec spec;
  for (std::size_t i = 0; i < n; ++i) spec.groups.push_back({i, n + i});
  return spec;
}

std::vector<std::size_t> split_owner(const SplitSpec& spec) {
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    for (std::size_t k = 0; k < spec.blocks[i]; ++k) owner.push_back(i);
  }
  return owner;
}

LatticeSet direct_sum_set(const LatticeSet& s1, const LatticeSet& s2) {
  require_finite(s1.lift_ones() || s2.lift_ones(), "direct sum");
  std::vector<Point> pts;
  pts.reserve(s1.size() * s2.size());
  for (const Point& x : s1.points()) {
    for (const Point& y : s2.points()) pts.push_back(x.concat(y));
  }
  return LatticeSet(s1.dim() + s2.dim(), std::move(pts));
}

LatticeFn direct_sum_fn(const LatticeFn& f1, const LatticeFn& f2) {
  require_finite(f1.lift_ones() || f2.lift_ones(), "direct sum");
  std::vector<FnEntry> entries;
  entries.reserve(f1.size() * f2.size());
  for (const FnEntry& a : f1.entries()) {
    for (const FnEntry& b : f2.entries()) entries.push_back({a.x.concat(b.x), a.value + b.value});
  }
  return LatticeFn(f1.dim() + f2.dim(), std::move(entries));
}

LatticeSet split_set(const LatticeSet& s, const SplitSpec& spec, const Window& w) {
  check_split_args(s.dim(), spec, w);
  LatticeSet sources = restrict_to_window(s, sum_window(spec, w));
  std::vector<Point> pts;
  for (const Point& x : sources.points()) {
    for_each_decomposition(x, spec, w, [&](const Point& y) { pts.push_back(y); });
  }
  if (pts.empty()) throw EmptyResultError("splitting has no point in the window");
  return LatticeSet(spec.output_dim(), std::move(pts));
}

LatticeFn split_fn(const LatticeFn& f, const SplitSpec& spec, const Window& w) {
  check_split_args(f.dim(), spec, w);
  LatticeFn sources = restrict_to_window(f, sum_window(spec, w));
  std::vector<FnEntry> entries;
  for (const FnEntry& e : sources.entries()) {
    for_each_decomposition(e.x, spec, w, [&](const Point& y) { entries.push_back({y, e.value}); });
  }
  if (entries.empty()) throw EmptyResultError("splitting has no point in the window");
  return LatticeFn(spec.output_dim(), std::move(entries));
}

LatticeSet aggregate_set(const LatticeSet& s, const PartitionSpec& spec) {
  require_finite(s.lift_ones(), "aggregation");
  spec.validate(s.dim());
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (const Point& x : s.points()) pts.push_back(aggregate_point(x, spec));
  return LatticeSet(spec.output_dim(), std::move(pts));
}

LatticeFn aggregate_fn(const LatticeFn& f, const PartitionSpec& spec) {
  require_finite(f.lift_ones(), "aggregation");
  spec.validate(f.dim());
  std::map<Point, Rational> best;
  for (const FnEntry& e : f.entries()) {
    Point y = aggregate_point(e.x, spec);
    auto [it, inserted] = best.emplace(y, e.value);
    if (!inserted && e.value < it->second) it->second = e.value;
  }
  std::vector<FnEntry> entries;
  entries.reserve(best.size());
  for (auto& [y, v] : best) entries.push_back({y, v});
  return LatticeFn(spec.output_dim(), std::move(entries));
}

LatticeSet minkowski_sum_set(const LatticeSet& s1, const LatticeSet& s2) {
  if (s1.dim() != s2.dim()) throw DimensionError("Minkowski sum of sets of different dimension");
  if (s1.lift_ones() != s2.lift_ones()) {
    throw InputError("Minkowski sum of a lifted and a finite set; window the lifted one first");
  }
  std::vector<Point> pts;
  pts.reserve(s1.size() * s2.size());
  for (const Point& x : s1.points()) {
    for (const Point& y : s2.points()) pts.push_back(x + y);
  }
  return LatticeSet(s1.dim(), std::move(pts), s1.lift_ones());
}

LatticeSet minkowski_sum_via_aggregation(const LatticeSet& s1, const LatticeSet& s2) {
  if (s1.dim() != s2.dim()) throw DimensionError("Minkowski sum of sets of different dimension");
  return aggregate_set(direct_sum_set(s1, s2), PartitionSpec::pairing(s1.dim()));
}

LatticeFn convolution_fn(const LatticeFn& f1, const LatticeFn& f2) {
  if (f1.dim() != f2.dim()) throw DimensionError("convolution of functions of different dimension");
  require_finite(f1.lift_ones() || f2.lift_ones(), "convolution");
  std::map<Point, Rational> best;
  for (const FnEntry& a : f1.entries()) {
    for (const FnEntry& b : f2.entries()) {
      Rational v = a.value + b.value;
      auto [it, inserted] = best.emplace(a.x + b.x, v);
      if (!inserted && v < it->second) it->second = v;
    }
  }
  std::vector<FnEntry> entries;
  entries.reserve(best.size());
  for (auto& [x, v] : best) entries.push_back({x, v});
  return LatticeFn(f1.dim(), std::move(entries));
}

LatticeFn convolution_via_aggregation(const LatticeFn& f1, const LatticeFn& f2) {
  if (f1.dim() != f2.dim()) throw DimensionError("convolution of functions of different dimension");
  return aggregate_fn(direct_sum_fn(f1, f2), PartitionSpec::pairing(f1.dim()));
}

}  // namespace dconv
