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

#include "dconv/classes.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "dconv/error.hpp"
#include "dconv/hull.hpp"

namespace dconv {

namespace {

struct LabelInfo {
  ClassLabel label;
  std::string_view name;
  bool is_set;
};

constexpr std::array<LabelInfo, 22> kLabels = {{
    {ClassLabel::IntegerBox, "integer-box", true},
    {ClassLabel::SeparableConvex, "separable-convex", false},
    {ClassLabel::IntegrallyConvexSet, "ic-set", true},
    {ClassLabel::IntegrallyConvexFn, "ic-fn", false},
    {ClassLabel::LNatSet, "lnat-set", true},
    {ClassLabel::LNatFn, "lnat-fn", false},
    {ClassLabel::LSet, "l-set", true},
    {ClassLabel::LFn, "l-fn", false},
    {ClassLabel::MNatSet, "mnat-set", true},
    {ClassLabel::MNatFn, "mnat-fn", false},
    {ClassLabel::MSet, "m-set", true},
    {ClassLabel::MFn, "m-fn", false},
    {ClassLabel::MultimodularSet, "multimodular-set", true},
    {ClassLabel::MultimodularFn, "multimodular-fn", false},
    {ClassLabel::GlobalDMCSet, "dmc-set", true},
    {ClassLabel::GlobalDMCFn, "global-dmc-fn", false},
    {ClassLabel::LocalDMCFn, "local-dmc-fn", false},
    {ClassLabel::JumpSystem, "jump-system", true},
    {ClassLabel::ConstParityJump, "cp-jump", true},
    {ClassLabel::SimultExchJump, "se-jump", true},
    {ClassLabel::JumpMFn, "jump-m-fn", false},
    {ClassLabel::JumpMNatFn, "jump-mnat-fn", false},
}};

constexpr std::array<ClassLabel, 22> kAllLabels = [] {
  std::array<ClassLabel, 22> out{};
  for (std::size_t i = 0; i < kLabels.size(); ++i) out[i] = kLabels[i].label;
  return out;
}();

constexpr std::array<std::string_view, 7> kWitnessNames = {
    "missing-point", "pair", "exchange", "jump", "shift", "square-modularity", "axis-convexity"};

const LabelInfo& info(ClassLabel label) { return kLabels[static_cast<std::size_t>(label)]; }

// The axiom a label is checked against. Set labels reuse the function axioms
// through the indicator, except for the two set-only axioms.
enum class Rule {
  Box,
  Separable,
  Integral,
  Midpoint,
  GlobalDmc,
  LocalDmc,
  LConvex,
  MNat,
  M,
  Multimodular,
  TwoStep,
  JumpM,
  JumpMNat,
};

Rule rule_of(ClassLabel label) {
  switch (label) {
    case ClassLabel::IntegerBox:
      return Rule::Box;
    case ClassLabel::SeparableConvex:
      return Rule::Separable;
    case ClassLabel::IntegrallyConvexSet:
    case ClassLabel::IntegrallyConvexFn:
      return Rule::Integral;
    case ClassLabel::LNatSet:
    case ClassLabel::LNatFn:
      return Rule::Midpoint;
    case ClassLabel::LSet:
    case ClassLabel::LFn:
      return Rule::LConvex;
    case ClassLabel::MNatSet:
    case ClassLabel::MNatFn:
      return Rule::MNat;
    case ClassLabel::MSet:
    case ClassLabel::MFn:
      return Rule::M;
    case ClassLabel::MultimodularSet:
    case ClassLabel::MultimodularFn:
      return Rule::Multimodular;
    case ClassLabel::GlobalDMCSet:
    case ClassLabel::GlobalDMCFn:
      return Rule::GlobalDmc;
    case ClassLabel::LocalDMCFn:
      return Rule::LocalDmc;
    case ClassLabel::JumpSystem:
      return Rule::TwoStep;
    case ClassLabel::ConstParityJump:
    case ClassLabel::JumpMFn:
      return Rule::JumpM;
    case ClassLabel::SimultExchJump:
    case ClassLabel::JumpMNatFn:
      return Rule::JumpMNat;
  }
  throw InputError("unknown class label");
}

// lhs >= rhs in the extended sense: +inf on the left always holds, +inf on
// the right only against +inf on the left.
bool holds(const Rational& lhs, const Rational& rhs) { return lhs.is_infinite() || lhs >= rhs; }

Point unit(std::size_t n, std::size_t i) { return Point::unit(n, i); }

// ---------------------------------------------------------------------------
// Single-tuple axioms. Each returns true iff the tuple is a violation.

bool box_violates(const LatticeFn& f, const Point& x) {
  if (f.in_domain(x)) return false;
  std::vector<Point> pts;
  for (const FnEntry& e : f.entries()) pts.push_back(e.x);
  return Window::bounding(pts).contains(x);
}

bool midpoint_violates(const LatticeFn& f, const Point& x, const Point& y) {
  auto [up, down] = midpoint_round(x, y);
  return !holds(f(x) + f(y), f(up) + f(down));
}

bool submodular_violates(const LatticeFn& f, const Point& x, const Point& y) {
  auto [join, meet] = join_meet(x, y);
  return !holds(f(x) + f(y), f(join) + f(meet));
}

bool integral_violates(const LatticeFn& f, const Point& x, const Point& y,
                       std::unordered_map<Point, Rational>* cache) {
  Rational lhs = f(x) + f(y);
  if (lhs.is_infinite()) return false;
  HalfPoint mid = HalfPoint::midpoint(x, y);
  Rational ext;
  if (cache) {
    auto it = cache->find(mid.doubled());
    if (it == cache->end()) it = cache->emplace(mid.doubled(), local_extension_value(f, mid)).first;
    ext = it->second;
  } else {
    ext = local_extension_value(f, mid);
  }
  return !holds(lhs, Rational(2) * ext);
}

bool exchange_violates(const LatticeFn& f, const Point& x, const Point& y, std::size_t i,
                       bool allow_zero) {
  if (i >= x.dim() || x[i] <= y[i]) return false;
  Rational lhs = f(x) + f(y);
  if (lhs.is_infinite()) return false;
  const std::size_t n = x.dim();
  Point xi = x - unit(n, i);
  Point yi = y + unit(n, i);
  if (allow_zero && holds(lhs, f(xi) + f(yi))) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] >= y[j]) continue;
    if (holds(lhs, f(xi + unit(n, j)) + f(yi - unit(n, j)))) return false;
  }
  return true;
}

bool is_increment(const Point& x, const Point& y, const Point& s) {
  if (s.dim() != x.dim() || s.norm_1() != 1) return false;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (s[k] == 0) continue;
    return (y[k] - x[k]) * s[k] > 0;
  }
  return false;
}

bool jump_violates(const LatticeFn& f, Rule rule, const Point& x, const Point& y, const Point& s) {
  if (!is_increment(x, y, s)) return false;
  Rational lhs = f(x) + f(y);
  if (lhs.is_infinite()) return false;
  Point xs = x + s;
  if (rule == Rule::TwoStep) {
    if (f.in_domain(xs)) return false;
    for (const Point& t : increments(xs, y)) {
      if (f.in_domain(xs + t)) return false;
    }
    return true;
  }
  Point ys = y - s;
  if (rule == Rule::JumpMNat && holds(lhs, f(xs) + f(ys))) return false;
  for (const Point& t : increments(xs, y)) {
    if (holds(lhs, f(xs + t) + f(ys - t))) return false;
  }
  return true;
}

bool separable_square_violates(const LatticeFn& f, const Point& x, std::size_t i, std::size_t j) {
  const std::size_t n = x.dim();
  if (i >= n || j >= n || i == j) return false;
  Point xi = x + unit(n, i);
  Point xj = x + unit(n, j);
  Point xij = xi + unit(n, j);
  Rational a = f(x);
  Rational b = f(xi);
  Rational c = f(xj);
  Rational d = f(xij);
  if (a.is_infinite() || b.is_infinite() || c.is_infinite() || d.is_infinite()) return false;
  return a + d != b + c;
}

bool separable_axis_violates(const LatticeFn& f, const Point& x, std::size_t i) {
  const std::size_t n = x.dim();
  if (i >= n) return false;
  Rational lo = f(x - unit(n, i));
  Rational hi = f(x + unit(n, i));
  Rational mid = f(x);
  if (lo.is_infinite() || hi.is_infinite() || mid.is_infinite()) return false;
  return lo + hi < Rational(2) * mid;
}

// Midpoint inequality of g(p) = f(Dp) at p = D^{-1} x, q = D^{-1} y.
bool multimodular_pair_violates(const LatticeFn& f, const Point& x, const Point& y) {
  auto [up, down] = midpoint_round(d_inverse_apply(x), d_inverse_apply(y));
  return !holds(f(x) + f(y), f(d_apply(up)) + f(d_apply(down)));
}

// ---------------------------------------------------------------------------
// Pair scans.

struct PairRef {
  Coord ninf;
  Coord n1;
  std::uint32_t a;
  std::uint32_t b;
};

// Pairs of distinct points with |x - y|_inf >= min_inf, sorted by the
// witness order. `ordered` includes both (a, b) and (b, a).
std::vector<PairRef> sorted_pairs(const std::vector<Point>& pts, bool ordered, Coord min_inf) {
  std::vector<PairRef> out;
  for (std::uint32_t a = 0; a < pts.size(); ++a) {
    for (std::uint32_t b = ordered ? 0 : a + 1; b < pts.size(); ++b) {
      if (a == b) continue;
      Point d = pts[a] - pts[b];
      Coord ninf = d.norm_inf();
      if (ninf < min_inf) continue;
      out.push_back({ninf, d.norm_1(), a, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const PairRef& l, const PairRef& r) {
    if (l.ninf != r.ninf) return l.ninf < r.ninf;
    if (l.n1 != r.n1) return l.n1 < r.n1;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  return out;
}

std::vector<Point> domain_points(const LatticeFn& f) {
  std::vector<Point> pts;
  pts.reserve(f.size());
  for (const FnEntry& e : f.entries()) pts.push_back(e.x);
  return pts;
}

Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }

Witness pair_witness(const Point& x, const Point& y) {
  Witness w;
  w.kind = WitnessKind::Pair;
  w.x = x;
  w.y = y;
  return w;
}

Verdict check_box(const LatticeFn& f) {
  std::vector<Point> pts = domain_points(f);
  Window box = Window::bounding(pts);
  if (box.volume() == pts.size()) return {};
  for (const Point& p : box.points()) {
    if (!f.in_domain(p)) {
      Witness w;
      w.kind = WitnessKind::MissingPoint;
      w.x = p;
      return fail(w);
    }
  }
  return {};
}

Verdict check_separable(const LatticeFn& f) {
  Verdict box = check_box(f);
  if (!box.member) return box;
  const std::size_t n = f.dim();
  for (const FnEntry& e : f.entries()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (separable_square_violates(f, e.x, i, j)) {
          Witness w;
          w.kind = WitnessKind::SquareModularity;
          w.x = e.x;
          w.i = i;
          w.j = j;
          return fail(w);
        }
      }
      if (separable_axis_violates(f, e.x, i)) {
        Witness w;
        w.kind = WitnessKind::AxisConvexity;
        w.x = e.x;
        w.i = i;
        return fail(w);
      }
    }
  }
  return {};
}

template <class Violates>
Verdict scan_symmetric(const std::vector<Point>& pts, Coord min_inf, Violates violates_fn) {
  for (const PairRef& pr : sorted_pairs(pts, false, min_inf)) {
    if (violates_fn(pts[pr.a], pts[pr.b])) return fail(pair_witness(pts[pr.a], pts[pr.b]));
  }
  return {};
}

Verdict check_exchange(const LatticeFn& f, bool allow_zero) {
  std::vector<Point> pts = domain_points(f);
  for (const PairRef& pr : sorted_pairs(pts, true, 1)) {
    const Point& x = pts[pr.a];
    const Point& y = pts[pr.b];
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (exchange_violates(f, x, y, i, allow_zero)) {
        Witness w;
        w.kind = WitnessKind::Exchange;
        w.x = x;
        w.y = y;
        w.i = i;
        return fail(w);
      }
    }
  }
  return {};
}

Verdict check_jump(const LatticeFn& f, Rule rule) {
  std::vector<Point> pts = domain_points(f);
  for (const PairRef& pr : sorted_pairs(pts, true, 1)) {
    const Point& x = pts[pr.a];
    const Point& y = pts[pr.b];
    for (const Point& s : increments(x, y)) {
      if (jump_violates(f, rule, x, y, s)) {
        Witness w;
        w.kind = WitnessKind::Jump;
        w.x = x;
        w.y = y;
        w.s = s;
        return fail(w);
      }
    }
  }
  return {};
}

bool local_dmc_violates(const LatticeFn& f, const Point& x, const Point& y) {
  Coord ninf = (x - y).norm_inf();
  if (ninf < 2) return false;
  auto [up, down] = midpoint_round(x, y);
  if (f.in_domain(x) && f.in_domain(y) && (!f.in_domain(up) || !f.in_domain(down))) return true;
  return ninf == 2 && midpoint_violates(f, x, y);
}

// Submodularity of a lifted function: x = b, y = b' + d*1 over representative
// pairs. Shifts outside (min(b - b'), max(b - b')) give comparable points.
Verdict check_lifted_submodular(const LatticeFn& f) {
  std::vector<Point> reps = domain_points(f);
  std::optional<Witness> best;
  auto key = [](const Witness& w) {
    Point d = w.x - w.y;
    return std::make_tuple(d.norm_inf(), d.norm_1(), w.x, w.y);
  };
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      Point diff = reps[a] - reps[b];
      Coord lo = *std::min_element(diff.begin(), diff.end());
      Coord hi = *std::max_element(diff.begin(), diff.end());
      for (Coord d = lo + 1; d < hi; ++d) {
        Point x = reps[a];
        Point y = reps[b].shifted(d);
        if (!submodular_violates(f, x, y)) continue;
        if (y < x) std::swap(x, y);
        Witness w = pair_witness(x, y);
        if (!best || key(w) < key(*best)) best = w;
      }
    }
  }
  if (best) return fail(*best);
  return {};
}

Verdict check_lconvex(const LatticeFn& f) {
  if (!f.lift_ones()) {
    // A nonempty finite set is never invariant under +1.
    Witness w;
    w.kind = WitnessKind::Shift;
    w.x = f.entries().back().x;
    return fail(w);
  }
  return check_lifted_submodular(f);
}

// f~(x0, x) = f(x_1 - x_0, ..., x_n - x_{n-1}) as a lifted function in n + 1
// variables with ramp 0.
LatticeFn multimodular_lift(const LatticeFn& f) {
  std::vector<FnEntry> entries;
  const std::size_t n = f.dim();
  for (const FnEntry& e : f.entries()) {
    Point big(n + 1);
    Coord tail = 0;
    for (std::size_t k = n; k-- > 0;) {
      tail += e.x[k];
      big[k] = -tail;
    }
    entries.push_back({big, e.value});
  }
  return LatticeFn(n + 1, std::move(entries), true, 0);
}

Verdict check_multimodular(const LatticeFn& f) {
  Verdict lifted = check_lifted_submodular(multimodular_lift(f));
  if (lifted.member) return {};
  // The witness is reported as a pair of domain points whose images under
  // D^{-1} violate midpoint convexity of g(p) = f(Dp).
  std::vector<Point> pullback;
  for (const FnEntry& e : f.entries()) pullback.push_back(d_inverse_apply(e.x));
  std::sort(pullback.begin(), pullback.end());
  for (const PairRef& pr : sorted_pairs(pullback, false, 1)) {
    Point x = d_apply(pullback[pr.a]);
    Point y = d_apply(pullback[pr.b]);
    if (multimodular_pair_violates(f, x, y)) return fail(pair_witness(x, y));
  }
  throw Error("multimodularity routes disagree: lifted submodularity fails but no midpoint "
              "violation exists");
}

void require_unlifted(const LatticeFn& f, ClassLabel label) {
  if (f.lift_ones() && rule_of(label) != Rule::LConvex) {
    throw InputError(std::string("lifted input is only accepted by the L-convex labels, not ") +
                     std::string(label_name(label)));
  }
}

Verdict check_rule(const LatticeFn& f, ClassLabel label) {
  require_unlifted(f, label);
  switch (rule_of(label)) {
    case Rule::Box:
      return check_box(f);
    case Rule::Separable:
      return check_separable(f);
    case Rule::Integral: {
      std::unordered_map<Point, Rational> cache;
      return scan_symmetric(domain_points(f), 2, [&](const Point& x, const Point& y) {
        return integral_violates(f, x, y, &cache);
      });
    }
    case Rule::Midpoint:
      return scan_symmetric(domain_points(f), 1, [&](const Point& x, const Point& y) {
        return midpoint_violates(f, x, y);
      });
    case Rule::GlobalDmc:
      return scan_symmetric(domain_points(f), 2, [&](const Point& x, const Point& y) {
        return midpoint_violates(f, x, y);
      });
    case Rule::LocalDmc:
      return scan_symmetric(domain_points(f), 2, [&](const Point& x, const Point& y) {
        return local_dmc_violates(f, x, y);
      });
    case Rule::LConvex:
      return check_lconvex(f);
    case Rule::MNat:
      return check_exchange(f, true);
    case Rule::M:
      return check_exchange(f, false);
    case Rule::Multimodular:
      return check_multimodular(f);
    case Rule::TwoStep:
    case Rule::JumpM:
    case Rule::JumpMNat:
      return check_jump(f, rule_of(label));
  }
  throw InputError("unknown class label");
}

bool replay(const LatticeFn& f, ClassLabel label, const Witness& w) {
  require_unlifted(f, label);
  const Rule rule = rule_of(label);
  const std::size_t n = f.dim();
  auto dims_ok = [&](std::initializer_list<const Point*> ps) {
    for (const Point* p : ps) {
      if (p->dim() != n) return false;
    }
    return true;
  };
  switch (w.kind) {
    case WitnessKind::MissingPoint:
      if (!dims_ok({&w.x})) return false;
      return (rule == Rule::Box || rule == Rule::Separable) && box_violates(f, w.x);
    case WitnessKind::SquareModularity:
      if (!dims_ok({&w.x})) return false;
      return rule == Rule::Separable && separable_square_violates(f, w.x, w.i, w.j);
    case WitnessKind::AxisConvexity:
      if (!dims_ok({&w.x})) return false;
      return rule == Rule::Separable && separable_axis_violates(f, w.x, w.i);
    case WitnessKind::Shift:
      if (!dims_ok({&w.x})) return false;
      return rule == Rule::LConvex && !f.lift_ones() && f.in_domain(w.x) &&
             !f.in_domain(w.x.shifted(1));
    case WitnessKind::Pair: {
      if (!dims_ok({&w.x, &w.y}) || w.x == w.y) return false;
      switch (rule) {
        case Rule::Integral:
          return integral_violates(f, w.x, w.y, nullptr);
        case Rule::Midpoint:
          return midpoint_violates(f, w.x, w.y);
        case Rule::GlobalDmc:
          return (w.x - w.y).norm_inf() >= 2 && midpoint_violates(f, w.x, w.y);
        case Rule::LocalDmc:
          return local_dmc_violates(f, w.x, w.y);
        case Rule::LConvex:
          return submodular_violates(f, w.x, w.y);
        case Rule::Multimodular:
          return multimodular_pair_violates(f, w.x, w.y);
        default:
          return false;
      }
    }
    case WitnessKind::Exchange:
      if (!dims_ok({&w.x, &w.y})) return false;
      if (rule == Rule::MNat) return exchange_violates(f, w.x, w.y, w.i, true);
      if (rule == Rule::M) return exchange_violates(f, w.x, w.y, w.i, false);
      return false;
    case WitnessKind::Jump:
      if (!dims_ok({&w.x, &w.y, &w.s})) return false;
      if (rule != Rule::TwoStep && rule != Rule::JumpM && rule != Rule::JumpMNat) return false;
      return jump_violates(f, rule, w.x, w.y, w.s);
  }
  return false;
}

void require_kind(ClassLabel label, bool want_set) {
  if (is_set_label(label) != want_set) {
    throw InputError(std::string("label ") + std::string(label_name(label)) + " expects a " +
                     (is_set_label(label) ? "set" : "function"));
  }
}

}  // namespace

std::span<const ClassLabel> all_labels() { return kAllLabels; }

bool is_set_label(ClassLabel label) { return info(label).is_set; }

std::string_view label_name(ClassLabel label) { return info(label).name; }

std::optional<ClassLabel> parse_label(std::string_view name) {
  for (const LabelInfo& li : kLabels) {
    if (li.name == name) return li.label;
  }
  return std::nullopt;
}

std::string_view witness_kind_name(WitnessKind kind) {
  return kWitnessNames[static_cast<std::size_t>(kind)];
}

std::optional<WitnessKind> parse_witness_kind(std::string_view name) {
  for (std::size_t i = 0; i < kWitnessNames.size(); ++i) {
    if (kWitnessNames[i] == name) return static_cast<WitnessKind>(i);
  }
  return std::nullopt;
}

std::string Witness::to_string() const {
  std::ostringstream os;
  os << witness_kind_name(kind) << ": x=" << x;
  switch (kind) {
    case WitnessKind::Pair:
      os << " y=" << y;
      break;
    case WitnessKind::Exchange:
      os << " y=" << y << " i=" << i + 1;
      break;
    case WitnessKind::Jump:
      os << " y=" << y << " s=" << s;
      break;
    case WitnessKind::SquareModularity:
      os << " i=" << i + 1 << " j=" << j + 1;
      break;
    case WitnessKind::AxisConvexity:
      os << " i=" << i + 1;
      break;
    default:
      break;
  }
  return os.str();
}

Verdict check_set(const LatticeSet& s, ClassLabel label) {
  require_kind(label, true);
  if (s.empty()) throw InputError("class membership is defined for nonempty sets only");
  return check_rule(LatticeFn::indicator(s), label);
}

Verdict check_fn(const LatticeFn& f, ClassLabel label) {
  require_kind(label, false);
  return check_rule(f, label);
}

bool violates(const LatticeSet& s, ClassLabel label, const Witness& w) {
  require_kind(label, true);
  if (s.empty()) return false;
  return replay(LatticeFn::indicator(s), label, w);
}

bool violates(const LatticeFn& f, ClassLabel label, const Witness& w) {
  require_kind(label, false);
  return replay(f, label, w);
}

LatticeSet argmin_perturbed(const LatticeFn& f, std::span<const Rational> c) {
  if (c.size() != f.dim()) throw DimensionError("perturbation vector has the wrong length");
  if (f.lift_ones()) {
    Rational total = 0;
    for (const Rational& ci : c) total += ci;
    if (total != f.ramp()) {
      throw InputError("f[-c] is unbounded below along the all-ones direction unless sum(c) = ramp");
    }
  }
  std::vector<Point> best;
  Rational best_value = Rational::infinity();
  for (const FnEntry& e : f.entries()) {
    Rational v = e.value;
    for (std::size_t i = 0; i < f.dim(); ++i) v -= c[i] * Rational(e.x[i]);
    if (v < best_value) {
      best_value = v;
      best.clear();
    }
    if (v == best_value) best.push_back(e.x);
  }
  return LatticeSet(f.dim(), std::move(best), f.lift_ones());
}

bool multimodular_polyhedral_check(const LatticeSet& s, const Window& w) {
  if (s.lift_ones()) throw InputError("polyhedral check needs a finite set");
  if (s.empty()) throw InputError("polyhedral check needs a nonempty set");
  if (w.dim() != s.dim()) throw DimensionError("window dimension does not match the set");
  for (const Point& p : s.points()) {
    if (!w.contains(p)) throw InputError("set point " + p.to_string() + " lies outside the window");
  }
  const std::size_t n = s.dim();
  struct Bound {
    std::size_t k, l;
    Coord a, b;
  };
  std::vector<Bound> bounds;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      Bound bd{k, l, 0, 0};
      bool first = true;
      for (const Point& p : s.points()) {
        Coord sum = 0;
        for (std::size_t i = k; i <= l; ++i) sum += p[i];
        if (first || sum < bd.a) bd.a = sum;
        if (first || sum > bd.b) bd.b = sum;
        first = false;
      }
      bounds.push_back(bd);
    }
  }
  std::size_t count = 0;
  bool ok = true;
  w.for_each([&](const Point& p) {
    if (!ok) return;
    for (const Bound& bd : bounds) {
      Coord sum = 0;
      for (std::size_t i = bd.k; i <= bd.l; ++i) sum += p[i];
      if (sum < bd.a || sum > bd.b) return;
    }
    if (!s.contains(p)) ok = false;
    ++count;
  });
  return ok && count == s.size();
}

LatticeFn m_lift(const LatticeFn& f) {
  if (f.lift_ones()) throw InputError("m_lift needs a finite function");
  std::vector<FnEntry> entries;
  for (const FnEntry& e : f.entries()) entries.push_back({Point{-e.x.sum()}.concat(e.x), e.value});
  return LatticeFn(f.dim() + 1, std::move(entries));
}

LatticeSet m_lift(const LatticeSet& s) {
  if (s.lift_ones()) throw InputError("m_lift needs a finite set");
  std::vector<Point> pts;
  for (const Point& p : s.points()) pts.push_back(Point{-p.sum()}.concat(p));
  return LatticeSet(s.dim() + 1, std::move(pts));
}

namespace {
Coord parity(const Point& p) { return ((p.sum() % 2) + 2) % 2; }
}  // namespace

LatticeFn parity_lift(const LatticeFn& f) {
  if (f.lift_ones()) throw InputError("parity_lift needs a finite function");
  std::vector<FnEntry> entries;
  for (const FnEntry& e : f.entries()) entries.push_back({Point{parity(e.x)}.concat(e.x), e.value});
  return LatticeFn(f.dim() + 1, std::move(entries));
}

LatticeSet parity_lift(const LatticeSet& s) {
  if (s.lift_ones()) throw InputError("parity_lift needs a finite set");
  std::vector<Point> pts;
  for (const Point& p : s.points()) pts.push_back(Point{parity(p)}.concat(p));
  return LatticeSet(s.dim() + 1, std::move(pts));
}

std::vector<Point> increments(const Point& x, const Point& y) {
  require_same_dim(x, y);
  std::vector<Point> out;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (x[k] == y[k]) continue;
    Point s(x.dim());
    s[k] = y[k] > x[k] ? 1 : -1;
    out.push_back(s);
  }
  return out;
}

}  // namespace dconv
