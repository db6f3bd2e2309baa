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


#include <algorithm>
#include <exception>
#include <string>
#include <utility>

#include "dconv/error.hpp"
#include "dconv/hull.hpp"
#include "dconv/lab.hpp"
#include "dconv/ops.hpp"

namespace dconv {

namespace {

constexpr std::string_view kOperationNames[] = {"direct-sum", "split", "aggregate", "network"};

class Replay {
 public:
  explicit Replay(std::string id) { report_.id = std::move(id); }

  void check(bool ok, std::string what) { report_.checks.push_back({std::move(what), ok}); }

  template <typename T>
  void member(const T& obj, ClassLabel label, const std::string& name) {
    check(verdict(obj, label).member, name + " is " + std::string(label_name(label)));
  }

  // Non-membership with a witness that replays as a genuine violation.
  template <typename T>
  std::optional<Witness> non_member(const T& obj, ClassLabel label, const std::string& name) {
    Verdict v = verdict(obj, label);
    bool ok = !v.member && v.witness && violates(obj, label, *v.witness);
    std::string what = name + " is not " + std::string(label_name(label));
    if (v.witness) what += ", witness " + v.witness->to_string();
    check(ok, what);
    return v.witness;
  }

  template <typename T>
  void tuple_violates(const T& obj, ClassLabel label, const Witness& w, const std::string& name) {
    check(violates(obj, label, w), name + " violates " + std::string(label_name(label)) + " at " + w.to_string());
  }

  RecordReport finish() {
    report_.passed = !report_.checks.empty() &&
                     std::all_of(report_.checks.begin(), report_.checks.end(), [](const RecordCheck& c) { return c.ok; });
    return std::move(report_);
  }

 private:
  static Verdict verdict(const LatticeSet& s, ClassLabel label) { return check_set(s, label); }
  static Verdict verdict(const LatticeFn& f, ClassLabel label) { return check_fn(f, label); }

  RecordReport report_;
};

LatticeFn ind(const LatticeSet& s) { return LatticeFn::indicator(s); }

// Membership of the input and non-membership of the output for each label;
// function labels are checked on the indicator functions.
void input_output(Replay& r, const std::vector<LatticeSet>& inputs, const LatticeSet& out,
                  const std::vector<ClassLabel>& labels) {
  for (ClassLabel label : labels) {
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      std::string name = inputs.size() == 1 ? "S" : "S" + std::to_string(k + 1);
      if (is_set_label(label)) {
        r.member(inputs[k], label, name);
      } else {
        r.member(ind(inputs[k]), label, "indicator of " + name);
      }
    }
    if (is_set_label(label)) {
      r.non_member(out, label, "T");
    } else {
      r.non_member(ind(out), label, "indicator of T");
    }
  }
}

std::string show(const LatticeSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + s.points()[k].to_string();
  return out + "}";
}

void equal_sets(Replay& r, const LatticeSet& got, const LatticeSet& want, const std::string& what) {
  r.check(got == want, what + " = " + show(want) + (got == want ? "" : ", got " + show(got)));
}

Witness pair(Point x, Point y) {
  Witness w;
  w.kind = WitnessKind::Pair;
  w.x = std::move(x);
  w.y = std::move(y);
  return w;
}

// ---------------------------------------------------------------------------
// Records.

LatticeFn alpha_beta_fn(const Rational& alpha, const Rational& beta) {
  std::vector<FnEntry> entries;
  for (Coord a = 0; a <= 4; ++a) {
    for (Coord b = 0; b <= 4; ++b) {
      if ((a + b) % 2 != 0) continue;
      Rational v = 0;
      if (a % 2 == 1) v = a == 1 ? alpha : beta;
      entries.push_back({Point{a, b}, v});
    }
  }
  return LatticeFn(2, std::move(entries));
}

CounterexampleRecord ex2_2() {
  LatticeFn f = alpha_beta_fn(1, 2);
  Witness w;
  w.kind = WitnessKind::Jump;
  w.x = Point{4, 4};
  w.y = Point{1, 1};
  w.s = Point{-1, 0};
  CounterexampleRecord rec{"EX2.2",
                           "jump M-convex iff alpha = beta; argmin sets stay constant-parity for alpha < beta",
                           "argmin",
                           {f},
                           {ClassLabel::JumpMFn},
                           w,
                           {}};
  rec.replay = [f, w] {
    Replay r("EX2.2");
    r.member(f.dom(), ClassLabel::ConstParityJump, "dom f");
    r.non_member(f, ClassLabel::JumpMFn, "f (alpha = 1, beta = 2)");
    r.tuple_violates(f, ClassLabel::JumpMFn, w, "f");
    Witness other;
    other.kind = WitnessKind::Jump;
    other.x = Point{0, 0};
    other.y = Point{3, 3};
    other.s = Point{1, 0};
    r.check(!violates(f, ClassLabel::JumpMFn, other) && violates(alpha_beta_fn(2, 1), ClassLabel::JumpMFn, other),
            "tuple " + other.to_string() + " is a violation only for alpha > beta");
    const Rational grid[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    bool iff = true;
    for (const Rational& a : grid) {
      for (const Rational& b : grid) {
        if (check_fn(alpha_beta_fn(a, b), ClassLabel::JumpMFn).member != (a == b)) iff = false;
      }
    }
    r.check(iff, "jump-m-fn accepts exactly alpha = beta on {0, 1/2, 1, 2}^2");
    std::vector<Point> even;
    for (Coord a = 0; a <= 4; a += 2) {
      for (Coord b = 0; b <= 4; b += 2) even.push_back(Point{a, b});
    }
    const Rational zero[] = {Rational(0), Rational(0)};
    equal_sets(r, argmin_perturbed(f, zero), LatticeSet(2, even), "argmin for c = (0, 0)");
    const Rational c10[] = {Rational(1), Rational(0)};
    equal_sets(r, argmin_perturbed(f, c10), LatticeSet(2, {Point{4, 0}, Point{4, 2}, Point{4, 4}}),
               "argmin for c = (1, 0)");
    const Rational cs[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                           Rational(1, 2), Rational(1), Rational(2)};
    bool all_cp = true;
    for (const Rational& c1 : cs) {
      for (const Rational& c2 : cs) {
        const Rational c[] = {c1, c2};
        if (!check_set(argmin_perturbed(f, c), ClassLabel::ConstParityJump).member) all_cp = false;
      }
    }
    r.check(all_cp, "argmin is a cp-jump for every c in {-2, -1, -1/2, 0, 1/2, 1, 2}^2");
    return r.finish();
  };
  return rec;
}

CounterexampleRecord ex3_1() {
  LatticeSet s(1, {Point{0}});
  SplitSpec spec{{2}};
  Window w = Window::cube(2, -2, 2);
  std::vector<ClassLabel> labels = {ClassLabel::IntegerBox,  ClassLabel::LNatSet,     ClassLabel::GlobalDMCSet,
                                    ClassLabel::SeparableConvex, ClassLabel::LNatFn, ClassLabel::GlobalDMCFn,
                                    ClassLabel::LocalDMCFn};
  Witness pw = pair(Point{-2, 2}, Point{-1, 1});
  CounterexampleRecord rec{"EX3.1", "splitting the point {0} gives the antidiagonal {(t, -t)}", "split", {s}, labels,
                           pw, {}};
  rec.replay = [s, spec, w, labels, pw] {
    Replay r("EX3.1");
    LatticeSet t = split_set(s, spec, w);
    std::vector<Point> anti;
    for (Coord k = -2; k <= 2; ++k) anti.push_back(Point{k, -k});
    equal_sets(r, t, LatticeSet(2, anti), "T in [-2,2]^2");
    input_output(r, {s}, t, labels);
    r.tuple_violates(t, ClassLabel::LNatSet, pw, "T");
    Network net = split_network(spec, w);
    equal_sets(r, transform_set(s, net), t, "bipartite network image");
    r.check(induce_fn(ind(s), net) == ind(t), "bipartite network induces the indicator of T");
    return r.finish();
  };
  return rec;
}

CounterexampleRecord ex3_1d() {
  LatticeSet s1(2, {Point{1, 0}, Point{0, 1}});
  // Z cut to [0, 2]; the class is closed under box intersection, so a
  // violation inside the box is a violation of the infinite sum.
  LatticeSet s2(1, {Point{0}, Point{1}, Point{2}});
  std::vector<ClassLabel> labels = {ClassLabel::GlobalDMCSet, ClassLabel::GlobalDMCFn, ClassLabel::LocalDMCFn};
  Witness w = pair(Point{1, 0, 2}, Point{0, 1, 0});
  CounterexampleRecord rec{"EX3.1D", "direct sum of two d.m.c. sets that is not d.m.c.", "direct-sum", {s1, s2},
                           labels, w, {}};
  rec.replay = [s1, s2, labels, w] {
    Replay r("EX3.1D");
    LatticeSet t = direct_sum_set(s1, s2);
    input_output(r, {s1, s2}, t, labels);
    r.tuple_violates(t, ClassLabel::GlobalDMCSet, w, "T");
    auto [up, down] = midpoint_round(w.x, w.y);
    r.check(up == Point{1, 1, 1} && down == Point{0, 0, 1} && !t.contains(up) && !t.contains(down),
            "rounded midpoints (1,1,1) and (0,0,1) lie outside T");
    return r.finish();
  };
  return rec;
}

CounterexampleRecord ex3_2() {
  LatticeSet s(2, {Point{0, 0}}, true);
  SplitSpec spec{{1, 2}};
  Window w = Window::cube(3, -2, 2);
  Witness shift;
  shift.kind = WitnessKind::Shift;
  shift.x = Point{0, 0, 0};
  CounterexampleRecord rec{"EX3.2", "splitting the diagonal {x1 = x2} gives {y1 = y2 + y3}, not invariant under +1",
                           "split", {s}, {ClassLabel::LSet, ClassLabel::LFn}, shift, {}};
  rec.replay = [s, spec, w, shift] {
    Replay r("EX3.2");
    r.member(s, ClassLabel::LSet, "S");
    r.member(ind(s), ClassLabel::LFn, "indicator of S");
    LatticeSet t = split_set(s, spec, w);
    std::vector<Point> plane;
    w.for_each([&](const Point& y) {
      if (y[0] == y[1] + y[2]) plane.push_back(y);
    });
    equal_sets(r, t, LatticeSet(3, plane), "T in [-2,2]^3");
    // Both y and y + 1 lie in the window, so membership there is exact.
    r.check(t.contains(shift.x) && !t.contains(shift.x + Point::ones(3)), "(0,0,0) in T but (1,1,1) not in T");
    r.tuple_violates(t, ClassLabel::LSet, shift, "T");
    r.tuple_violates(ind(t), ClassLabel::LFn, shift, "indicator of T");
    LatticeSet finite = restrict_to_window(s, Window(Point{-2, -4}, Point{2, 4}));
    equal_sets(r, transform_set(finite, split_network(spec, w)), t, "bipartite network image of S in the window");
    return r.finish();
  };
  return rec;
}

const std::vector<Point> kIcInput = {Point{0, 0, 1, 0}, Point{0, 0, 0, 1}, Point{1, 1, 1, 0}, Point{1, 1, 0, 1}};

CounterexampleRecord ex3_3() {
  LatticeSet s(4, kIcInput);
  PartitionSpec spec{{{0, 2}, {1, 3}}};
  std::vector<ClassLabel> labels = {ClassLabel::IntegrallyConvexSet, ClassLabel::GlobalDMCSet,
                                    ClassLabel::IntegrallyConvexFn,  ClassLabel::GlobalDMCFn,
                                    ClassLabel::LocalDMCFn};
  Witness w = pair(Point{0, 1}, Point{2, 1});
  CounterexampleRecord rec{"EX3.3", "aggregating an integrally convex set by {1,3},{2,4}", "aggregate", {s}, labels,
                           w, {}};
  rec.replay = [s, spec, labels, w] {
    Replay r("EX3.3");
    LatticeSet t = aggregate_set(s, spec);
    equal_sets(r, t, LatticeSet(2, {Point{1, 0}, Point{0, 1}, Point{2, 1}, Point{1, 2}}), "T");
    input_output(r, {s}, t, labels);
    r.tuple_violates(t, ClassLabel::IntegrallyConvexSet, w, "T");
    r.check(!in_local_hull(t, HalfPoint::midpoint(Point{1, 0}, Point{1, 2})),
            "(1,1) is in the hull of T but not in the hull of T near (1,1)");
    LatticeSet s1(2, {Point{0, 0}, Point{1, 1}});
    LatticeSet s2(2, {Point{1, 0}, Point{0, 1}});
    equal_sets(r, minkowski_sum_set(s1, s2), t, "Minkowski sum {(0,0),(1,1)} + {(1,0),(0,1)}");
    Network net = aggregation_network(spec, Window::bounding(s.points()));
    equal_sets(r, transform_set(s, net), t, "bipartite network image");
    return r.finish();
  };
  return rec;
}

const std::vector<Point> kLnatInput = {Point{0, 0, 0, 0, 0, 0}, Point{0, 0, 0, 0, 1, 1}, Point{1, 1, 0, 0, 0, 0},
                                       Point{1, 1, 0, 0, 1, 1}};
const std::vector<Point> kLnatOutput = {Point{0, 0, 0}, Point{0, 1, 1}, Point{1, 1, 0}, Point{1, 2, 1}};

PartitionSpec pairs_of_six() { return PartitionSpec{{{0, 3}, {1, 4}, {2, 5}}}; }

CounterexampleRecord ex3_4() {
  LatticeSet s(6, kLnatInput);
  std::vector<ClassLabel> labels = {ClassLabel::LNatSet, ClassLabel::LNatFn};
  Witness w = pair(Point{0, 1, 1}, Point{1, 1, 0});
  CounterexampleRecord rec{"EX3.4", "aggregating an L-natural set in six variables by pairs", "aggregate", {s},
                           labels, w, {}};
  rec.replay = [s, labels, w] {
    Replay r("EX3.4");
    LatticeSet t = aggregate_set(s, pairs_of_six());
    equal_sets(r, t, LatticeSet(3, kLnatOutput), "T");
    input_output(r, {s}, t, labels);
    Verdict v = check_set(t, ClassLabel::LNatSet);
    r.check(v.witness && *v.witness == w, "first witness is x = (0,1,1), y = (1,1,0)");
    auto [up, down] = midpoint_round(w.x, w.y);
    r.check(up == Point{1, 1, 1} && down == Point{0, 1, 0} && !t.contains(up) && !t.contains(down),
            "rounded midpoints (1,1,1) and (0,1,0) lie outside T");
    Network net = aggregation_network(pairs_of_six(), Window::bounding(s.points()));
    equal_sets(r, transform_set(s, net), t, "bipartite network image");
    return r.finish();
  };
  return rec;
}

CounterexampleRecord ex3_5() {
  LatticeSet s1(4, {Point{0, 0, 0, 0}, Point{1, 1, 0, 0}}, true);
  LatticeSet s2(4, {Point{0, 0, 0, 0}, Point{0, 1, 1, 0}}, true);
  Witness w = pair(Point{0, 1, 1, 0}, Point{1, 1, 0, 0});
  CounterexampleRecord rec{"EX3.5", "aggregating the direct sum of two L-convex sets (their Minkowski sum)",
                           "aggregate", {s1, s2}, {ClassLabel::LSet, ClassLabel::LFn}, w, {}};
  rec.replay = [s1, s2, w] {
    Replay r("EX3.5");
    r.member(s1, ClassLabel::LSet, "S1");
    r.member(s2, ClassLabel::LSet, "S2");
    r.member(ind(s1), ClassLabel::LFn, "indicator of S1");
    r.member(ind(s2), ClassLabel::LFn, "indicator of S2");
    // The direct sum is invariant along two directions, so it is checked in a
    // window: L-convex sets cut by a box are L-natural.
    Window w4 = Window::cube(4, 0, 2);
    LatticeSet cut = direct_sum_set(restrict_to_window(s1, w4), restrict_to_window(s2, w4));
    r.member(cut, ClassLabel::LNatSet, "S1 + S2 cut to [0,2]^8");
    LatticeSet t = minkowski_sum_set(s1, s2);
    equal_sets(r, t,
               LatticeSet(4, {Point{0, 0, 0, 0}, Point{0, 1, 1, 0}, Point{1, 1, 0, 0}, Point{1, 2, 1, 0}}, true),
               "representatives of T");
    r.check(t.lift_ones(), "T is invariant along (1,1,1,1)");
    r.non_member(t, ClassLabel::LSet, "T");
    r.non_member(ind(t), ClassLabel::LFn, "indicator of T");
    r.tuple_violates(t, ClassLabel::LSet, w, "T");
    r.check(!t.contains(Point{1, 1, 1, 0}) && !t.contains(Point{0, 1, 0, 0}),
            "(1,1,1,0) and (0,1,0,0) are not in T");
    LatticeSet agg = aggregate_set(cut, PartitionSpec::pairing(4));
    bool inside = std::all_of(agg.points().begin(), agg.points().end(), [&](const Point& p) { return t.contains(p); });
    bool covers = std::all_of(t.points().begin(), t.points().end(), [&](const Point& p) { return agg.contains(p); });
    r.check(inside && covers, "aggregating the windowed direct sum by {j, j+4} lands in T and hits every representative");
    equal_sets(r, transform_set(cut, aggregation_network(PartitionSpec::pairing(4), Window::cube(8, 0, 2))), agg,
               "bipartite network image of the windowed direct sum");
    return r.finish();
  };
  return rec;
}

CounterexampleRecord ex3_6() {
  LatticeSet s = d_inverse_transform(LatticeSet(6, kLnatInput));
  Witness w = pair(Point{0, 1, 0}, Point{1, 0, -1});
  CounterexampleRecord rec{"EX3.6", "aggregating the multimodular image Dp of the six-variable L-natural set",
                           "aggregate", {s}, {ClassLabel::MultimodularSet, ClassLabel::MultimodularFn}, w, {}};
  rec.replay = [s, w] {
    Replay r("EX3.6");
    equal_sets(r, s,
               LatticeSet(6, {Point{0, 0, 0, 0, 0, 0}, Point{0, 0, 0, 0, 1, 0}, Point{1, 0, -1, 0, 0, 0},
                              Point{1, 0, -1, 0, 1, 0}}),
               "S~");
    r.check(multimodular_polyhedral_check(s, Window::bounding(s.points())), "S~ is cut out by its interval bounds");
    LatticeSet t = aggregate_set(s, pairs_of_six());
    equal_sets(r, t, LatticeSet(3, {Point{0, 0, 0}, Point{0, 1, 0}, Point{1, 0, -1}, Point{1, 1, -1}}), "T~");
    input_output(r, {s}, t, {ClassLabel::MultimodularSet, ClassLabel::MultimodularFn});
    Verdict v = check_set(t, ClassLabel::MultimodularSet);
    r.check(v.witness && *v.witness == w, "first witness is the image of (0,1,1), (1,1,0) under D");
    equal_sets(r, d_transform(t), LatticeSet(3, kLnatOutput), "D^-1 T~");
    r.non_member(d_transform(t), ClassLabel::LNatSet, "D^-1 T~");
    r.check(!multimodular_polyhedral_check(t, Window::bounding(t.points())),
            "T~ is not cut out by its interval bounds");
    Network net = aggregation_network(pairs_of_six(), Window::bounding(s.points()));
    equal_sets(r, transform_set(s, net), t, "bipartite network image");
    return r.finish();
  };
  return rec;
}

LatticeFn quadratic_pair(const Window& w) {
  std::vector<FnEntry> entries;
  w.for_each([&](const Point& p) { entries.push_back({p, Rational(p[0] * p[0] + p[0] * p[1] + p[1] * p[1])}); });
  return LatticeFn(2, std::move(entries));
}

CounterexampleRecord ex4_1() {
  // Cut to a box; both classes are closed under box intersection.
  LatticeFn f1 = quadratic_pair(Window::cube(2, -1, 2));
  LatticeFn f2 = LatticeFn::indicator(LatticeSet(1, Window::cube(1, -1, 2).points()));
  Witness w = pair(Point{1, 0, 0}, Point{0, 1, 2});
  CounterexampleRecord rec{"EX4.1", "direct sum of x1^2 + x1 x2 + x2^2 and the zero function", "direct-sum",
                           {f1, f2}, {ClassLabel::GlobalDMCFn, ClassLabel::LocalDMCFn}, w, {}};
  rec.replay = [f1, f2, w] {
    Replay r("EX4.1");
    LatticeFn g = direct_sum_fn(f1, f2);
    for (ClassLabel label : {ClassLabel::GlobalDMCFn, ClassLabel::LocalDMCFn}) {
      r.member(f1, label, "f1");
      r.member(f2, label, "f2");
      r.non_member(g, label, "g");
      r.tuple_violates(g, label, w, "g");
    }
    auto [up, down] = midpoint_round(w.x, w.y);
    Rational lhs = g(w.x) + g(w.y);
    Rational rhs = g(up) + g(down);
    r.check(up == Point{1, 1, 1} && down == Point{0, 0, 1} && lhs == 2 && rhs == 3,
            "g(x) + g(y) = " + lhs.to_string() + " < g(u) + g(v) = " + rhs.to_string());
    r.check((w.x - w.y).norm_inf() == 2, "|x - y|_inf = 2");
    return r.finish();
  };
  return rec;
}

// Rooted tree realizing the laminar family {123, 12, 1, 2, 3}.
Network laminar_tree() {
  std::vector<Rational> abs_t;
  for (Coord t = -6; t <= 6; ++t) abs_t.emplace_back(t < 0 ? -t : t);
  auto square = [](Coord lo, Coord hi) {
    std::vector<Rational> v;
    for (Coord t = lo; t <= hi; ++t) v.emplace_back(t * t);
    return ArcCost::table(v);
  };
  std::vector<Arc> arcs = {
      {"u", "v123", -6, 6, ArcCost::table(abs_t)}, {"v123", "v12", -4, 4, square(-4, 4)},
      {"v123", "v3", -2, 2, square(-2, 2)},        {"v12", "v1", -2, 2, ArcCost::zero()},
      {"v12", "v2", -2, 2, ArcCost::zero()},
  };
  return Network({"u", "v123", "v12", "v1", "v2", "v3"}, arcs, {"u"}, {"v1", "v2", "v3"});
}

Rational laminar_g(const Point& y) {
  Coord a = y[0] + y[1] + y[2];
  Coord b = y[0] + y[1];
  return Rational((a < 0 ? -a : a) + b * b + y[2] * y[2]);
}

CounterexampleRecord ex4_2() {
  LatticeFn f = LatticeFn::indicator(LatticeSet(1, Window::cube(1, -6, 6).points()));
  CounterexampleRecord rec{"EX4.2", "laminar convex function induced through a rooted tree", "network", {f}, {},
                           std::nullopt, {}};
  rec.replay = [f] {
    Replay r("EX4.2");
    LatticeFn g = induce_fn(f, laminar_tree());
    Window box = Window::cube(3, -2, 2);
    bool same = true;
    bool reflected = true;
    box.for_each([&](const Point& y) {
      if (g(y) != laminar_g(y)) same = false;
      if (g(-y) != laminar_g(y)) reflected = false;
    });
    r.check(g.size() == box.volume(), "dom g = [-2,2]^3 (" + std::to_string(g.size()) + " points)");
    r.check(same, "g(y) = |y1 + y2 + y3| + (y1 + y2)^2 + y3^2 on [-2,2]^3");
    r.check(reflected, "g(-y) agrees as well, so both exit-sign conventions match");
    r.member(g, ClassLabel::MNatFn, "g");
    GeneratorConfig config;
    config.label = ClassLabel::MNatFn;
    config.dim = 3;
    config.window = box;
    auto piece = [](Coord lo, Coord hi, auto phi) {
      Univariate u{lo, hi, {}};
      for (Coord t = lo; t <= hi; ++t) u.values.push_back(phi(t));
      return u;
    };
    auto abs_fn = [](Coord t) { return Rational(t < 0 ? -t : t); };
    auto sq = [](Coord t) { return Rational(t * t); };
    auto zero = [](Coord) { return Rational(0); };
    config.laminar = {{{0, 1, 2}, piece(-6, 6, abs_fn)},
                      {{0, 1}, piece(-4, 4, sq)},
                      {{0}, piece(-2, 2, zero)},
                      {{1}, piece(-2, 2, zero)},
                      {{2}, piece(-2, 2, sq)}};
    r.check(generate_fn(config) == g, "laminar generator with the same family gives the same g");
    return r.finish();
  };
  return rec;
}

std::vector<CounterexampleRecord> build_registry() {
  return {ex2_2(), ex3_1(), ex3_1d(), ex3_2(), ex3_3(), ex3_4(), ex3_5(), ex3_6(), ex4_1(), ex4_2()};
}

}  // namespace

std::string_view operation_name(Operation op) { return kOperationNames[static_cast<std::size_t>(op)]; }

std::optional<Operation> parse_operation(std::string_view name) {
  for (std::size_t k = 0; k < std::size(kOperationNames); ++k) {
    if (kOperationNames[k] == name) return static_cast<Operation>(k);
  }
  return std::nullopt;
}

const std::vector<CounterexampleRecord>& counterexample_registry() {
  static const std::vector<CounterexampleRecord> registry = build_registry();
  return registry;
}

const CounterexampleRecord* find_record(std::string_view id) {
  for (const CounterexampleRecord& rec : counterexample_registry()) {
    if (rec.id == id) return &rec;
  }
  return nullptr;
}

RecordReport replay_record(const CounterexampleRecord& rec) {
  try {
    return rec.replay();
  } catch (const std::exception& e) {
    RecordReport report;
    report.id = rec.id;
    report.checks.push_back({std::string("replay raised: ") + e.what(), false});
    return report;
  }
}

std::vector<RecordReport> run_counterexamples() {
  std::vector<RecordReport> out;
  for (const CounterexampleRecord& rec : counterexample_registry()) out.push_back(replay_record(rec));
  return out;
}

}  // namespace dconv
