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


// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dconv/classes.hpp"
#include "dconv/hull.hpp"
#include "dconv/io.hpp"
#include "dconv/lab.hpp"
#include "dconv/network.hpp"
#include "dconv/ops.hpp"
#include "dconv/rng.hpp"
#include "oracles.hpp"

namespace dconv {
namespace {

using L = ClassLabel;

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit_s = 0;  // 0: no runtime bound
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  [[nodiscard]] bool ok() const { return failures_ == 0; }
  [[nodiscard]] std::string summary(const std::string& what) const {
    std::ostringstream os;
    os << what << " (" << checks_ - failures_ << "/" << checks_ << " checks)";
    if (!notes_.empty()) os << " first failures: " << notes_;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

// ---------------------------------------------------------------------------

Outcome registry_criterion() {
  Tally t;
  std::vector<RecordReport> reports = run_counterexamples();
  t.expect(reports.size() == 10, "expected 10 records, got " + std::to_string(reports.size()));
  for (const RecordReport& r : reports) {
    t.expect(r.passed, r.id + " failed");
    for (const RecordCheck& c : r.checks) {
      if (!c.ok) t.expect(false, r.id + ": " + c.what);
    }
  }
  // Two values quoted verbatim: the aggregation witness and the strict
  // inequality of the d.m.c. direct sum.
  LatticeSet tt(3, {Point{0, 0, 0}, Point{0, 1, 1}, Point{1, 1, 0}, Point{1, 2, 1}});
  Verdict v = check_set(tt, L::LNatSet);
  t.expect(!v.member && v.witness && v.witness->x == Point{0, 1, 1} && v.witness->y == Point{1, 1, 0},
           "witness (0,1,1)/(1,1,0)");
  // g = f1 + f2 with f1 = x1^2 + x1 x2 + x2^2 on [-1,2]^2 and f2 = 0 on [-1,2].
  std::vector<FnEntry> e1;
  Window::cube(2, -1, 2).for_each([&](const Point& x) { e1.push_back({x, x[0] * x[0] + x[0] * x[1] + x[1] * x[1]}); });
  LatticeFn g = direct_sum_fn(LatticeFn(2, e1), LatticeFn::indicator(LatticeSet(1, Window::cube(1, -1, 2).points())));
  Point x{1, 0, 0};
  Point y{0, 1, 2};
  auto [up, down] = midpoint_round(x, y);
  t.expect(g(x) + g(y) == Rational(2) && g(up) + g(down) == Rational(3), "d.m.c. pair gives 2 < 3");
  t.expect(!check_fn(g, L::GlobalDMCFn).member, "direct sum accepted as d.m.c.");
  return {t.ok(), t.summary("counterexample registry, " + std::to_string(reports.size()) + " records"), 1.0};
}

// Tables as printed in the paper: direct sum, splitting, aggregation,
// network induction.
const std::vector<std::pair<L, std::string>> kPaperTables = {
    {L::IntegerBox, "YNYN"},      {L::IntegrallyConvexSet, "YYNN"}, {L::LNatSet, "YNNN"},
    {L::LSet, "YNNN"},            {L::MNatSet, "YYYY"},             {L::MSet, "YYYY"},
    {L::MultimodularSet, "YYNN"}, {L::GlobalDMCSet, "NNNN"},        {L::SimultExchJump, "YYYY"},
    {L::ConstParityJump, "YYYY"}, {L::SeparableConvex, "YNYN"},     {L::IntegrallyConvexFn, "YYNN"},
    {L::LNatFn, "YNNN"},          {L::LFn, "YNNN"},                 {L::MNatFn, "YYYY"},
    {L::MFn, "YYYY"},             {L::MultimodularFn, "YYNN"},      {L::GlobalDMCFn, "NNNN"},
    {L::LocalDMCFn, "NNNN"},      {L::JumpMNatFn, "YYYY"},          {L::JumpMFn, "YYYY"},
};

Outcome closure_criterion() {
  Tally t;
  ClosureReport report = closure_matrix(100, 20261016, 4);
  t.expect(report.cells.size() == 4 * kPaperTables.size(), "grid size");
  for (std::size_t r = 0; r < kPaperTables.size() && 4 * r + 3 < report.cells.size(); ++r) {
    for (std::size_t k = 0; k < 4; ++k) {
      const ClosureCell& c = report.cells[4 * r + k];
      std::string where = std::string(label_name(c.label)) + "/" + std::string(operation_name(c.op));
      t.expect(c.label == kPaperTables[r].first, "row order at " + where);
      bool paper = kPaperTables[r].second[k] == 'Y';
      t.expect(c.observed == paper, where + " observed " + (c.observed ? "Y" : "N"));
      if (paper) t.expect(c.trials == 100 && c.passed == 100, where + " passed " + std::to_string(c.passed));
    }
  }
  t.expect(report.ok(), "report.ok()");
  return {t.ok(), t.summary("closure matrix, 100 trials per Y cell, max_dim 4"), 600.0};
}

// Random function: a generated multimodular one, a perturbed one, or noise.
LatticeFn theorem22_instance(Rng& rng, std::size_t n, int k) {
  GeneratorConfig c;
  c.label = L::MultimodularFn;
  c.dim = n;
  c.window = Window::cube(n, -2, 2);
  c.seed = rng.next();
  c.max_points = 80;
  switch (k % 3) {
    case 0:
      return generate_fn(c);
    case 1: {
      LatticeFn f = generate_fn(c);
      std::vector<FnEntry> e = f.entries();
      e[rng.index(e.size())].value += Rational(rng.uniform(-3, 3), 2);
      return LatticeFn(n, e);
    }
    default:
      return testing::random_function(rng, Window::cube(n, -1, 1), 1, 2, -4, 4);
  }
}

Outcome theorem22_criterion() {
  Tally t;
  Rng rng(22);
  std::size_t members = 0;
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int k = 0; k < 200; ++k) {
      LatticeFn f = theorem22_instance(rng, n, k);
      Verdict mm = check_fn(f, L::MultimodularFn);
      Verdict ln = check_fn(d_transform(f), L::LNatFn);
      std::string where = "n=" + std::to_string(n) + " #" + std::to_string(k);
      t.expect(mm.member == ln.member, where + " verdicts differ");
      members += mm.member;
      if (!mm.member && !ln.member && mm.witness && ln.witness) {
        t.expect(d_inverse_apply(mm.witness->x) == ln.witness->x && d_inverse_apply(mm.witness->y) == ln.witness->y,
                 where + " witness does not map through D");
        t.expect(violates(f, L::MultimodularFn, *mm.witness), where + " witness does not replay");
      }
    }
  }
  t.expect(members > 100 && members < 500, "both verdicts occur (" + std::to_string(members) + " members)");
  return {t.ok(), t.summary("multimodular vs D-pullback L-natural on 600 functions, " + std::to_string(members) +
                                " members"),
          0};
}

Outcome theorem23_criterion() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig c;
    c.label = L::MultimodularSet;
    c.dim = 2 + seed % 3;
    c.window = Window::cube(c.dim, -2, 2);
    c.seed = derive_seed(23, seed);
    LatticeSet s = generate_set(c);
    t.expect(multimodular_polyhedral_check(s, Window::bounding(s.points())), "seed " + std::to_string(seed));
  }
  const CounterexampleRecord* rec = find_record("EX3.6");
  t.expect(rec != nullptr, "EX3.6 present");
  if (rec) {
    LatticeSet tt = aggregate_set(std::get<LatticeSet>(rec->inputs.at(0)), PartitionSpec{{{0, 3}, {1, 4}, {2, 5}}});
    t.expect(!multimodular_polyhedral_check(tt, Window::bounding(tt.points())), "T~ accepted");
    t.expect(!check_set(tt, L::MultimodularSet).member, "T~ recognized as multimodular");
  }
  return {t.ok(), t.summary("polyhedral description on 100 multimodular sets and T~"), 0};
}

std::vector<std::vector<Rational>> perturbations(Rng& rng, std::size_t n) {
  const Rational grid[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                           Rational(1, 2), Rational(1), Rational(2)};
  std::vector<std::vector<Rational>> cs;
  if (n <= 3) {
    std::vector<std::vector<Rational>> acc = {{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::vector<Rational>> next;
      for (const auto& prefix : acc) {
        for (const Rational& g : grid) {
          next.push_back(prefix);
          next.back().push_back(g);
        }
      }
      acc = std::move(next);
    }
    cs = std::move(acc);
  }
  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(rng.rational(-3, 3, 1 + static_cast<Coord>(rng.index(4))));
    cs.push_back(std::move(c));
  }
  return cs;
}

Outcome argmin_criterion() {
  Tally t;
  Rng rng(24);
  struct Case {
    L fn;
    L set;
    bool binary;
  };
  const Case cases[] = {
      {L::SeparableConvex, L::IntegerBox, false},     {L::IntegrallyConvexFn, L::IntegrallyConvexSet, false},
      {L::LNatFn, L::LNatSet, false},                 {L::LFn, L::LSet, false},
      {L::MNatFn, L::MNatSet, false},                 {L::MFn, L::MSet, false},
      {L::MultimodularFn, L::MultimodularSet, false}, {L::JumpMFn, L::ConstParityJump, true},
  };
  std::size_t tests = 0;
  for (const Case& cs : cases) {
    for (std::uint64_t k = 0; k < 50; ++k) {
      GeneratorConfig c;
      c.label = cs.fn;
      c.dim = cs.binary ? 2 + k % 3 : 2 + k % 2;
      c.window = cs.binary ? Window::cube(c.dim, 0, 1) : Window::cube(c.dim, -2, 2);
      c.seed = derive_seed(24, static_cast<std::uint64_t>(cs.fn), k);
      c.binary = cs.binary;
      c.max_points = 60;
      LatticeFn f = generate_fn(c);
      for (std::vector<Rational> cv : perturbations(rng, c.dim)) {
        if (f.lift_ones()) {
          // f[-c] is bounded only when c sums to the ramp.
          Rational rest = f.ramp();
          for (std::size_t i = 0; i + 1 < cv.size(); ++i) rest -= cv[i];
          cv.back() = rest;
        }
        LatticeSet s = argmin_perturbed(f, cv);
        ++tests;
        t.expect(check_set(s, cs.set).member, std::string(label_name(cs.fn)) + " seed " + std::to_string(k));
      }
    }
  }
  // The jump M-convex example with alpha = 1 < beta = 2.
  std::vector<FnEntry> entries;
  Window::cube(2, 0, 4).for_each([&](const Point& x) {
    if ((x[0] + x[1]) % 2 != 0) return;
    Rational v = x[0] == 1 ? Rational(1) : x[0] == 3 ? Rational(2) : Rational(0);
    entries.push_back({x, v});
  });
  LatticeFn ab(2, entries);
  t.expect(!check_fn(ab, L::JumpMFn).member, "alpha/beta function accepted as jump M-convex");
  for (const auto& cv : perturbations(rng, 2)) {
    ++tests;
    t.expect(check_set(argmin_perturbed(ab, cv), L::ConstParityJump).member, "alpha/beta argmin");
  }
  return {t.ok(), t.summary("argmin necessary direction, " + std::to_string(tests) + " argmin sets"), 0};
}

Outcome laminar_criterion() {
  Tally t;
  Network net = std::get<Network>(parse_document(testing::read_data("laminar_tree.network.json")));
  LatticeFn zero = parse_fn(testing::read_data("zero_on_u.fn.json"));
  LatticeFn g = induce_fn(zero, net);
  Window box = Window::cube(3, -2, 2);
  std::size_t evaluations = 0;
  box.for_each([&](const Point& y) {
    ++evaluations;
    t.expect(g(y) == testing::laminar_tree_value(y), "g" + y.to_string());
  });
  t.expect(g.size() == box.volume(), "dom g is the box");
  t.expect(check_fn(g, L::MNatFn).member, "g is M-natural");
  return {t.ok(), t.summary("laminar network induction, " + std::to_string(evaluations) + " evaluations"), 5.0};
}

Outcome composition_criterion() {
  Tally t;
  Rng rng(27);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = 1 + rng.index(3);
    Window w = Window::cube(n, -2, 2);
    LatticeSet a = testing::random_subset(rng, w, 1, 4);
    LatticeSet b = testing::random_subset(rng, w, 1, 4);
    t.expect(minkowski_sum_set(a, b) == minkowski_sum_via_aggregation(a, b), "Minkowski #" + std::to_string(k));
    LatticeFn f = testing::random_function(rng, w, 1, 3, -5, 5);
    LatticeFn g = testing::random_function(rng, w, 1, 3, -5, 5);
    t.expect(convolution_fn(f, g) == convolution_via_aggregation(f, g), "convolution #" + std::to_string(k));
  }
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 1 + rng.index(2);
    SplitSpec spec{std::vector<std::size_t>(n, 1)};
    spec.blocks[rng.index(n)] = 2 + rng.index(2);
    Window out = Window::cube(spec.output_dim(), -1, 1 + static_cast<Coord>(rng.index(2)));
    LatticeFn f = testing::random_function(rng, Window::cube(n, -2, 3), 1, 2, -4, 4);
    Network sn = split_network(spec, out);
    t.expect(transform_set(f.dom(), sn) == split_set(f.dom(), spec, out), "split set #" + std::to_string(k));
    t.expect(induce_fn(f, sn) == split_fn(f, spec, out), "split fn #" + std::to_string(k));

    std::size_t m = 2 + rng.index(3);
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    rng.shuffle(order);
    std::size_t cut = 1 + rng.index(m - 1);
    PartitionSpec part{{std::vector<std::size_t>(order.begin(), order.begin() + static_cast<long>(cut)),
                        std::vector<std::size_t>(order.begin() + static_cast<long>(cut), order.end())}};
    Window box = Window::cube(m, -1, 1);
    LatticeFn h = testing::random_function(rng, box, 1, 2, -4, 4);
    Network an = aggregation_network(part, box);
    t.expect(transform_set(h.dom(), an) == aggregate_set(h.dom(), part), "aggregate set #" + std::to_string(k));
    t.expect(induce_fn(h, an) == aggregate_fn(h, part), "aggregate fn #" + std::to_string(k));
  }
  return {t.ok(), t.summary("sums via aggregation on 100 instances, bipartite networks on 50"), 0};
}

Outcome hull_criterion() {
  Tally t;
  Rng rng(28);
  std::size_t inside = 0;
  for (int q = 0; q < 500; ++q) {
    std::size_t n = 1 + rng.index(3);
    Window w = Window::cube(n, -1, 2);
    LatticeSet s = testing::random_subset(rng, w, 1 + rng.index(3), 4);
    HalfPoint x = testing::random_half_point(rng, w);
    bool lib = in_local_hull(s, x);
    inside += lib;
    t.expect(lib == testing::hull_oracle(s, x), "query " + x.to_string());
  }
  return {t.ok(), t.summary("local hull vs basic-solution enumeration, 500 queries, " + std::to_string(inside) +
                                " inside"),
          0};
}

}  // namespace
}  // namespace dconv

int main() {
  using dconv::Outcome;
  const std::vector<std::function<Outcome()>> criteria = {
      dconv::registry_criterion,    dconv::closure_criterion, dconv::theorem22_criterion,
      dconv::theorem23_criterion,   dconv::argmin_criterion,  dconv::laminar_criterion,
      dconv::composition_criterion, dconv::hull_criterion,
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("raised: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.limit_s > 0 && secs > o.limit_s) {
      o.ok = false;
      o.detail += " over the " + std::to_string(o.limit_s) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << o.detail << " [" << timing
              << "]" << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
