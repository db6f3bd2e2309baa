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
#include <array>
#include <sstream>
#include <string>
#include <utility>

#include "codec.hpp"
#include "dconv/error.hpp"
#include "dconv/lab.hpp"
#include "dconv/ops.hpp"
#include "dconv/rng.hpp"

namespace dconv {

namespace {

using codec::Json;

constexpr Operation kOps[] = {Operation::DirectSum, Operation::Splitting, Operation::Aggregation,
                              Operation::NetworkInduction};

struct Row {
  ClassLabel label;
  const char* name;
  // Per operation: nullptr for Y, otherwise the cited record ids.
  std::array<const char*, 4> refuted;
};

constexpr const char* Y = nullptr;

const Row kRows[] = {
    {ClassLabel::IntegerBox, "Integer box", {Y, "EX3.1", Y, "EX3.1"}},
    {ClassLabel::IntegrallyConvexSet, "Integrally convex", {Y, Y, "EX3.3", "EX3.3"}},
    {ClassLabel::LNatSet, "L-natural", {Y, "EX3.1", "EX3.4", "EX3.1,EX3.4"}},
    {ClassLabel::LSet, "L-convex", {Y, "EX3.2", "EX3.5", "EX3.2,EX3.5"}},
    {ClassLabel::MNatSet, "M-natural", {Y, Y, Y, Y}},
    {ClassLabel::MSet, "M-convex", {Y, Y, Y, Y}},
    {ClassLabel::MultimodularSet, "Multimodular", {Y, Y, "EX3.6", "EX3.6"}},
    {ClassLabel::GlobalDMCSet, "Disc. midpt convex", {"EX3.1D", "EX3.1", "EX3.3", "EX3.3"}},
    {ClassLabel::SimultExchJump, "Simul. exch. jump", {Y, Y, Y, Y}},
    {ClassLabel::ConstParityJump, "Const-parity jump", {Y, Y, Y, Y}},
    {ClassLabel::SeparableConvex, "Separable convex", {Y, "EX3.1", Y, "EX3.1"}},
    {ClassLabel::IntegrallyConvexFn, "Integrally convex", {Y, Y, "EX3.3", "EX3.3"}},
    {ClassLabel::LNatFn, "L-natural", {Y, "EX3.1", "EX3.4", "EX3.1,EX3.4"}},
    {ClassLabel::LFn, "L-convex", {Y, "EX3.2", "EX3.5", "EX3.2,EX3.5"}},
    {ClassLabel::MNatFn, "M-natural", {Y, Y, Y, Y}},
    {ClassLabel::MFn, "M-convex", {Y, Y, Y, Y}},
    {ClassLabel::MultimodularFn, "Multimodular", {Y, Y, "EX3.6", "EX3.6"}},
    {ClassLabel::GlobalDMCFn, "Globally d.m.c.", {"EX3.1D,EX4.1", "EX3.1", "EX3.3", "EX3.3"}},
    {ClassLabel::LocalDMCFn, "Locally d.m.c.", {"EX3.1D,EX4.1", "EX3.1", "EX3.3", "EX3.3"}},
    {ClassLabel::JumpMNatFn, "Jump M-natural", {Y, Y, Y, Y}},
    {ClassLabel::JumpMFn, "Jump M-convex", {Y, Y, Y, Y}},
};

std::vector<std::string> split_ids(const std::string& citation) {
  std::vector<std::string> ids;
  std::stringstream ss(citation);
  std::string id;
  while (std::getline(ss, id, ',')) ids.push_back(id);
  return ids;
}

bool is_lrow(ClassLabel label) { return label == ClassLabel::LSet || label == ClassLabel::LFn; }

bool is_jump_row(ClassLabel label) {
  return label == ClassLabel::SimultExchJump || label == ClassLabel::ConstParityJump ||
         label == ClassLabel::JumpMNatFn || label == ClassLabel::JumpMFn;
}

// ---------------------------------------------------------------------------
// Kind-generic helpers.

Verdict verdict(const LatticeSet& s, ClassLabel label) { return check_set(s, label); }
Verdict verdict(const LatticeFn& f, ClassLabel label) { return check_fn(f, label); }

template <typename T>
T draw(const GeneratorConfig& config);
template <>
LatticeSet draw<LatticeSet>(const GeneratorConfig& config) {
  return generate_set(config);
}
template <>
LatticeFn draw<LatticeFn>(const GeneratorConfig& config) {
  return generate_fn(config);
}

LatticeSet direct_sum(const LatticeSet& a, const LatticeSet& b) { return direct_sum_set(a, b); }
LatticeFn direct_sum(const LatticeFn& a, const LatticeFn& b) { return direct_sum_fn(a, b); }
LatticeSet split(const LatticeSet& s, const SplitSpec& spec, const Window& w) { return split_set(s, spec, w); }
LatticeFn split(const LatticeFn& f, const SplitSpec& spec, const Window& w) { return split_fn(f, spec, w); }
LatticeSet aggregate(const LatticeSet& s, const PartitionSpec& spec) { return aggregate_set(s, spec); }
LatticeFn aggregate(const LatticeFn& f, const PartitionSpec& spec) { return aggregate_fn(f, spec); }
LatticeSet induce(const LatticeSet& s, const Network& net) { return transform_set(s, net); }
LatticeFn induce(const LatticeFn& f, const Network& net) { return induce_fn(f, net); }

const std::vector<Point>& points_of(const LatticeSet& s) { return s.points(); }
std::vector<Point> points_of(const LatticeFn& f) { return f.dom().points(); }

// Rejection for the windowed L-convex check: the cut object must be
// L-natural and its values must shift by `ramp` along the all-ones direction
// wherever both ends lie in the window.
std::optional<std::string> windowed_l_failure(const LatticeFn& g, const Window& w, const Rational& ramp) {
  Verdict v = check_fn(g, ClassLabel::LNatFn);
  if (!v.member) return "cut is not L-natural: " + v.witness->to_string();
  std::optional<std::string> bad;
  const Point one = Point::ones(w.dim());
  w.for_each([&](const Point& p) {
    if (bad) return;
    Point q = p + one;
    if (!w.contains(q)) return;
    Rational a = g(p);
    Rational b = g(q);
    if (a.is_infinite() != b.is_infinite() || (a.is_finite() && b != a + ramp)) {
      bad = "shift consistency fails at " + p.to_string();
    }
  });
  return bad;
}

std::optional<std::string> windowed_l_failure(const LatticeSet& s, const Window& w) {
  return windowed_l_failure(LatticeFn::indicator(s), w, 0);
}


// ---------------------------------------------------------------------------
// Trials. Each returns a failure description (JSON) or nullopt.

struct Trial {
  ClassLabel label;
  std::size_t max_dim;
  Rng rng;

  GeneratorConfig config(std::size_t dim, Coord lo, Coord hi, std::size_t max_points) {
    GeneratorConfig c;
    c.label = label;
    c.dim = dim;
    c.window = Window::cube(dim, lo, hi);
    c.seed = rng.next();
    c.max_points = max_points;
    return c;
  }

  std::size_t dim(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(rng.uniform(static_cast<Coord>(lo), static_cast<Coord>(std::max(lo, hi))));
  }

  template <typename T>
  std::optional<Json> check_output(const T& out, Json record) {
    Verdict v = verdict(out, label);
    if (v.member) return std::nullopt;
    record["output"] = codec::encode(out);
    record["witness"] = codec::encode(*v.witness);
    return record;
  }

  template <typename T>
  std::optional<Json> direct_sum_trial() {
    std::size_t n1 = dim(1, max_dim - 1);
    std::size_t n2 = dim(1, max_dim - n1);
    if (is_lrow(label)) {
      T a = draw<T>(config(n1, -1, 1, 4));
      T b = draw<T>(config(n2, -1, 1, 4));
      Window w1 = Window::cube(n1, -1, 1);
      Window w2 = Window::cube(n2, -1, 1);
      T cut = direct_sum(restrict_to_window(a, w1), restrict_to_window(b, w2));
      Window w(w1.lo().concat(w2.lo()), w1.hi().concat(w2.hi()));
      std::optional<std::string> bad;
      if constexpr (std::is_same_v<T, LatticeSet>) {
        bad = windowed_l_failure(cut, w);
      } else {
        bad = windowed_l_failure(cut, w, a.ramp() + b.ramp());
      }
      if (!bad) return std::nullopt;
      return Json{{"inputs", {codec::encode(a), codec::encode(b)}}, {"output", codec::encode(cut)}, {"reason", *bad}};
    }
    std::size_t cap = label == ClassLabel::IntegrallyConvexSet || label == ClassLabel::IntegrallyConvexFn ? 8 : 12;
    T a = draw<T>(config(n1, -2, 2, cap));
    T b = draw<T>(config(n2, -2, 2, cap));
    return check_output(direct_sum(a, b), Json{{"inputs", {codec::encode(a), codec::encode(b)}}});
  }

  template <typename T>
  std::optional<Json> split_trial() {
    std::size_t n = dim(1, max_dim - 1);
    T s = draw<T>(config(n, -2, 2, 30));
    std::size_t k = rng.index(n);
    SplitSpec spec = SplitSpec::elementary(n, k);
    const std::vector<Point> pts = points_of(s);
    Window box = Window::bounding(pts);
    const Coord margin = is_jump_row(label) ? 2 : 1;
    std::vector<std::size_t> owner = split_owner(spec);
    Point lo(owner.size());
    Point hi(owner.size());
    for (std::size_t c = 0; c < owner.size(); ++c) {
      std::size_t i = owner[c];
      if (spec.blocks[i] == 1) {
        lo[c] = box.lo()[i];
        hi[c] = box.hi()[i];
      } else {
        Coord a = box.lo()[i];
        Coord b = box.hi()[i];
        lo[c] = (a < 0 ? -((-a + 1) / 2) : a / 2) - margin;
        hi[c] = (b > 0 ? (b + 1) / 2 : -((-b) / 2)) + margin;
      }
    }
    Window w(lo, hi);
    Json record{{"inputs", {codec::encode(s)}}, {"spec", codec::encode(spec)}, {"window", codec::encode(w)}};
    return check_output(split(s, spec, w), std::move(record));
  }

  PartitionSpec random_partition(std::size_t n) {
    std::size_t m = dim(1, n - 1);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    PartitionSpec spec;
    spec.groups.resize(m);
    for (std::size_t k = 0; k < n; ++k) spec.groups[k < m ? k : rng.index(m)].push_back(order[k]);
    for (auto& g : spec.groups) std::sort(g.begin(), g.end());
    std::sort(spec.groups.begin(), spec.groups.end());
    return spec;
  }

  template <typename T>
  std::optional<Json> aggregate_trial() {
    std::size_t n = dim(2, max_dim);
    T s = draw<T>(config(n, -3, 3, 100));
    PartitionSpec spec = random_partition(n);
    return check_output(aggregate(s, spec), Json{{"inputs", {codec::encode(s)}}, {"spec", codec::encode(spec)}});
  }

  Network random_network(std::size_t n, bool costs) {
    std::size_t m = dim(1, std::min<std::size_t>(3, max_dim));
    bool middle = rng.chance(1, 2);
    std::vector<std::string> entrance;
    std::vector<std::string> exit;
    for (std::size_t i = 0; i < n; ++i) entrance.push_back("u" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j) exit.push_back("w" + std::to_string(j + 1));
    std::vector<std::string> vertices = entrance;
    if (middle) vertices.push_back("v");
    vertices.insert(vertices.end(), exit.begin(), exit.end());
    std::vector<std::string> tails = entrance;
    std::vector<std::string> heads = exit;
    if (middle) {
      tails.push_back("v");
      heads.push_back("v");
    }
    std::vector<Arc> arcs;
    auto add = [&](const std::string& tail, const std::string& head) {
      Arc a{tail, head, rng.uniform(-2, 0), 0, ArcCost::zero()};
      a.upper = rng.uniform(std::max<Coord>(a.lower, 0), 2);
      if (costs && rng.chance(2, 3)) {
        std::vector<Rational> values;
        Coord value = rng.uniform(0, 2);
        Coord slope = rng.uniform(-2, 1);
        for (Coord t = a.lower; t <= a.upper; ++t) {
          values.emplace_back(value);
          value += slope;
          slope += rng.uniform(0, 2);
        }
        a.cost = ArcCost::table(std::move(values));
      }
      arcs.push_back(std::move(a));
    };
    for (const std::string& u : entrance) add(u, rng.pick(heads));
    for (const std::string& w : exit) add(rng.pick(tails), w);
    if (middle) add(rng.pick(entrance), "v");
    std::size_t extra = rng.index(3);
    for (std::size_t k = 0; k < extra; ++k) {
      const std::string& t = rng.pick(tails);
      const std::string& h = rng.pick(heads);
      if (t != h) add(t, h);
    }
    return Network(vertices, arcs, entrance, exit);
  }

  template <typename T>
  std::optional<Json> network_trial() {
    std::size_t n = dim(1, std::min<std::size_t>(3, max_dim));
    T s = draw<T>(config(n, -2, 2, 30));
    for (int attempt = 0; attempt < 50; ++attempt) {
      Network net = random_network(n, std::is_same_v<T, LatticeFn>);
      T out;
      try {
        out = induce(s, net);
      } catch (const EmptyResultError&) {
        continue;
      }
      if constexpr (std::is_same_v<T, LatticeSet>) {
        if (out.empty()) continue;
      }
      return check_output(out, Json{{"inputs", {codec::encode(s)}}, {"network", codec::encode(net)}});
    }
    throw Error("no network with a nonempty image found in 50 attempts");
  }

  template <typename T>
  std::optional<Json> run(Operation op) {
    switch (op) {
      case Operation::DirectSum:
        return direct_sum_trial<T>();
      case Operation::Splitting:
        return split_trial<T>();
      case Operation::Aggregation:
        return aggregate_trial<T>();
      case Operation::NetworkInduction:
        return network_trial<T>();
    }
    return std::nullopt;
  }
};

std::string cell_text(const ClosureCell& c) {
  std::string yn = c.observed ? "Y" : "N";
  if (c.expected) return yn + " " + std::to_string(c.passed) + "/" + std::to_string(c.trials);
  return yn + " " + c.citation;
}

}  // namespace

std::vector<ClosureCell> closure_grid() {
  std::vector<ClosureCell> cells;
  for (const Row& row : kRows) {
    for (std::size_t k = 0; k < 4; ++k) {
      ClosureCell c;
      c.label = row.label;
      c.op = kOps[k];
      c.expected = row.refuted[k] == nullptr;
      c.citation = c.expected ? "randomized trials" : row.refuted[k];
      cells.push_back(std::move(c));
    }
  }
  return cells;
}

void run_cell(ClosureCell& cell, std::size_t trials, std::uint64_t seed, std::size_t max_dim) {
  cell.trials = 0;
  cell.passed = 0;
  cell.failure.clear();
  if (!cell.expected) {
    // N cells: every cited record must replay and list this label.
    bool all = true;
    for (const std::string& id : split_ids(cell.citation)) {
      const CounterexampleRecord* rec = find_record(id);
      bool ok = rec && std::find(rec->negative.begin(), rec->negative.end(), cell.label) != rec->negative.end() &&
                replay_record(*rec).passed;
      ++cell.trials;
      if (ok) ++cell.passed;
      all = all && ok;
    }
    cell.observed = !all;
    return;
  }
  const std::uint64_t cell_seed =
      derive_seed(seed, static_cast<std::uint64_t>(cell.label), static_cast<std::uint64_t>(cell.op));
  for (std::size_t t = 0; t < trials; ++t) {
    Trial trial{cell.label, std::max<std::size_t>(max_dim, 2), Rng(derive_seed(cell_seed, t))};
    std::optional<Json> failure;
    try {
      failure = is_set_label(cell.label) ? trial.run<LatticeSet>(cell.op) : trial.run<LatticeFn>(cell.op);
    } catch (const Error& e) {
      failure = Json{{"error", e.what()}};
    }
    ++cell.trials;
    if (!failure) {
      ++cell.passed;
    } else if (cell.failure.empty()) {
      (*failure)["trial"] = t;
      cell.failure = failure->dump();
    }
  }
  cell.observed = cell.passed == cell.trials;
}

ClosureReport closure_matrix(std::size_t trials, std::uint64_t seed, std::size_t max_dim) {
  if (trials == 0) throw InputError("closure matrix needs at least one trial per cell");
  if (max_dim + 2 > kMaxDim) throw DimensionError("max_dim too large");
  ClosureReport report;
  report.trials = trials;
  report.seed = seed;
  report.max_dim = max_dim;
  report.cells = closure_grid();
  for (ClosureCell& cell : report.cells) run_cell(cell, trials, seed, max_dim);
  return report;
}

bool ClosureReport::ok() const {
  return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](const ClosureCell& c) { return c.ok(); });
}

std::string ClosureReport::render() const {
  std::ostringstream out;
  auto table = [&](bool sets) {
    out << (sets ? "Operations on discrete convex sets" : "Operations on discrete convex functions") << "\n";
    const int w0 = 20;
    const int w = 18;
    auto pad = [](std::string s, int width) {
      if (static_cast<int>(s.size()) < width) s.append(static_cast<std::size_t>(width) - s.size(), ' ');
      return s;
    };
    out << pad("", w0) << pad("Direct sum", w) << pad("Splitting", w) << pad("Aggregation", w)
        << pad("Network", w) << "\n";
    for (std::size_t r = 0; r < std::size(kRows); ++r) {
      if (is_set_label(kRows[r].label) != sets) continue;
      out << pad(kRows[r].name, w0);
      for (const ClosureCell& c : cells) {
        if (c.label != kRows[r].label) continue;
        out << pad(cell_text(c) + (c.ok() ? "" : " !"), w);
      }
      out << "\n";
    }
    out << "\n";
  };
  table(true);
  table(false);
  out << "trials " << trials << ", seed " << seed << ", max_dim " << max_dim << ": "
      << (ok() ? "grid matches" : "MISMATCH") << "\n";
  return out.str();
}

}  // namespace dconv
