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
#include <map>
#include <tuple>
#include <string>
#include <utility>

#include "dconv/error.hpp"
#include "dconv/lab.hpp"
#include "dconv/ops.hpp"
#include "dconv/rng.hpp"

namespace dconv {

Rational Univariate::at(Coord t) const {
  if (!contains(t)) return Rational::infinity();
  return values[static_cast<std::size_t>(t - lo)];
}

bool Univariate::is_convex() const {
  for (std::size_t k = 1; k + 1 < values.size(); ++k) {
    if (values[k - 1] + values[k + 1] < values[k] + values[k]) return false;
  }
  return true;
}

LatticeFn laminar_convex_fn(std::size_t dim, const std::vector<LaminarTerm>& terms, const Window& w) {
  if (w.dim() != dim) throw DimensionError("window dimension does not match the function");
  std::vector<FnEntry> entries;
  w.for_each([&](const Point& p) {
    Rational v = 0;
    for (const LaminarTerm& term : terms) {
      Rational t = term.phi.at(p.sum(term.subset));
      if (t.is_infinite()) return;
      v += t;
    }
    entries.push_back({p, v});
  });
  if (entries.empty()) throw EmptyResultError("laminar function has an empty domain in the window");
  return LatticeFn(dim, std::move(entries));
}

LatticeFn diff_convex_fn(std::size_t dim, const std::vector<Univariate>& separable,
                         const std::vector<DiffTerm>& diff, const Window& w) {
  if (w.dim() != dim) throw DimensionError("window dimension does not match the function");
  if (!separable.empty() && separable.size() != dim) {
    throw DimensionError("need one separable term per coordinate");
  }
  std::vector<FnEntry> entries;
  w.for_each([&](const Point& p) {
    Rational v = 0;
    for (std::size_t i = 0; i < separable.size(); ++i) {
      Rational t = separable[i].at(p[i]);
      if (t.is_infinite()) return;
      v += t;
    }
    for (const DiffTerm& d : diff) {
      Rational t = d.phi.at(p[d.i] - p[d.j]);
      if (t.is_infinite()) return;
      v += t;
    }
    entries.push_back({p, v});
  });
  if (entries.empty()) throw EmptyResultError("2-separable function has an empty domain in the window");
  return LatticeFn(dim, std::move(entries));
}

namespace {

void check_edges(std::size_t dim, const std::vector<GraphEdge>& edges) {
  if (edges.size() > 20) throw InputError("graph has too many edges to enumerate");
  for (const GraphEdge& e : edges) {
    if (e.u >= dim || e.v >= dim) throw InputError("edge endpoint out of range");
    if (e.weight.is_infinite()) throw InputError("edge weights must be finite");
  }
}

LatticeFn subset_min_fn(std::size_t dim, const std::vector<GraphEdge>& edges, bool matching) {
  check_edges(dim, edges);
  std::map<Point, Rational> best;
  const std::size_t m = edges.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Point deg(dim);
    Rational w = 0;
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      if (!(mask >> k & 1u)) continue;
      const GraphEdge& e = edges[k];
      if (matching && (e.u == e.v || deg[e.u] || deg[e.v])) ok = false;
      deg[e.u] += 1;
      deg[e.v] += 1;
      w += e.weight;
    }
    if (!ok) continue;
    auto [it, inserted] = best.emplace(deg, w);
    if (!inserted && w < it->second) it->second = w;
  }
  std::vector<FnEntry> entries;
  for (auto& [x, v] : best) entries.push_back({x, v});
  return LatticeFn(dim, std::move(entries));
}

// ---------------------------------------------------------------------------
// Random building blocks.

Univariate random_convex(Rng& rng, Coord lo, Coord hi) {
  Univariate u{lo, hi, {}};
  Coord den = rng.chance(1, 4) ? 2 : 1;
  Coord value = rng.uniform(0, 3);
  Coord slope = rng.uniform(-3, 1);
  for (Coord t = lo; t <= hi; ++t) {
    u.values.emplace_back(value, den);
    value += slope;
    slope += rng.uniform(0, 2);
  }
  return u;
}

// Random sub-box of w with at most max_volume points, biased towards wide
// boxes.
Window random_box(Rng& rng, const Window& w, std::uint64_t max_volume) {
  const std::size_t n = w.dim();
  Point lo(n);
  Point hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Coord width = w.hi()[i] - w.lo()[i];
    lo[i] = w.lo()[i] + rng.uniform(0, width / 3);
    hi[i] = w.hi()[i] - rng.uniform(0, width / 3);
  }
  auto volume = [&] {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) v *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    return v;
  };
  while (volume() > max_volume) {
    std::size_t widest = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (hi[i] - lo[i] > hi[widest] - lo[widest]) widest = i;
    }
    if (rng.chance(1, 2)) {
      ++lo[widest];
    } else {
      --hi[widest];
    }
  }
  return Window(lo, hi);
}

// Random subinterval of [lo, hi] keeping at least a third of it.
std::pair<Coord, Coord> random_interval(Rng& rng, Coord lo, Coord hi) {
  Coord cut = (hi - lo) / 3;
  return {lo + rng.uniform(0, cut), hi - rng.uniform(0, cut)};
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Random laminar family on `ground`: all singletons, every other member with
// probability 1/2 (the ground set itself when `with_root`).
void random_laminar(Rng& rng, std::vector<std::size_t> ground, bool with_root,
                    std::vector<std::vector<std::size_t>>& out) {
  if (ground.size() == 1) {
    out.push_back(ground);
    return;
  }
  if (with_root) out.push_back(ground);
  rng.shuffle(ground);
  std::size_t parts = static_cast<std::size_t>(rng.uniform(2, static_cast<Coord>(ground.size())));
  std::vector<std::vector<std::size_t>> children(parts);
  for (std::size_t k = 0; k < ground.size(); ++k) {
    children[k < parts ? k : rng.index(parts)].push_back(ground[k]);
  }
  for (auto& c : children) {
    std::sort(c.begin(), c.end());
    random_laminar(rng, c, rng.chance(1, 2), out);
  }
}

// Laminar convex function on a random box; `fix_sum` adds the constraint
// x(N) = c for a c that keeps the domain nonempty.
std::optional<LatticeFn> random_laminar_fn(Rng& rng, std::size_t n, const Window& w, std::size_t max_points,
                                           bool fix_sum, bool zero_values) {
  Window box = random_box(rng, w, max_points * (1 + rng.index(3)) * (fix_sum ? 4 : 1));
  std::vector<std::vector<std::size_t>> family;
  random_laminar(rng, iota(n), rng.chance(1, 2), family);
  std::vector<LaminarTerm> terms;
  for (auto& a : family) {
    Coord lo = 0;
    Coord hi = 0;
    for (std::size_t i : a) {
      lo += box.lo()[i];
      hi += box.hi()[i];
    }
    if (a.size() > 1 && rng.chance(1, 2)) std::tie(lo, hi) = random_interval(rng, lo, hi);
    Univariate phi = random_convex(rng, lo, hi);
    if (zero_values) std::fill(phi.values.begin(), phi.values.end(), Rational(0));
    terms.push_back({a, std::move(phi)});
  }
  LatticeFn f;
  try {
    f = laminar_convex_fn(n, terms, box);
  } catch (const EmptyResultError&) {
    return std::nullopt;
  }
  if (fix_sum) {
    // The most frequent sum keeps the largest slice.
    std::map<Coord, std::size_t> sums;
    for (const FnEntry& e : f.entries()) ++sums[e.x.sum()];
    Coord c = 0;
    std::size_t best = 0;
    for (auto [v, k] : sums) {
      if (k > best || (k == best && rng.chance(1, 2))) {
        c = v;
        best = k;
      }
    }
    std::vector<FnEntry> kept;
    for (const FnEntry& e : f.entries()) {
      if (e.x.sum() == c) kept.push_back(e);
    }
    f = LatticeFn(n, std::move(kept));
  }
  if (f.size() > max_points) return std::nullopt;
  return f;
}

// 2-separable convex function with difference bounds on a random box.
std::optional<LatticeFn> random_diff_fn(Rng& rng, std::size_t n, const Window& w, std::size_t max_points,
                                        bool zero_values) {
  Window box = random_box(rng, w, max_points * (1 + rng.index(3)));
  std::vector<Univariate> sep;
  for (std::size_t i = 0; i < n; ++i) {
    Univariate phi = random_convex(rng, box.lo()[i], box.hi()[i]);
    if (zero_values) std::fill(phi.values.begin(), phi.values.end(), Rational(0));
    sep.push_back(std::move(phi));
  }
  std::vector<DiffTerm> diff;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!rng.chance(2, 3)) continue;
      auto [a, b] = random_interval(rng, box.lo()[i] - box.hi()[j], box.hi()[i] - box.lo()[j]);
      Univariate phi = random_convex(rng, a, b);
      if (zero_values) std::fill(phi.values.begin(), phi.values.end(), Rational(0));
      diff.push_back({i, j, std::move(phi)});
    }
  }
  try {
    LatticeFn f = diff_convex_fn(n, sep, diff, box);
    if (f.size() > max_points) return std::nullopt;
    return f;
  } catch (const EmptyResultError&) {
    return std::nullopt;
  }
}

// Lifted L-convex function: representatives p with p_n = 0 in a random box,
// values sum phi_ij(p_i - p_j) over all pairs involving the box terms.
std::optional<LatticeFn> random_lifted_fn(Rng& rng, std::size_t n, const Window& w, std::size_t max_points,
                                          bool zero_values) {
  Point lo = w.lo();
  Point hi = w.hi();
  lo[n - 1] = 0;
  hi[n - 1] = 0;
  Window box = random_box(rng, Window(lo, hi), max_points * (1 + rng.index(3)));
  std::vector<DiffTerm> diff;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    diff.push_back({i, n - 1, random_convex(rng, box.lo()[i], box.hi()[i])});
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      if (!rng.chance(1, 2)) continue;
      auto [a, b] = random_interval(rng, box.lo()[i] - box.hi()[j], box.hi()[i] - box.lo()[j]);
      diff.push_back({i, j, random_convex(rng, a, b)});
    }
  }
  if (zero_values) {
    for (DiffTerm& d : diff) std::fill(d.phi.values.begin(), d.phi.values.end(), Rational(0));
  }
  LatticeFn base;
  try {
    base = diff_convex_fn(n, {}, diff, box);
  } catch (const EmptyResultError&) {
    return std::nullopt;
  }
  if (base.size() > max_points) return std::nullopt;
  Rational ramp = zero_values ? Rational(0) : rng.rational(-2, 2, 2);
  return LatticeFn(n, base.entries(), true, ramp);
}

std::vector<GraphEdge> random_graph(Rng& rng, std::size_t n, std::size_t max_edges, bool loops) {
  std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<Coord>(max_edges)));
  std::vector<GraphEdge> edges;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t u = rng.index(n);
    std::size_t v = rng.index(n);
    if (!loops && n > 1) {
      while (v == u) v = rng.index(n);
    }
    edges.push_back({std::min(u, v), std::max(u, v), Rational(rng.uniform(0, 3))});
  }
  return edges;
}

LatticeFn translate(const LatticeFn& f, const Point& offset) {
  std::vector<FnEntry> entries;
  for (const FnEntry& e : f.entries()) entries.push_back({e.x + offset, e.value});
  return LatticeFn(f.dim(), std::move(entries), f.lift_ones(), f.ramp());
}

Point random_offset(Rng& rng, const Window& w) {
  Point p(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) p[i] = rng.uniform(w.lo()[i], std::min<Coord>(w.hi()[i], w.lo()[i] + 2));
  return p;
}

std::optional<LatticeFn> random_degree_fn(Rng& rng, std::size_t n, const Window& w, bool zero_values) {
  std::vector<GraphEdge> edges = random_graph(rng, n, 6, true);
  if (zero_values) {
    for (GraphEdge& e : edges) e.weight = 0;
  }
  return translate(degree_system_fn(n, edges), random_offset(rng, w));
}

// Random quadratic form x'Ax + b'x on a random box.
std::optional<LatticeFn> random_quadratic(Rng& rng, std::size_t n, const Window& w, std::size_t max_points) {
  Window box = random_box(rng, w, max_points);
  std::vector<std::vector<Coord>> a(n, std::vector<Coord>(n, 0));
  std::vector<Coord> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = rng.uniform(0, 3);
    b[i] = rng.uniform(-3, 3);
    for (std::size_t j = i + 1; j < n; ++j) a[i][j] = rng.uniform(-2, 2);
  }
  std::vector<FnEntry> entries;
  box.for_each([&](const Point& p) {
    Coord v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v += b[i] * p[i];
      for (std::size_t j = i; j < n; ++j) v += a[i][j] * p[i] * p[j];
    }
    entries.push_back({p, Rational(v)});
  });
  return LatticeFn(n, std::move(entries));
}

// Arbitrary values on a random subset of a unit cube.
std::optional<LatticeFn> random_cube_fn(Rng& rng, std::size_t n, const Window& w, bool zero_values) {
  Point base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = rng.uniform(w.lo()[i], std::max(w.lo()[i], w.hi()[i] - 1));
  std::vector<FnEntry> entries;
  Window::cube(n, 0, 1).for_each([&](const Point& p) {
    if (rng.chance(3, 4)) entries.push_back({base + p, zero_values ? Rational(0) : Rational(rng.uniform(0, 4))});
  });
  if (entries.empty()) return std::nullopt;
  return LatticeFn(n, std::move(entries));
}

// Deletes each point of f with probability 1/5.
std::optional<LatticeFn> thin(Rng& rng, const LatticeFn& f) {
  std::vector<FnEntry> kept;
  for (const FnEntry& e : f.entries()) {
    if (!rng.chance(1, 5)) kept.push_back(e);
  }
  if (kept.empty()) return std::nullopt;
  return LatticeFn(f.dim(), std::move(kept));
}

// Minimum over the first coordinate.
LatticeFn project_first(const LatticeFn& f) {
  std::map<Point, Rational> best;
  for (const FnEntry& e : f.entries()) {
    Point y = e.x.slice(1, f.dim() - 1);
    auto [it, inserted] = best.emplace(y, e.value);
    if (!inserted && e.value < it->second) it->second = e.value;
  }
  std::vector<FnEntry> entries;
  for (auto& [x, v] : best) entries.push_back({x, v});
  return LatticeFn(f.dim() - 1, std::move(entries));
}

std::optional<LatticeFn> opt_d_image(std::optional<LatticeFn> f) {
  if (!f) return std::nullopt;
  return d_inverse_transform(*f);
}

struct Candidate {
  std::optional<LatticeFn> fn;
  // A constructive family that must never produce a non-member.
  bool constructive = true;
};

class Sampler {
 public:
  Sampler(const GeneratorConfig& config, bool sets) : c_(config), rng_(config.seed), sets_(sets) {}

  Candidate propose(ClassLabel label) {
    const std::size_t n = c_.dim;
    const Window& w = c_.window;
    const std::size_t cap = c_.max_points;
    const bool z = sets_;
    switch (label) {
      case ClassLabel::IntegerBox:
      case ClassLabel::SeparableConvex: {
        Window box = random_box(rng_, w, cap);
        std::vector<Univariate> sep;
        for (std::size_t i = 0; i < n; ++i) {
          Univariate phi = random_convex(rng_, box.lo()[i], box.hi()[i]);
          if (z) std::fill(phi.values.begin(), phi.values.end(), Rational(0));
          sep.push_back(std::move(phi));
        }
        return {diff_convex_fn(n, sep, {}, box)};
      }
      case ClassLabel::LNatSet:
      case ClassLabel::LNatFn:
        return {random_diff_fn(rng_, n, w, cap, z)};
      case ClassLabel::LSet:
      case ClassLabel::LFn:
        return {random_lifted_fn(rng_, n, w, cap, z)};
      case ClassLabel::MNatSet:
      case ClassLabel::MNatFn:
        return {random_laminar_fn(rng_, n, w, cap, false, z)};
      case ClassLabel::MSet:
      case ClassLabel::MFn:
        return {random_laminar_fn(rng_, n, w, cap, true, z)};
      case ClassLabel::MultimodularSet:
      case ClassLabel::MultimodularFn:
        return {opt_d_image(random_diff_fn(rng_, n, w, cap, z))};
      case ClassLabel::IntegrallyConvexSet:
      case ClassLabel::IntegrallyConvexFn:
        switch (rng_.index(4)) {
          case 0:
            return {random_diff_fn(rng_, n, w, cap, z)};
          case 1:
            return {random_laminar_fn(rng_, n, w, cap, false, z)};
          case 2:
            return {random_cube_fn(rng_, n, w, z)};
          default:
            return rejection(z ? thin_box() : random_quadratic(rng_, n, w, std::min<std::size_t>(cap, 40)));
        }
      case ClassLabel::GlobalDMCSet:
      case ClassLabel::GlobalDMCFn:
      case ClassLabel::LocalDMCFn:
        switch (rng_.index(3)) {
          case 0:
            return {random_diff_fn(rng_, n, w, cap, z)};
          case 1:
            if (z) return rejection(thin_lnat());
            return rejection(random_quadratic(rng_, n, w, std::min<std::size_t>(cap, 40)));
          default:
            if (z) return rejection(thin_box());
            return rejection(random_quadratic(rng_, n, w, std::min<std::size_t>(cap, 40)));
        }
      case ClassLabel::ConstParityJump:
        return {random_degree_fn(rng_, n, w, true)};
      case ClassLabel::JumpMFn:
        if (c_.binary) return rejection(matching_fn(n, random_graph(rng_, n, 6, false)));
        return rejection(random_degree_fn(rng_, n, w, false));
      case ClassLabel::SimultExchJump:
      case ClassLabel::JumpMNatFn:
        switch (rng_.index(3)) {
          case 0:
            return rejection(random_degree_fn(rng_, n, w, z));
          case 1:
            return {random_laminar_fn(rng_, n, w, cap, false, z)};
          default:
            return rejection(project_first(*random_degree_fn(rng_, n + 1, Window::cube(n + 1, w.lo()[0], w.hi()[0]), z)));
        }
      case ClassLabel::JumpSystem:
        if (rng_.chance(1, 2)) return rejection(random_degree_fn(rng_, n, w, true));
        return rejection(thin_box());
    }
    return {std::nullopt};
  }

  // Accepted candidate for `label`, drawn until the recognizer agrees.
  LatticeFn run() {
    for (std::size_t attempt = 0; attempt < c_.budget; ++attempt) {
      Candidate cand = propose(c_.label);
      if (!cand.fn || cand.fn->size() > c_.max_points) continue;
      // Singletons satisfy every axiom vacuously; keep a few of them only.
      if (cand.fn->size() == 1 && c_.max_points > 1 && !rng_.chance(1, 10)) continue;
      if (accepts(*cand.fn)) return *cand.fn;
      if (cand.constructive) {
        throw Error("generator for " + std::string(label_name(c_.label)) + " produced a non-member (seed " +
                    std::to_string(c_.seed) + ")");
      }
    }
    throw Error("rejection budget of " + std::to_string(c_.budget) + " attempts exhausted for " +
                std::string(label_name(c_.label)));
  }

  bool accepts(const LatticeFn& f) const {
    if (sets_) return check_set(f.dom(), c_.label).member;
    return check_fn(f, c_.label).member;
  }

 private:
  static Candidate rejection(std::optional<LatticeFn> f) { return {std::move(f), false}; }

  std::optional<LatticeFn> thin_box() {
    Window box = random_box(rng_, c_.window, std::min<std::size_t>(c_.max_points, 30));
    return thin(rng_, LatticeFn::indicator(LatticeSet(c_.dim, box.points())));
  }

  std::optional<LatticeFn> thin_lnat() {
    std::optional<LatticeFn> f = random_diff_fn(rng_, c_.dim, c_.window, std::min<std::size_t>(c_.max_points, 30), true);
    if (!f) return std::nullopt;
    return thin(rng_, *f);
  }

  const GeneratorConfig& c_;
  Rng rng_;
  bool sets_;
};

LatticeFn from_structure(const GeneratorConfig& c) {
  if (!c.laminar.empty()) return laminar_convex_fn(c.dim, c.laminar, c.window);
  if (!c.graph.empty()) return c.binary ? matching_fn(c.dim, c.graph) : degree_system_fn(c.dim, c.graph);
  return diff_convex_fn(c.dim, c.separable, c.diff, c.window);
}

bool has_structure(const GeneratorConfig& c) {
  return !c.laminar.empty() || !c.graph.empty() || !c.separable.empty() || !c.diff.empty();
}

void validate(const GeneratorConfig& c) {
  if (c.dim == 0 || c.dim + 1 > kMaxDim) throw DimensionError("generator dimension out of range");
  if (c.window.dim() != c.dim) throw DimensionError("generator window has the wrong dimension");
  if (c.max_points == 0) throw InputError("max_points must be positive");
}

}  // namespace

LatticeFn degree_system_fn(std::size_t dim, const std::vector<GraphEdge>& edges) {
  return subset_min_fn(dim, edges, false);
}

LatticeFn matching_fn(std::size_t dim, const std::vector<GraphEdge>& edges) {
  return subset_min_fn(dim, edges, true);
}

LatticeSet generate_set(const GeneratorConfig& config) {
  if (!is_set_label(config.label)) throw InputError("generate_set needs a set label");
  validate(config);
  if (has_structure(config)) {
    LatticeSet s = from_structure(config).dom();
    if (!check_set(s, config.label)) throw Error("configured instance is not a member of its class");
    return s;
  }
  return Sampler(config, true).run().dom();
}

LatticeFn generate_fn(const GeneratorConfig& config) {
  if (is_set_label(config.label)) throw InputError("generate_fn needs a function label");
  validate(config);
  if (has_structure(config)) {
    LatticeFn f = from_structure(config);
    if (!check_fn(f, config.label)) throw Error("configured instance is not a member of its class");
    return f;
  }
  return Sampler(config, false).run();
}

Instance generate(const GeneratorConfig& config) {
  if (is_set_label(config.label)) return generate_set(config);
  return generate_fn(config);
}

}  // namespace dconv
