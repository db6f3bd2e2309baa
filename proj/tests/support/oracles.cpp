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


#include "oracles.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dconv::testing {

namespace {

Rational dot(const std::vector<Rational>& c, const Point& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * Rational(x[i]);
  return s;
}

bool ge(const Rational& lhs, const Rational& rhs) { return lhs.is_infinite() || lhs >= rhs; }

std::vector<Point> dom_points(const LatticeFn& f) {
  std::vector<Point> pts;
  for (const FnEntry& e : f.entries()) pts.push_back(e.x);
  return pts;
}

}  // namespace

std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& cols, const HalfPoint& x) {
  const std::size_t n = x.dim();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = Rational(cols[c][r]);
    m[r][k] = x.coord(r);
  }
  for (std::size_t c = 0; c < k; ++c) m[n][c] = 1;
  m[n][k] = 1;

  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv <= n && m[piv][c] == Rational(0)) ++piv;
    if (piv > n) return std::nullopt;  // dependent columns
    std::swap(m[piv], m[row]);
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == row || m[r][c] == Rational(0)) continue;
      Rational factor = m[r][c] / m[row][c];
      for (std::size_t cc = c; cc <= k; ++cc) m[r][cc] -= factor * m[row][cc];
    }
    ++row;
  }
  for (std::size_t r = row; r <= n; ++r) {
    if (m[r][k] != Rational(0)) return std::nullopt;
  }
  std::vector<Rational> lambda(k);
  for (std::size_t c = 0; c < k; ++c) lambda[c] = m[c][k] / m[c][c];
  return lambda;
}

bool hull_oracle(const LatticeSet& s, const HalfPoint& x) {
  std::vector<Point> local;
  for (const Point& p : neighborhood(x).points) {
    if (s.contains(p)) local.push_back(p);
  }
  const std::size_t m = local.size();
  const std::size_t max_k = x.dim() + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Point> cols;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask >> b & 1) cols.push_back(local[b]);
    }
    if (cols.size() > max_k) continue;
    auto lambda = barycentric(cols, x);
    if (!lambda) continue;
    bool nonneg = true;
    for (const Rational& l : *lambda) nonneg = nonneg && l >= Rational(0);
    if (nonneg) return true;
  }
  return false;
}

bool lnat_fn_oracle(const LatticeFn& f) {
  std::vector<Point> pts = dom_points(f);
  for (const Point& p : pts) {
    for (const Point& q : pts) {
      Coord span = (p - q).norm_inf() + 1;
      for (Coord a = 0; a <= span; ++a) {
        auto [join, unused_meet] = join_meet(p.shifted(-a), q);
        auto [unused_join, meet] = join_meet(p, q.shifted(a));
        if (!ge(f(p) + f(q), f(join) + f(meet))) return false;
      }
    }
  }
  return true;
}

namespace {

bool exchange_oracle(const LatticeFn& f, bool allow_none) {
  std::vector<Point> pts = dom_points(f);
  const std::size_t n = f.dim();
  for (const Point& x : pts) {
    for (const Point& y : pts) {
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        Point ei = Point::unit(n, i);
        bool found = false;
        if (allow_none) found = ge(f(x) + f(y), f(x - ei) + f(y + ei));
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (x[j] >= y[j]) continue;
          Point ej = Point::unit(n, j);
          found = ge(f(x) + f(y), f(x - ei + ej) + f(y + ei - ej));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool mnat_fn_oracle(const LatticeFn& f) { return exchange_oracle(f, true); }

bool m_fn_oracle(const LatticeFn& f) {
  std::vector<Point> pts = dom_points(f);
  for (const Point& p : pts) {
    if (p.sum() != pts.front().sum()) return false;
  }
  return exchange_oracle(f, false);
}

bool separable_fn_oracle(const LatticeFn& f) {
  std::vector<Point> pts = dom_points(f);
  Window box = Window::bounding(pts);
  if (box.volume() != pts.size()) return false;
  const Point& base = box.lo();
  const Rational f0 = f(base);
  const std::size_t n = f.dim();
  std::vector<std::vector<Rational>> phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Coord t = box.lo()[i]; t <= box.hi()[i]; ++t) {
      Point p = base;
      p[i] = t;
      phi[i].push_back(f(p) - f0);
    }
    for (std::size_t t = 1; t + 1 < phi[i].size(); ++t) {
      if (phi[i][t - 1] + phi[i][t + 1] < Rational(2) * phi[i][t]) return false;
    }
  }
  for (const Point& p : pts) {
    Rational v = f0;
    for (std::size_t i = 0; i < n; ++i) v += phi[i][static_cast<std::size_t>(p[i] - box.lo()[i])];
    if (v != f(p)) return false;
  }
  return true;
}

LatticeSet argmin_oracle(const LatticeFn& f, const std::vector<Rational>& c) {
  Rational best = Rational::infinity();
  std::vector<Point> pts;
  for (const FnEntry& e : f.entries()) {
    Rational v = e.value - dot(c, e.x);
    if (v < best) {
      best = v;
      pts.clear();
    }
    if (v == best) pts.push_back(e.x);
  }
  return LatticeSet(f.dim(), pts);
}

Rational laminar_tree_value(const Point& y) {
  Coord a = y[0] + y[1] + y[2];
  Coord b = y[0] + y[1];
  return Rational(a < 0 ? -a : a) + Rational(b * b) + Rational(y[2] * y[2]);
}

LatticeSet random_subset(Rng& rng, const Window& w, std::uint64_t num, std::uint64_t den) {
  std::vector<Point> all = w.points();
  std::vector<Point> kept;
  for (const Point& p : all) {
    if (rng.chance(num, den)) kept.push_back(p);
  }
  if (kept.empty()) kept.push_back(rng.pick(all));
  return LatticeSet(w.dim(), kept);
}

LatticeFn random_function(Rng& rng, const Window& w, std::uint64_t num, std::uint64_t den, Coord lo,
                          Coord hi) {
  std::vector<FnEntry> entries;
  LatticeSet dom = random_subset(rng, w, num, den);
  for (const Point& p : dom.points()) entries.push_back({p, rng.uniform(lo, hi)});
  return LatticeFn(w.dim(), entries);
}

HalfPoint random_half_point(Rng& rng, const Window& w) {
  Point d(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) d[i] = rng.uniform(2 * w.lo()[i], 2 * w.hi()[i]);
  return HalfPoint(d);
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(DCONV_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace dconv::testing
