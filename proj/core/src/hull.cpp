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

#include "dconv/hull.hpp"

#include <sstream>

#include "dconv/error.hpp"

namespace dconv {

namespace {

Coord floor_div2(Coord v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// Dense simplex tableau: rows_[i] holds row i of [A | rhs], basis_[i] the
// column basic in row i.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis,
          std::size_t cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

  // Minimizes cost over the columns [0, usable) starting from the current
  // basis. Bland's rule: entering column is the lowest index with negative
  // reduced cost; leaving row breaks ratio ties by lowest basic index.
  void optimize(const std::vector<Rational>& cost, std::size_t usable) {
    while (true) {
      std::size_t enter = usable;
      for (std::size_t j = 0; j < usable; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (rows_[i][j] != Rational(0)) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (reduced < Rational(0)) {
          enter = j;
          break;
        }
      }
      if (enter == usable) return;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= Rational(0)) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) throw ArithmeticError("linear program is unbounded");
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (Rational& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == Rational(0)) continue;
      Rational k = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[r][j] != Rational(0)) rows_[i][j] -= k * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Pivots artificial columns (index >= first_artificial) out of the basis;
  // rows where that is impossible are redundant and dropped.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t c = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (rows_[i][j] != Rational(0)) {
          c = j;
          break;
        }
      }
      if (c == first_artificial) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, c);
      ++i;
    }
  }

  [[nodiscard]] std::vector<Rational> solution(std::size_t n) const {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

bool HalfPoint::is_integral() const {
  for (Coord c : doubled_) {
    if (c % 2 != 0) return false;
  }
  return true;
}

Point HalfPoint::floor() const {
  Point p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = floor_div2(doubled_[i]);
  return p;
}

Point HalfPoint::ceil() const {
  Point p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = -floor_div2(-doubled_[i]);
  return p;
}

std::string HalfPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ',';
    if (is_half(i)) {
      os << doubled_[i] << "/2";
    } else {
      os << doubled_[i] / 2;
    }
  }
  os << ')';
  return os.str();
}

IntegralNeighborhood neighborhood(const HalfPoint& x) {
  return {x, Window(x.floor(), x.ceil()).points()};
}

std::optional<LpSolution> minimize_standard_form(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b,
                                                 const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw DimensionError("right-hand side length does not match the rows");
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw DimensionError("constraint row length does not match the cost");
    // Flip rows with negative rhs so the artificial basis is feasible.
    Rational sign = b[i] < Rational(0) ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = sign * a[i][j];
    rows[i][n + i] = 1;
    rows[i][cols] = sign * b[i];
    basis[i] = n + i;
  }
  Tableau t(std::move(rows), std::move(basis), cols);

  std::vector<Rational> phase1(cols);
  for (std::size_t j = n; j < cols; ++j) phase1[j] = 1;
  t.optimize(phase1, cols);
  std::vector<Rational> all = t.solution(cols);
  for (std::size_t j = n; j < cols; ++j) {
    if (all[j] != Rational(0)) return std::nullopt;
  }
  t.expel_artificials(n);

  std::vector<Rational> phase2(cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.optimize(phase2, n);
  LpSolution sol{Rational(0), t.solution(n)};
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.x[j] != Rational(0)) sol.value += c[j] * sol.x[j];
  }
  return sol;
}

namespace {

// min sum lambda_v cost_v over convex combinations of `support` equal to x.
// Only half-integral coordinates give constraints: every v in N(x) has
// v_i = x_i on the others.
std::optional<LpSolution> local_lp(const std::vector<Point>& support,
                                   const std::vector<Rational>& cost, const HalfPoint& x) {
  if (support.empty()) return std::nullopt;
  std::vector<std::size_t> half;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x.is_half(i)) half.push_back(i);
  }
  const Point hi = x.ceil();
  std::vector<std::vector<Rational>> a(half.size() + 1, std::vector<Rational>(support.size()));
  std::vector<Rational> b(half.size() + 1);
  for (std::size_t k = 0; k < support.size(); ++k) a[0][k] = 1;
  b[0] = 1;
  for (std::size_t r = 0; r < half.size(); ++r) {
    for (std::size_t k = 0; k < support.size(); ++k) {
      a[r + 1][k] = support[k][half[r]] == hi[half[r]] ? 1 : 0;
    }
    b[r + 1] = Rational(1, 2);
  }
  return minimize_standard_form(a, b, cost);
}

}  // namespace

bool in_local_hull(const LatticeSet& s, const HalfPoint& x) {
  if (s.lift_ones()) throw InputError("in_local_hull does not accept lifted sets");
  if (x.dim() != s.dim()) throw DimensionError("half point dimension does not match the set");
  std::vector<Point> support;
  for (const Point& z : neighborhood(x).points) {
    if (s.contains(z)) support.push_back(z);
  }
  return local_lp(support, std::vector<Rational>(support.size()), x).has_value();
}

Rational local_extension_value(const LatticeFn& f, const HalfPoint& x) {
  if (f.lift_ones()) throw InputError("local_extension_value does not accept lifted functions");
  if (x.dim() != f.dim()) throw DimensionError("half point dimension does not match the function");
  std::vector<Point> support;
  std::vector<Rational> cost;
  for (const Point& z : neighborhood(x).points) {
    Rational v = f.value(z);
    if (v.is_finite()) {
      support.push_back(z);
      cost.push_back(v);
    }
  }
  auto sol = local_lp(support, cost, x);
  return sol ? sol->value : Rational::infinity();
}

}  // namespace dconv
