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

#ifndef DCONV_CLASSES_HPP_
#define DCONV_CLASSES_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dconv/lattice.hpp"
#include "dconv/point.hpp"
#include "dconv/rational.hpp"

namespace dconv {

enum class ClassLabel {
  IntegerBox,
  SeparableConvex,
  IntegrallyConvexSet,
  IntegrallyConvexFn,
  LNatSet,
  LNatFn,
  LSet,
  LFn,
  MNatSet,
  MNatFn,
  MSet,
  MFn,
  MultimodularSet,
  MultimodularFn,
  GlobalDMCSet,
  GlobalDMCFn,
  LocalDMCFn,
  JumpSystem,
  ConstParityJump,
  SimultExchJump,
  JumpMFn,
  JumpMNatFn,
};

/// Every label, in declaration order.
std::span<const ClassLabel> all_labels();
bool is_set_label(ClassLabel label);
/// Kebab-case name used on the command line, e.g. "lnat-set".
std::string_view label_name(ClassLabel label);
std::optional<ClassLabel> parse_label(std::string_view name);

enum class WitnessKind {
  /// x lies in the bounding box of the domain but not in the domain.
  MissingPoint,
  /// A pair (x, y) violating a symmetric two-point inequality.
  Pair,
  /// (x, y, i): no exchange partner j works for i in supp+(x - y).
  Exchange,
  /// (x, y, s): no (x + s, y)-increment t works for the (x, y)-increment s.
  Jump,
  /// x in the domain with x + 1 outside it.
  Shift,
  /// (x, i, j): f(x + e_i + e_j) + f(x) != f(x + e_i) + f(x + e_j).
  SquareModularity,
  /// (x, i): f(x - e_i) + f(x + e_i) < 2 f(x).
  AxisConvexity,
};

std::string_view witness_kind_name(WitnessKind kind);
std::optional<WitnessKind> parse_witness_kind(std::string_view name);

/// Violating tuple; which fields are meaningful depends on `kind`.
/// Indices are 0-based.
struct Witness {
  WitnessKind kind = WitnessKind::Pair;
  Point x;
  Point y;
  Point s;
  std::size_t i = 0;
  std::size_t j = 0;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool member = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return member; }
};

/// Decides membership of a finite set (lifted only for LSet). On failure the
/// witness is the first violating tuple in the order: smaller |x - y|_inf,
/// then smaller |x - y|_1, then lexicographic (x, y), then index/increment.
Verdict check_set(const LatticeSet& s, ClassLabel label);
/// Same for functions (lifted only for LFn).
Verdict check_fn(const LatticeFn& f, ClassLabel label);

/// Re-checks a single witness tuple against the axiom of `label`.
bool violates(const LatticeSet& s, ClassLabel label, const Witness& w);
bool violates(const LatticeFn& f, ClassLabel label, const Witness& w);

/// Minimizers of f(x) - c.x over dom f. For lifted f the sum of c must equal
/// the ramp (otherwise f[-c] is unbounded below) and the result is lifted.
LatticeSet argmin_perturbed(const LatticeFn& f, std::span<const Rational> c);

/// Computes a_I = min x(I), b_I = max x(I) over s for every consecutive
/// interval I and tests whether s is exactly the set of points of w that
/// satisfy all of these bounds. Requires s inside w.
bool multimodular_polyhedral_check(const LatticeSet& s, const Window& w);

/// f~(x0, x) = f(x) if x0 = -x(N), +inf otherwise (x0 first).
LatticeFn m_lift(const LatticeFn& f);
LatticeSet m_lift(const LatticeSet& s);
/// f~(x0, x) = f(x) if x0 = parity of x(N), +inf otherwise (x0 first).
LatticeFn parity_lift(const LatticeFn& f);
LatticeSet parity_lift(const LatticeSet& s);

/// (x, y)-increments: s = sign(y_k - x_k) e_k for each k with x_k != y_k.
std::vector<Point> increments(const Point& x, const Point& y);

}  // namespace dconv

#endif  // DCONV_CLASSES_HPP_
