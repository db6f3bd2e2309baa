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


// Test-only reference implementations. They trade speed for directness and
// share no code with the library beyond the value types.

#ifndef DCONV_TESTS_ORACLES_HPP_
#define DCONV_TESTS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dconv/classes.hpp"
#include "dconv/hull.hpp"
#include "dconv/lattice.hpp"
#include "dconv/point.hpp"
#include "dconv/rational.hpp"
#include "dconv/rng.hpp"

namespace dconv::testing {

/// x in conv(S n N(x)) by enumerating every subset of at most n + 1 points
/// with affinely independent columns and solving for the (unique)
/// coefficients.
bool hull_oracle(const LatticeSet& s, const HalfPoint& x);

/// Coefficients lambda with sum lambda_k = 1 and sum lambda_k cols[k] = x,
/// when the columns are affinely independent and a solution exists.
std::optional<std::vector<Rational>> barycentric(const std::vector<Point>& cols, const HalfPoint& x);

/// f(p) + f(q) >= f((p - a1) v q) + f(p ^ (q + a1)) for all p, q and a >= 0.
bool lnat_fn_oracle(const LatticeFn& f);
/// Exchange axiom written out over all pairs, with j = none allowed.
bool mnat_fn_oracle(const LatticeFn& f);
/// Same with j = none forbidden, plus constant coordinate sum.
bool m_fn_oracle(const LatticeFn& f);
/// dom f is a box and f is separable convex, checked by fitting
/// f(x) = sum_i phi_i(x_i) and testing each phi_i.
bool separable_fn_oracle(const LatticeFn& f);

/// Minimizers of f - c.x by scanning every entry.
LatticeSet argmin_oracle(const LatticeFn& f, const std::vector<Rational>& c);

/// |y1 + y2 + y3| + (y1 + y2)^2 + y3^2.
Rational laminar_tree_value(const Point& y);

/// Random subset of w, each point kept with probability num / den.
LatticeSet random_subset(Rng& rng, const Window& w, std::uint64_t num, std::uint64_t den);
/// Random function on a random subset of w with integer values in [lo, hi].
LatticeFn random_function(Rng& rng, const Window& w, std::uint64_t num, std::uint64_t den, Coord lo,
                          Coord hi);
/// Random half-integral point of w.
HalfPoint random_half_point(Rng& rng, const Window& w);

/// Contents of a file under tests/data.
std::string read_data(const std::string& name);

}  // namespace dconv::testing

#endif  // DCONV_TESTS_ORACLES_HPP_
