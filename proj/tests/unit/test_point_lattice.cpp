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


#include <gtest/gtest.h>

#include "dconv/error.hpp"
#include "dconv/lattice.hpp"
#include "dconv/point.hpp"

namespace dconv {
namespace {

TEST(Point, ArithmeticAndNorms) {
  Point x{1, -2, 3};
  Point y{0, 2, 1};
  EXPECT_EQ(x + y, (Point{1, 0, 4}));
  EXPECT_EQ(x - y, (Point{1, -4, 2}));
  EXPECT_EQ(2 * x, (Point{2, -4, 6}));
  EXPECT_EQ(x.shifted(1), (Point{2, -1, 4}));
  EXPECT_EQ((x - y).norm_inf(), 4);
  EXPECT_EQ((x - y).norm_1(), 7);
  EXPECT_EQ(x.sum(), 2);
  EXPECT_EQ(x.concat(y).dim(), 6u);
  EXPECT_EQ(x.concat(y).slice(3, 3), y);
  EXPECT_THROW(require_same_dim(x, Point{1, 2}), DimensionError);
}

TEST(Point, MidpointRounding) {
  auto [up, down] = midpoint_round(Point{0, 1, 1}, Point{1, 1, 0});
  EXPECT_EQ(up, (Point{1, 1, 1}));
  EXPECT_EQ(down, (Point{0, 1, 0}));
  auto [up2, down2] = midpoint_round(Point{-1, -3}, Point{0, 0});
  EXPECT_EQ(up2, (Point{0, -1}));
  EXPECT_EQ(down2, (Point{-1, -2}));
}

TEST(Point, JoinMeetAndSupports) {
  auto [j, m] = join_meet(Point{1, 0, 2}, Point{0, 3, 2});
  EXPECT_EQ(j, (Point{1, 3, 2}));
  EXPECT_EQ(m, (Point{0, 0, 2}));
  Supports s = supports(Point{2, 0, -1, 1});
  EXPECT_EQ(s.plus, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(s.minus, (std::vector<std::size_t>{2}));
}

TEST(Window, PointsInLexicographicOrder) {
  Window w(Point{0, -1}, Point{1, 0});
  EXPECT_EQ(w.volume(), 4u);
  std::vector<Point> expected = {Point{0, -1}, Point{0, 0}, Point{1, -1}, Point{1, 0}};
  EXPECT_EQ(w.points(), expected);
  EXPECT_TRUE(w.contains(Point{1, 0}));
  EXPECT_FALSE(w.contains(Point{2, 0}));
  EXPECT_THROW(Window(Point{1}, Point{0}), InputError);
  EXPECT_EQ(Window::bounding(expected), w);
}

TEST(LatticeSet, SortsAndDeduplicates) {
  LatticeSet s(2, {Point{1, 1}, Point{0, 0}, Point{1, 1}});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.points().front(), (Point{0, 0}));
  EXPECT_TRUE(s.contains(Point{1, 1}));
  EXPECT_FALSE(s.contains(Point{1, 0}));
  EXPECT_THROW(LatticeSet(2, {Point{1, 2, 3}}), DimensionError);
}

TEST(LatticeSet, LiftedRepresentatives) {
  LatticeSet s(2, {Point{3, 5}, Point{1, 0}}, true);
  EXPECT_EQ(s.points(), (std::vector<Point>{Point{-2, 0}, Point{1, 0}}));
  EXPECT_TRUE(s.contains(Point{0, 2}));
  EXPECT_TRUE(s.contains(Point{4, 3}));
  EXPECT_FALSE(s.contains(Point{0, 0}));
  LatticeSet cut = restrict_to_window(s, Window::cube(2, -1, 1));
  EXPECT_FALSE(cut.lift_ones());
  EXPECT_EQ(cut.points(), (std::vector<Point>{Point{-1, 1}, Point{0, -1}, Point{1, 0}}));
}

TEST(LatticeFn, ValuesAndLiftedRamp) {
  LatticeFn f(2, {{Point{0, 0}, Rational(1)}, {Point{1, 0}, Rational(3, 2)}}, true, Rational(2));
  EXPECT_EQ(f(Point{0, 0}), Rational(1));
  EXPECT_EQ(f(Point{2, 2}), Rational(5));
  EXPECT_EQ(f(Point{0, -1}), Rational(-1, 2));
  EXPECT_TRUE(f(Point{0, 1}).is_infinite());
  EXPECT_TRUE(f.dom().lift_ones());
  LatticeFn g = restrict_to_window(f, Window::cube(2, 0, 1));
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g(Point{1, 1}), Rational(3));
}

TEST(LatticeFn, IndicatorAndDomain) {
  LatticeSet s(2, {Point{0, 0}, Point{1, 1}});
  LatticeFn f = LatticeFn::indicator(s);
  EXPECT_TRUE(f.is_indicator());
  EXPECT_EQ(f.dom(), s);
  EXPECT_EQ(f(Point{1, 1}), Rational(0));
  EXPECT_THROW(restrict_to_window(f, Window::cube(2, 5, 6)), EmptyResultError);
}

TEST(LatticeFn, DTransformRoundTrip) {
  Point p{1, -2, 4};
  EXPECT_EQ(d_apply(p), (Point{1, -3, 6}));
  EXPECT_EQ(d_inverse_apply(d_apply(p)), p);
  LatticeFn f(3, {{p, Rational(2)}, {Point{0, 0, 0}, Rational(1)}});
  EXPECT_EQ(d_inverse_transform(d_transform(f)), f);
  EXPECT_EQ(d_transform(f)(d_inverse_apply(p)), Rational(2));
}

}  // namespace
}  // namespace dconv
