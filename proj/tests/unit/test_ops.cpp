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
#include "dconv/ops.hpp"
#include "dconv/rng.hpp"
#include "oracles.hpp"

namespace dconv {
namespace {

TEST(Specs, Validation) {
  EXPECT_THROW((SplitSpec{{1, 0}}.validate(2)), InputError);
  EXPECT_THROW(SplitSpec{{1}}.validate(2), DimensionError);
  EXPECT_EQ(SplitSpec::elementary(3, 1).blocks, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(split_owner(SplitSpec{{2, 1}}), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_THROW((PartitionSpec{{{0}, {0, 1}}}).validate(2), InputError);
  EXPECT_THROW((PartitionSpec{{{0}}}).validate(2), InputError);
  EXPECT_THROW((PartitionSpec{{{0, 2}}}).validate(2), InputError);
  EXPECT_EQ(PartitionSpec::elementary(3, 1).groups, (std::vector<std::vector<std::size_t>>{{0}, {1, 2}}));
  EXPECT_EQ(PartitionSpec::pairing(2).groups, (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}));
}

TEST(DirectSum, Concatenates) {
  LatticeSet a(1, {Point{0}, Point{1}});
  LatticeSet b(2, {Point{5, 5}});
  LatticeSet s = direct_sum_set(a, b);
  EXPECT_EQ(s.points(), (std::vector<Point>{Point{0, 5, 5}, Point{1, 5, 5}}));
  LatticeFn f(1, {{Point{0}, 1}, {Point{1}, 2}});
  LatticeFn g(1, {{Point{3}, Rational(1, 2)}});
  EXPECT_EQ(direct_sum_fn(f, g)(Point{1, 3}), Rational(5, 2));
  EXPECT_THROW(direct_sum_set(LatticeSet(1, {Point{0}}, true), a), InputError);
}

TEST(Split, AllOnesIsIdentity) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    Window w = Window::cube(3, -1, 2);
    LatticeSet s = testing::random_subset(rng, w, 1, 2);
    EXPECT_EQ(split_set(s, SplitSpec{{1, 1, 1}}, w), s);
  }
}

TEST(Split, MatchesBruteForce) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    LatticeFn f = testing::random_function(rng, Window::cube(2, -2, 2), 1, 2, -3, 3);
    SplitSpec spec{{2, 1}};
    Window w = Window::cube(3, -2, 1);
    LatticeFn g = split_fn(f, spec, w);
    w.for_each([&](const Point& y) { EXPECT_EQ(g(y), f(Point{y[0] + y[1], y[2]})); });
  }
  EXPECT_THROW(split_set(LatticeSet(1, {Point{10}}), SplitSpec{{2}}, Window::cube(2, 0, 1)), EmptyResultError);
  EXPECT_THROW(split_set(LatticeSet(1, {Point{0}}), SplitSpec{{2}}, Window::cube(3, 0, 1)), DimensionError);
}

TEST(Split, LiftedInputsAreAllowed) {
  LatticeSet diag(2, {Point{0, 0}}, true);
  LatticeSet s = split_set(diag, SplitSpec{{2, 1}}, Window::cube(3, -1, 1));
  for (const Point& y : s.points()) EXPECT_EQ(y[0] + y[1], y[2]);
  EXPECT_EQ(s.size(), 7u);
}

TEST(Aggregate, IntegrallyConvexImage) {
  LatticeSet s(4, {Point{0, 0, 1, 0}, Point{0, 0, 0, 1}, Point{1, 1, 1, 0}, Point{1, 1, 0, 1}});
  LatticeSet t = aggregate_set(s, PartitionSpec{{{0, 2}, {1, 3}}});
  EXPECT_EQ(t, LatticeSet(2, {Point{1, 0}, Point{0, 1}, Point{2, 1}, Point{1, 2}}));
}

TEST(Aggregate, FunctionTakesFiberMinimum) {
  LatticeFn f(2, {{Point{0, 1}, 3}, {Point{1, 0}, 1}, {Point{1, 1}, 0}});
  LatticeFn g = aggregate_fn(f, PartitionSpec{{{0, 1}}});
  EXPECT_EQ(g(Point{1}), Rational(1));
  EXPECT_EQ(g(Point{2}), Rational(0));
  EXPECT_TRUE(g(Point{0}).is_infinite());
}

TEST(Composition, SumsFactorThroughAggregation) {
  Rng rng(9);
  for (int k = 0; k < 30; ++k) {
    std::size_t n = 1 + rng.index(3);
    Window w = Window::cube(n, -1, 1);
    LatticeSet a = testing::random_subset(rng, w, 1, 3);
    LatticeSet b = testing::random_subset(rng, w, 1, 3);
    EXPECT_EQ(minkowski_sum_set(a, b), minkowski_sum_via_aggregation(a, b));
    LatticeFn f = testing::random_function(rng, w, 1, 2, -3, 3);
    LatticeFn g = testing::random_function(rng, w, 1, 2, -3, 3);
    EXPECT_EQ(convolution_fn(f, g), convolution_via_aggregation(f, g));
    EXPECT_EQ(convolution_fn(LatticeFn::indicator(a), LatticeFn::indicator(b)),
              LatticeFn::indicator(minkowski_sum_set(a, b)));
  }
}

TEST(Minkowski, LiftedOperands) {
  LatticeSet a(2, {Point{0, 0}, Point{1, 0}}, true);
  LatticeSet b(2, {Point{0, 0}, Point{0, 1}}, true);
  LatticeSet s = minkowski_sum_set(a, b);
  EXPECT_TRUE(s.lift_ones());
  EXPECT_EQ(s.points(), (std::vector<Point>{Point{-1, 0}, Point{0, 0}, Point{1, 0}}));
  EXPECT_THROW(minkowski_sum_set(a, LatticeSet(2, {Point{0, 0}})), InputError);
}

}  // namespace
}  // namespace dconv
