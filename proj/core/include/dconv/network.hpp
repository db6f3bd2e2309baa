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

#ifndef DCONV_NETWORK_HPP_
#define DCONV_NETWORK_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dconv/lattice.hpp"
#include "dconv/ops.hpp"
#include "dconv/point.hpp"
#include "dconv/rational.hpp"

namespace dconv {

/// Largest arc count and capacity width (upper - lower) a network may have.
/// The enumerator is exhaustive, so these keep it tractable.
inline constexpr std::size_t kMaxArcs = 12;
inline constexpr Coord kMaxCapacityWidth = 12;

/// Univariate convex arc cost on [lower, upper]; an empty table is the zero cost.
class ArcCost {
 public:
  ArcCost() = default;
  static ArcCost zero() { return {}; }
  /// Values at lower, lower + 1, ..., upper.
  static ArcCost table(std::vector<Rational> values);

  [[nodiscard]] bool is_zero() const { return values_.empty(); }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const ArcCost&, const ArcCost&) = default;

 private:
  std::vector<Rational> values_;
};

struct Arc {
  std::string tail;
  std::string head;
  Coord lower = 0;
  Coord upper = 0;
  ArcCost cost;

  /// Cost of flow t (lower <= t <= upper).
  [[nodiscard]] Rational cost_at(Coord t) const;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed graph with entrance set U and exit set W. Validated on
/// construction: ids unique, U and W disjoint, capacities finite with
/// lower <= upper and width <= kMaxCapacityWidth, at most kMaxArcs arcs,
/// cost tables of the right length and discretely convex.
class Network {
 public:
  Network() = default;
  Network(std::vector<std::string> vertices, std::vector<Arc> arcs, std::vector<std::string> entrance,
          std::vector<std::string> exit);

  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
  [[nodiscard]] const std::vector<std::string>& entrance() const { return entrance_; }
  [[nodiscard]] const std::vector<std::string>& exit() const { return exit_; }
  /// Position of a vertex id in vertices(); throws for unknown ids.
  [[nodiscard]] std::size_t index_of(const std::string& id) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::string> entrance_;
  std::vector<std::string> exit_;
};

/// Integral flow, one value per arc in network order.
struct Flow {
  std::vector<Coord> values;
};

/// Net supply (flow out minus flow in) restricted to U and to W.
std::pair<Point, Point> boundary(const Flow& flow, const Network& net);

/// {y : some feasible flow has boundary in S on U and -y on W}, by exhaustive
/// enumeration. May be empty.
LatticeSet transform_set(const LatticeSet& s, const Network& net);

/// g(y) = min f(x) + sum of arc costs over feasible (x, flow) with boundary x
/// on U and -y on W. Throws EmptyResultError if no y is reachable.
LatticeFn induce_fn(const LatticeFn& f, const Network& net);

/// Bipartite network realizing split_set(., spec, w): input i feeds the
/// exits of its block through arcs with the window as capacity.
Network split_network(const SplitSpec& spec, const Window& w);
/// Bipartite network realizing aggregate_set for inputs inside `box`.
Network aggregation_network(const PartitionSpec& spec, const Window& box);

}  // namespace dconv

#endif  // DCONV_NETWORK_HPP_
