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

#ifndef DCONV_LAB_HPP_
#define DCONV_LAB_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dconv/classes.hpp"
#include "dconv/lattice.hpp"
#include "dconv/network.hpp"
#include "dconv/point.hpp"
#include "dconv/rational.hpp"

namespace dconv {

using Instance = std::variant<LatticeSet, LatticeFn>;

// ---------------------------------------------------------------------------
// Generators

/// Univariate piece on [lo, hi]; values[t - lo] = phi(t).
struct Univariate {
  Coord lo = 0;
  Coord hi = 0;
  std::vector<Rational> values;

  [[nodiscard]] bool contains(Coord t) const { return lo <= t && t <= hi; }
  [[nodiscard]] Rational at(Coord t) const;
  /// Second differences nonnegative.
  [[nodiscard]] bool is_convex() const;
};

/// Term phi(x(subset)) of a laminar convex function.
struct LaminarTerm {
  std::vector<std::size_t> subset;
  Univariate phi;
};

/// Term phi(x_i - x_j) of a 2-separable convex function.
struct DiffTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  Univariate phi;
};

/// Edge of an undirected graph on vertices 0..n-1; u == v is a self-loop,
/// which adds 2 to the degree of u.
struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;
};

struct GeneratorConfig {
  ClassLabel label = ClassLabel::IntegerBox;
  std::size_t dim = 2;
  /// Sampling box. Multimodular instances are images Dp of points p drawn
  /// from it; lifted instances use it for the representatives.
  Window window = Window::cube(2, -3, 3);
  std::uint64_t seed = 0;
  /// Largest domain size (representatives for lifted instances).
  std::size_t max_points = 150;
  /// Rejection-sampling attempts before giving up.
  std::size_t budget = 2000;
  /// Jump M-convex instances only: restrict to {0,1}^n (matching systems).
  bool binary = false;

  // Structural parameters. When any is given the instance is built from it
  // directly instead of being drawn from the seed.
  std::vector<LaminarTerm> laminar;
  std::vector<Univariate> separable;
  std::vector<DiffTerm> diff;
  std::vector<GraphEdge> graph;
};

/// A set for set labels, a function for function labels. Every instance is
/// checked by the recognizer of its label before it is returned. Throws
/// Error when the rejection budget runs out.
Instance generate(const GeneratorConfig& config);
LatticeSet generate_set(const GeneratorConfig& config);
LatticeFn generate_fn(const GeneratorConfig& config);

/// sum over terms of phi_A(x(A)) on the points of w where every term is finite.
/// Throws EmptyResultError if there are none.
LatticeFn laminar_convex_fn(std::size_t dim, const std::vector<LaminarTerm>& terms, const Window& w);
/// sum phi_i(x_i) + sum phi_ij(x_i - x_j) on the points of w where finite.
/// An empty `separable` means no single-variable terms.
LatticeFn diff_convex_fn(std::size_t dim, const std::vector<Univariate>& separable,
                         const std::vector<DiffTerm>& diff, const Window& w);
/// f(x) = minimum weight of an edge subset with degree sequence x.
LatticeFn degree_system_fn(std::size_t dim, const std::vector<GraphEdge>& edges);
/// Degree sequences of subsets of a matching: f(x) = minimum weight of a
/// matching covering exactly the vertices with x_v = 1. Loops are ignored.
LatticeFn matching_fn(std::size_t dim, const std::vector<GraphEdge>& edges);

// ---------------------------------------------------------------------------
// Counterexample registry

enum class Operation { DirectSum, Splitting, Aggregation, NetworkInduction };

std::string_view operation_name(Operation op);
std::optional<Operation> parse_operation(std::string_view name);

struct RecordCheck {
  std::string what;
  bool ok = false;
};

struct RecordReport {
  std::string id;
  bool passed = false;
  std::vector<RecordCheck> checks;
};

struct CounterexampleRecord {
  std::string id;
  std::string title;
  /// "argmin" or an operation name.
  std::string operation;
  std::vector<Instance> inputs;
  /// Labels for which the output is expected to be a non-member.
  std::vector<ClassLabel> negative;
  /// The documented violating tuple, when the record has one.
  std::optional<Witness> witness;
  std::function<RecordReport()> replay;
};

const std::vector<CounterexampleRecord>& counterexample_registry();
/// nullptr for unknown ids.
const CounterexampleRecord* find_record(std::string_view id);
/// Replays one record; an exception becomes a failed check.
RecordReport replay_record(const CounterexampleRecord& rec);
/// Replays every record.
std::vector<RecordReport> run_counterexamples();

// ---------------------------------------------------------------------------
// Closure matrix

struct ClosureCell {
  ClassLabel label = ClassLabel::IntegerBox;
  Operation op = Operation::DirectSum;
  bool expected = true;
  /// Record ids for N cells, "randomized trials" for Y cells.
  std::string citation;

  std::size_t trials = 0;
  std::size_t passed = 0;
  /// Verdict reproduced: Y cells passed every trial, N cells had every cited
  /// record replay with the label among its negatives.
  bool observed = false;
  /// First failing instance, serialized for replay.
  std::string failure;

  [[nodiscard]] bool ok() const { return observed == expected; }
};

/// Expected grid in table order: set rows, then function rows, four
/// operations each. Result fields are left empty.
std::vector<ClosureCell> closure_grid();

struct ClosureReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t max_dim = 0;
  std::vector<ClosureCell> cells;

  [[nodiscard]] bool ok() const;
  /// The two tables with Y/N and per-cell pass counts.
  [[nodiscard]] std::string render() const;
};

/// Runs `trials` random instances per Y cell and the cited records per N
/// cell. Instances have dimension at most max_dim (at least 2).
ClosureReport closure_matrix(std::size_t trials, std::uint64_t seed, std::size_t max_dim);

/// Runs the trials of a single cell; used by closure_matrix and the tests.
void run_cell(ClosureCell& cell, std::size_t trials, std::uint64_t seed, std::size_t max_dim);

}  // namespace dconv

#endif  // DCONV_LAB_HPP_
