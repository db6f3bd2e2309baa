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

#ifndef DCONV_OPS_HPP_
#define DCONV_OPS_HPP_

#include <cstddef>
#include <vector>

#include "dconv/lattice.hpp"
#include "dconv/point.hpp"

namespace dconv {

/// Splitting pattern: coordinate i of the input becomes `blocks[i]`
/// consecutive output coordinates whose sum recovers it.
struct SplitSpec {
  std::vector<std::size_t> blocks;

  [[nodiscard]] std::size_t input_dim() const { return blocks.size(); }
  [[nodiscard]] std::size_t output_dim() const;
  /// Throws unless every block is positive and there is one per input coordinate.
  void validate(std::size_t n) const;
  /// Splits coordinate k in two, leaving the others alone.
  static SplitSpec elementary(std::size_t n, std::size_t k);
  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

/// Partition of {0, ..., n-1} into nonempty groups; output coordinate j is
/// the sum over groups[j].
struct PartitionSpec {
  std::vector<std::vector<std::size_t>> groups;

  [[nodiscard]] std::size_t output_dim() const { return groups.size(); }
  /// Throws unless the groups partition {0, ..., n-1}.
  void validate(std::size_t n) const;
  /// Merges coordinates k and k + 1 (groups otherwise singletons).
  static PartitionSpec elementary(std::size_t n, std::size_t k);
  /// Groups {i, n + i} for i < n: aggregation of a direct sum to a sum.
  static PartitionSpec pairing(std::size_t n);
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// Concatenations (x, y). Lifted inputs throw (window them first).
LatticeSet direct_sum_set(const LatticeSet& s1, const LatticeSet& s2);
LatticeFn direct_sum_fn(const LatticeFn& f1, const LatticeFn& f2);

/// All y in w whose block sums lie in the domain. Lifted inputs are allowed
/// (membership is tested on the block sums). Throws EmptyResultError if the
/// window holds no such point.
LatticeSet split_set(const LatticeSet& s, const SplitSpec& spec, const Window& w);
LatticeFn split_fn(const LatticeFn& f, const SplitSpec& spec, const Window& w);

/// Image under the group sums; fiber minimum for functions.
LatticeSet aggregate_set(const LatticeSet& s, const PartitionSpec& spec);
LatticeFn aggregate_fn(const LatticeFn& f, const PartitionSpec& spec);

/// S1 + S2 computed pairwise. Two lifted sets give the lifted sum of their
/// representatives.
LatticeSet minkowski_sum_set(const LatticeSet& s1, const LatticeSet& s2);
/// The same, as the pairing aggregation of the direct sum.
LatticeSet minkowski_sum_via_aggregation(const LatticeSet& s1, const LatticeSet& s2);
/// Infimal convolution computed pairwise.
LatticeFn convolution_fn(const LatticeFn& f1, const LatticeFn& f2);
LatticeFn convolution_via_aggregation(const LatticeFn& f1, const LatticeFn& f2);

/// Coordinate map of a split: output index -> input index it sums into.
std::vector<std::size_t> split_owner(const SplitSpec& spec);

}  // namespace dconv

#endif  // DCONV_OPS_HPP_
