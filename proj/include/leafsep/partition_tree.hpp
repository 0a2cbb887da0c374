// Copyright 2026 The leafsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "leafsep/bitstring.hpp"

namespace leafsep {

/// Per-leaf Hamming weights, in left-to-right leaf order.
struct WeightDistribution {
  std::vector<int> weights;

  int total() const;
  std::size_t size() const { return weights.size(); }
  int operator[](std::size_t u) const { return weights[u]; }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
  friend auto operator<=>(const WeightDistribution&, const WeightDistribution&) = default;
};

/**
 * Balanced binary partition of a contiguous qubit register.
 *
 * The register is cut into chunks of k qubits (the last chunk holds n mod k
 * when nonzero) and the chunk list is recursively halved at floor(|C|/2).
 * Node 0 is the root; every node covers a contiguous range [first, first+size).
 */
class PartitionTree {
 public:
  struct Node {
    int first = 0;
    int size = 0;
    int left = -1;   ///< child node ids, -1 on leaves
    int right = -1;
    int leaf_ordinal = -1;  ///< position in leaves(), -1 on internal nodes

    bool is_leaf() const { return left < 0; }
    int left_size(const PartitionTree& tree) const { return tree.node(left).size; }
    std::vector<int> qubits() const;
  };

  /// Throws std::invalid_argument unless 1 <= k <= n.
  PartitionTree(int n, int k);

  int num_qubits() const { return n_; }
  int leaf_threshold() const { return k_; }
  int root() const { return 0; }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  std::size_t num_nodes() const { return nodes_.size(); }

  /// Leaf node ids, left to right (G = ceil(n/k) entries).
  const std::vector<int>& leaves() const { return leaves_; }
  std::size_t num_leaves() const { return leaves_.size(); }
  const Node& leaf(std::size_t u) const { return node(leaves_[u]); }
  std::vector<int> leaf_sizes() const;

  /// Internal node ids in pre-order (every parent precedes its children).
  std::vector<int> internal_nodes() const;

  int depth() const;

 private:
  int build(int first_chunk, int num_chunks, const std::vector<std::pair<int, int>>& chunks);

  int n_;
  int k_;
  std::vector<Node> nodes_;
  std::vector<int> leaves_;
};

PartitionTree build_partition_tree(int n, int k);

/// All distributions with 0 <= i_u <= leaf_sizes[u] summing to total, lexicographic order.
std::vector<WeightDistribution> enumerate_weight_distributions(const std::vector<int>& leaf_sizes,
                                                               int total);

WeightDistribution weight_distribution_of(const BasisString& b, const PartitionTree& tree);
WeightDistribution weight_distribution_of(std::uint64_t index, const PartitionTree& tree);

/// Hamming weight of the qubit range [first, first+size) inside an n-qubit index.
int range_weight(std::uint64_t index, int n, int first, int size);

}  // namespace leafsep
