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

#include "leafsep/partition_tree.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace leafsep {

int WeightDistribution::total() const { return std::accumulate(weights.begin(), weights.end(), 0); }

std::vector<int> PartitionTree::Node::qubits() const {
  std::vector<int> q(static_cast<std::size_t>(size));
  std::iota(q.begin(), q.end(), first);
  return q;
}

PartitionTree::PartitionTree(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("partition tree: n out of range");
  if (k < 1 || k > n) {
    throw std::invalid_argument("partition tree: leaf threshold k=" + std::to_string(k) +
                                " must satisfy 1 <= k <= n=" + std::to_string(n));
  }
  std::vector<std::pair<int, int>> chunks;  // (first, size)
  for (int first = 0; first < n; first += k) chunks.emplace_back(first, std::min(k, n - first));
  build(0, static_cast<int>(chunks.size()), chunks);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].is_leaf()) leaves_.push_back(static_cast<int>(id));
  }
  std::sort(leaves_.begin(), leaves_.end(),
            [this](int a, int b) { return nodes_[static_cast<std::size_t>(a)].first < nodes_[static_cast<std::size_t>(b)].first; });
  for (std::size_t u = 0; u < leaves_.size(); ++u) {
    nodes_[static_cast<std::size_t>(leaves_[u])].leaf_ordinal = static_cast<int>(u);
  }
}

int PartitionTree::build(int first_chunk, int num_chunks, const std::vector<std::pair<int, int>>& chunks) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  const auto [first, unused] = chunks[static_cast<std::size_t>(first_chunk)];
  int size = 0;
  for (int c = first_chunk; c < first_chunk + num_chunks; ++c) size += chunks[static_cast<std::size_t>(c)].second;
  nodes_[static_cast<std::size_t>(id)].first = first;
  nodes_[static_cast<std::size_t>(id)].size = size;
  if (num_chunks == 1) return id;
  const int mid = num_chunks / 2;
  const int left = build(first_chunk, mid, chunks);
  const int right = build(first_chunk + mid, num_chunks - mid, chunks);
  nodes_[static_cast<std::size_t>(id)].left = left;
  nodes_[static_cast<std::size_t>(id)].right = right;
  return id;
}

std::vector<int> PartitionTree::leaf_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(leaves_.size());
  for (int id : leaves_) sizes.push_back(node(id).size);
  return sizes;
}

std::vector<int> PartitionTree::internal_nodes() const {
  // build() appends nodes in pre-order
  std::vector<int> out;
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (!nodes_[id].is_leaf()) out.push_back(static_cast<int>(id));
  }
  return out;
}

int PartitionTree::depth() const {
  std::function<int(int)> rec = [&](int id) -> int {
    const Node& nd = node(id);
    if (nd.is_leaf()) return 0;
    return 1 + std::max(rec(nd.left), rec(nd.right));
  };
  return rec(root());
}

PartitionTree build_partition_tree(int n, int k) { return PartitionTree(n, k); }

std::vector<WeightDistribution> enumerate_weight_distributions(const std::vector<int>& leaf_sizes,
                                                               int total) {
  std::vector<WeightDistribution> out;
  if (total < 0) return out;
  const std::size_t g = leaf_sizes.size();
  std::vector<int> suffix_capacity(g + 1, 0);
  for (std::size_t u = g; u-- > 0;) suffix_capacity[u] = suffix_capacity[u + 1] + leaf_sizes[u];
  if (total > suffix_capacity[0]) return out;

  std::vector<int> current(g, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t u, int remaining) {
    if (u == g) {
      if (remaining == 0) out.push_back(WeightDistribution{current});
      return;
    }
    const int lo = std::max(0, remaining - suffix_capacity[u + 1]);
    const int hi = std::min(leaf_sizes[u], remaining);
    for (int w = lo; w <= hi; ++w) {
      current[u] = w;
      rec(u + 1, remaining - w);
    }
  };
  rec(0, total);
  return out;
}

int range_weight(std::uint64_t index, int n, int first, int size) {
  const int shift = n - first - size;
  const std::uint64_t mask = size >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
  return std::popcount((index >> shift) & mask);
}

WeightDistribution weight_distribution_of(std::uint64_t index, const PartitionTree& tree) {
  WeightDistribution d;
  d.weights.reserve(tree.num_leaves());
  for (int id : tree.leaves()) {
    const auto& nd = tree.node(id);
    d.weights.push_back(range_weight(index, tree.num_qubits(), nd.first, nd.size));
  }
  return d;
}

WeightDistribution weight_distribution_of(const BasisString& b, const PartitionTree& tree) {
  if (b.size() != tree.num_qubits()) {
    throw std::invalid_argument("weight_distribution_of: basis string length does not match tree");
  }
  return weight_distribution_of(b.index(), tree);
}

}  // namespace leafsep
