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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leafsep/partition_tree.hpp"
#include "leafsep/state_vector.hpp"

namespace leafsep {

/// c(I) = ||P_I psi||.
double distribution_norm(const StateVector& psi, const PartitionTree& tree, const WeightDistribution& dist);

/// A weight distribution with support in psi, with its reference state b*.
struct DistributionSummary {
  WeightDistribution dist;
  double norm = 0.0;             ///< c(I)
  std::uint64_t reference = 0;   ///< lexicographically smallest supported index in the class
  Complex reference_amplitude;   ///< alpha_{b*}
};

/// Distributions whose class holds an amplitude above the relative zero threshold, sorted by (total, I).
std::vector<DistributionSummary> summarize_distributions(const StateVector& psi, const PartitionTree& tree);

struct SeparabilityViolation {
  BasisString basis;
  Complex ratio;    ///< alpha_b / alpha_{b*}
  Complex product;  ///< prod_u gamma_{u,i_u}(g_u)
};

struct SeparabilityReport {
  bool separable = true;
  double tol = 0.0;
  std::vector<SeparabilityViolation> violations;  ///< first few offending basis states
  std::vector<std::pair<WeightDistribution, double>> distributions;  ///< (I, c(I)) for present I
  /// True when one leaf state per (leaf, weight) reproduces psi, i.e. the leaf
  /// amplitude table is consistent across distributions (and total weights).
  bool shared_leaf_states = true;
};

/**
 * Product-lemma check: for every present distribution I and every b in its
 * class, |alpha_b/alpha_{b*} - prod_u gamma_{u,i_u}(g_u)| <= tol.
 */
SeparabilityReport is_leaf_separable(const StateVector& psi, const PartitionTree& tree, double tol = 1e-9);

/// Squared split norms at an internal node: weights[i][j] = (alpha^v_{i,j})^2.
struct NodeSplitWeights {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::vector<double>> weights;

  /// (alpha^v_ell)^2, the squared norm of node weight ell.
  double node_weight(int ell) const;
};

NodeSplitWeights node_split_weights(const StateVector& psi, const PartitionTree& tree, int node);

/// beta^{v,ell}_i, i = 0..ell. Throws std::domain_error when node weight ell carries no support.
std::vector<double> compute_betas(const StateVector& psi, const PartitionTree& tree, int node, int ell);
std::vector<double> compute_betas(const NodeSplitWeights& split, int ell);

/**
 * theta_i = 2 atan(sqrt(sum_{j>i} beta_j^2) / beta_i), i = 0..size-2.
 * beta_i = 0 with a nonzero tail gives pi; a zero tail gives 0.
 */
std::vector<double> betas_to_angles(std::span<const double> betas);

/// (leaf ordinal, local weight) -> Ehrlich-ordered eta amplitudes.
class LeafAmplitudeTable {
 public:
  using Key = std::pair<int, int>;

  bool contains(int leaf, int weight) const { return entries_.contains({leaf, weight}); }
  const std::vector<Complex>& at(int leaf, int weight) const;
  void set(int leaf, int weight, std::vector<Complex> etas);
  /// Local weights stored for a leaf, ascending.
  std::vector<int> weights(int leaf) const;
  const std::map<Key, std::vector<Complex>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Key, std::vector<Complex>> entries_;
};

/**
 * Leaf amplitudes from the reference-state ratios. Distributions are visited in
 * (total, lexicographic) order and the first one reaching a (leaf, weight) pair
 * defines its entry. With `ell`, only distributions of that total are visited.
 */
LeafAmplitudeTable compute_leaf_amplitudes(const StateVector& psi, const PartitionTree& tree,
                                           std::optional<int> ell = std::nullopt);

struct DistributionPhase {
  WeightDistribution dist;
  double norm = 0.0;   ///< c(I)
  double phase = 0.0;  ///< arg(alpha_{b*} / prod_u eta_{u,i_u}(g*_u))
};

/// Per-distribution coefficient c(I) e^{i phase} such that alpha_b = c(I) e^{i phase} prod_u eta(g_u).
std::vector<DistributionPhase> distribution_phases(const StateVector& psi, const PartitionTree& tree,
                                                   const LeafAmplitudeTable& table);

/// Rebuilds amplitudes from c(I), phases and the leaf table (amplitude formula).
StateVector reconstruct_state(const PartitionTree& tree, std::span<const DistributionPhase> distributions,
                              const LeafAmplitudeTable& table);

struct RbsAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/**
 * Parameters of a fixed-weight encoder walking an Ehrlich-ordered amplitude list.
 *
 * steps[t] rotates amplitude from string t to string t+1. For real inputs all
 * phi are zero and signs ride on theta. `final_phase` (applied to string
 * `final_index`, the last nonzero entry) fixes the remaining phase.
 */
struct EncoderAngles {
  std::vector<RbsAngles> steps;
  double final_phase = 0.0;
  std::size_t final_index = 0;
  bool real = true;
};

EncoderAngles etas_to_angles(std::span<const Complex> etas);

/// alpha_ell for ell = 0..floor(n/2). Throws std::domain_error on support above floor(n/2).
std::vector<double> mixed_weight_profile(const StateVector& psi);

/// Local string of leaf u inside a full index.
std::uint64_t leaf_bits(std::uint64_t index, int n, const PartitionTree::Node& leaf);
/// Replaces leaf u's local string inside a full index.
std::uint64_t replace_leaf_bits(std::uint64_t index, int n, const PartitionTree::Node& leaf, std::uint64_t local);

}  // namespace leafsep
