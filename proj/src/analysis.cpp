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

#include "leafsep/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "leafsep/combinatorics.hpp"

namespace leafsep {

std::uint64_t leaf_bits(std::uint64_t index, int n, const PartitionTree::Node& leaf) {
  const int shift = n - leaf.first - leaf.size;
  return (index >> shift) & ((std::uint64_t{1} << leaf.size) - 1);
}

std::uint64_t replace_leaf_bits(std::uint64_t index, int n, const PartitionTree::Node& leaf, std::uint64_t local) {
  const int shift = n - leaf.first - leaf.size;
  const std::uint64_t mask = ((std::uint64_t{1} << leaf.size) - 1) << shift;
  return (index & ~mask) | (local << shift);
}

double distribution_norm(const StateVector& psi, const PartitionTree& tree, const WeightDistribution& dist) {
  if (dist.size() != tree.num_leaves()) throw std::invalid_argument("distribution_norm: leaf count mismatch");
  double sum = 0.0;
  const int target = dist.total();
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (std::popcount(i) != target || psi[i] == 0.0) continue;
    if (weight_distribution_of(i, tree) == dist) sum += std::norm(psi[i]);
  }
  return std::sqrt(sum);
}

std::vector<DistributionSummary> summarize_distributions(const StateVector& psi, const PartitionTree& tree) {
  if (psi.num_qubits() != tree.num_qubits()) throw std::invalid_argument("state and tree disagree on n");
  const double thr = zero_threshold(psi);
  std::map<std::pair<int, WeightDistribution>, DistributionSummary> by_dist;
  std::map<std::pair<int, WeightDistribution>, double> sums;
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (psi[i] == 0.0) continue;
    WeightDistribution d = weight_distribution_of(i, tree);
    const std::pair<int, WeightDistribution> key{d.total(), d};
    sums[key] += std::norm(psi[i]);
    if (std::abs(psi[i]) > thr && !by_dist.contains(key)) {
      by_dist[key] = DistributionSummary{std::move(d), 0.0, i, psi[i]};
    }
  }
  std::vector<DistributionSummary> out;
  out.reserve(by_dist.size());
  for (auto& [key, s] : by_dist) {
    s.norm = std::sqrt(sums[key]);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<Complex>& LeafAmplitudeTable::at(int leaf, int weight) const {
  const auto it = entries_.find({leaf, weight});
  if (it == entries_.end()) {
    throw std::out_of_range("no leaf amplitudes for leaf " + std::to_string(leaf) + " weight " +
                            std::to_string(weight));
  }
  return it->second;
}

void LeafAmplitudeTable::set(int leaf, int weight, std::vector<Complex> etas) {
  entries_[{leaf, weight}] = std::move(etas);
}

std::vector<int> LeafAmplitudeTable::weights(int leaf) const {
  std::vector<int> out;
  for (const auto& [key, v] : entries_) {
    if (key.first == leaf) out.push_back(key.second);
  }
  return out;
}

namespace {

// Ehrlich-ordered gamma ratios for leaf u around reference index `ref`, normalized.
std::vector<Complex> leaf_state_from_reference(const StateVector& psi, const PartitionTree& tree, std::size_t u,
                                               std::uint64_t ref) {
  const PartitionTree::Node& leaf = tree.leaf(u);
  const int n = tree.num_qubits();
  const int w = std::popcount(leaf_bits(ref, n, leaf));
  if (w == 0) return {Complex{1.0, 0.0}};
  const Complex base = psi[ref];
  const EhrlichSequence seq(leaf.size, w);
  std::vector<Complex> etas;
  etas.reserve(seq.size());
  double sum = 0.0;
  for (const BasisString& g : seq) {
    const Complex gamma = psi[replace_leaf_bits(ref, n, leaf, g.index())] / base;
    etas.push_back(gamma);
    sum += std::norm(gamma);
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (Complex& e : etas) e *= scale;
  return etas;
}

Complex eta_of(const LeafAmplitudeTable& table, const PartitionTree& tree, std::size_t u, std::uint64_t index) {
  const PartitionTree::Node& leaf = tree.leaf(u);
  const std::uint64_t local = leaf_bits(index, tree.num_qubits(), leaf);
  const int w = std::popcount(local);
  const std::vector<Complex>& etas = table.at(static_cast<int>(u), w);
  if (w == 0) return etas.front();
  const EhrlichSequence seq(leaf.size, w);
  return etas[seq.position(BasisString(leaf.size, local))];
}

}  // namespace

LeafAmplitudeTable compute_leaf_amplitudes(const StateVector& psi, const PartitionTree& tree, std::optional<int> ell) {
  LeafAmplitudeTable table;
  for (const DistributionSummary& s : summarize_distributions(psi, tree)) {
    if (ell && s.dist.total() != *ell) continue;
    for (std::size_t u = 0; u < tree.num_leaves(); ++u) {
      const int w = s.dist[u];
      if (table.contains(static_cast<int>(u), w)) continue;
      table.set(static_cast<int>(u), w, leaf_state_from_reference(psi, tree, u, s.reference));
    }
  }
  return table;
}

std::vector<DistributionPhase> distribution_phases(const StateVector& psi, const PartitionTree& tree,
                                                   const LeafAmplitudeTable& table) {
  std::vector<DistributionPhase> out;
  for (const DistributionSummary& s : summarize_distributions(psi, tree)) {
    Complex prod = 1.0;
    for (std::size_t u = 0; u < tree.num_leaves(); ++u) prod *= eta_of(table, tree, u, s.reference);
    const Complex ratio = std::abs(prod) > 1e-300 ? s.reference_amplitude / prod : s.reference_amplitude;
    out.push_back({s.dist, s.norm, std::arg(ratio)});
  }
  return out;
}

StateVector reconstruct_state(const PartitionTree& tree, std::span<const DistributionPhase> distributions,
                              const LeafAmplitudeTable& table) {
  const int n = tree.num_qubits();
  StateVector out(n);
  std::map<WeightDistribution, Complex> coeff;
  for (const DistributionPhase& d : distributions) coeff[d.dist] = std::polar(d.norm, d.phase);
  for (std::uint64_t i = 0; i < out.dimension(); ++i) {
    const auto it = coeff.find(weight_distribution_of(i, tree));
    if (it == coeff.end()) continue;
    Complex a = it->second;
    for (std::size_t u = 0; u < tree.num_leaves() && a != 0.0; ++u) {
      const int w = it->first[u];
      if (!table.contains(static_cast<int>(u), w)) {
        a = 0.0;
        break;
      }
      a *= eta_of(table, tree, u, i);
    }
    out[i] = a;
  }
  return out;
}

SeparabilityReport is_leaf_separable(const StateVector& psi, const PartitionTree& tree, double tol) {
  if (psi.num_qubits() != tree.num_qubits()) throw std::invalid_argument("state and tree disagree on n");
  SeparabilityReport report;
  report.tol = tol;
  constexpr std::size_t kMaxViolations = 16;
  const int n = tree.num_qubits();
  const std::vector<DistributionSummary> present = summarize_distributions(psi, tree);
  std::map<WeightDistribution, const DistributionSummary*> lookup;
  for (const DistributionSummary& s : present) {
    lookup[s.dist] = &s;
    report.distributions.emplace_back(s.dist, s.norm);
  }

  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const auto it = lookup.find(weight_distribution_of(i, tree));
    if (it == lookup.end()) continue;
    const DistributionSummary& s = *it->second;
    const Complex ratio = psi[i] / s.reference_amplitude;
    Complex product = 1.0;
    for (std::size_t u = 0; u < tree.num_leaves(); ++u) {
      const PartitionTree::Node& leaf = tree.leaf(u);
      const std::uint64_t swapped = replace_leaf_bits(s.reference, n, leaf, leaf_bits(i, n, leaf));
      product *= psi[swapped] / s.reference_amplitude;
    }
    if (std::abs(ratio - product) > tol) {
      report.separable = false;
      if (report.violations.size() < kMaxViolations) report.violations.push_back({BasisString(n, i), ratio, product});
    }
  }

  if (!report.separable) {
    report.shared_leaf_states = false;
    return report;
  }
  const LeafAmplitudeTable table = compute_leaf_amplitudes(psi, tree);
  const std::vector<DistributionPhase> phases = distribution_phases(psi, tree, table);
  const StateVector rebuilt = reconstruct_state(tree, phases, table);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) worst = std::max(worst, std::abs(rebuilt[i] - psi[i]));
  report.shared_leaf_states = worst <= tol;
  return report;
}

// ---------------------------------------------------------------------------

double NodeSplitWeights::node_weight(int ell) const {
  double sum = 0.0;
  for (int i = std::max(0, ell - right_size); i <= std::min(ell, left_size); ++i) {
    sum += weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell - i)];
  }
  return sum;
}

NodeSplitWeights node_split_weights(const StateVector& psi, const PartitionTree& tree, int node) {
  const PartitionTree::Node& v = tree.node(node);
  if (v.is_leaf()) throw std::invalid_argument("node_split_weights: node " + std::to_string(node) + " is a leaf");
  const PartitionTree::Node& l = tree.node(v.left);
  const PartitionTree::Node& r = tree.node(v.right);
  NodeSplitWeights out;
  out.left_size = l.size;
  out.right_size = r.size;
  out.weights.assign(static_cast<std::size_t>(l.size + 1), std::vector<double>(static_cast<std::size_t>(r.size + 1), 0.0));
  const int n = tree.num_qubits();
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (psi[i] == 0.0) continue;
    const int wl = range_weight(i, n, l.first, l.size);
    const int wr = range_weight(i, n, r.first, r.size);
    out.weights[static_cast<std::size_t>(wl)][static_cast<std::size_t>(wr)] += std::norm(psi[i]);
  }
  return out;
}

std::vector<double> compute_betas(const NodeSplitWeights& split, int ell) {
  if (ell < 0 || ell > split.left_size + split.right_size) {
    throw std::domain_error("node weight " + std::to_string(ell) + " out of range");
  }
  const double total = split.node_weight(ell);
  if (!(total > 0.0)) throw std::domain_error("node weight " + std::to_string(ell) + " carries no amplitude");
  std::vector<double> betas(static_cast<std::size_t>(ell + 1), 0.0);
  for (int i = std::max(0, ell - split.right_size); i <= std::min(ell, split.left_size); ++i) {
    betas[static_cast<std::size_t>(i)] =
        std::sqrt(split.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell - i)] / total);
  }
  return betas;
}

std::vector<double> compute_betas(const StateVector& psi, const PartitionTree& tree, int node, int ell) {
  return compute_betas(node_split_weights(psi, tree, node), ell);
}

std::vector<double> betas_to_angles(std::span<const double> betas) {
  if (betas.empty()) return {};
  std::vector<double> tail(betas.size() + 1, 0.0);
  for (std::size_t i = betas.size(); i-- > 0;) tail[i] = tail[i + 1] + betas[i] * betas[i];
  std::vector<double> angles(betas.size() - 1, 0.0);
  const double eps = 1e-14 * std::max(1.0, tail[0]);
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    const double rest = tail[i + 1];
    angles[i] = rest <= eps ? 0.0 : 2.0 * std::atan2(std::sqrt(rest), betas[i]);
  }
  return angles;
}

// ---------------------------------------------------------------------------

EncoderAngles etas_to_angles(std::span<const Complex> etas) {
  EncoderAngles out;
  if (etas.empty()) throw std::invalid_argument("etas_to_angles: empty amplitude list");
  const std::size_t size = etas.size();
  out.steps.assign(size - 1, RbsAngles{});

  double max_abs = 0.0;
  for (const Complex& e : etas) max_abs = std::max(max_abs, std::abs(e));
  if (!(max_abs > 0.0)) throw std::domain_error("etas_to_angles: all amplitudes vanish");
  const double eps = kRelativeZero * max_abs;
  out.real = std::all_of(etas.begin(), etas.end(), [&](const Complex& e) { return std::abs(e.imag()) <= 1e-12 * max_abs; });

  std::size_t last = 0;
  for (std::size_t t = 0; t < size; ++t) {
    if (std::abs(etas[t]) > eps) last = t;
  }
  out.final_index = last;
  std::vector<double> tail(size + 1, 0.0);
  for (std::size_t t = size; t-- > 0;) tail[t] = tail[t + 1] + std::norm(etas[t]);

  if (out.real) {
    for (std::size_t t = 0; t < last; ++t) {
      const double x = etas[t].real();
      const double y = t + 1 == last ? etas[last].real() : std::sqrt(tail[t + 1]);
      out.steps[t].theta = 2.0 * std::atan2(y, x);
    }
    // Only one entry: its sign is the leftover phase. Otherwise the chain fixes every sign.
    if (last == 0 && etas[0].real() < 0.0) out.final_phase = std::numbers::pi;
    return out;
  }

  double chi = 0.0;  // phase already carried by the residual amplitude
  for (std::size_t t = 0; t < last; ++t) {
    out.steps[t].theta = 2.0 * std::atan2(std::sqrt(tail[t + 1]), std::abs(etas[t]));
    double phi = 0.0;
    if (std::abs(etas[t]) > eps) phi = std::remainder(2.0 * (std::arg(etas[t]) - chi), 4.0 * std::numbers::pi);
    out.steps[t].phi = phi;
    chi -= phi / 2.0;
  }
  double lambda = std::remainder(std::arg(etas[last]) - chi, 2.0 * std::numbers::pi);
  if (std::abs(lambda) < 1e-15) lambda = 0.0;
  out.final_phase = lambda;
  return out;
}

std::vector<double> mixed_weight_profile(const StateVector& psi) {
  const int n = psi.num_qubits();
  const int half = n / 2;
  const double thr = zero_threshold(psi);
  std::vector<double> profile(static_cast<std::size_t>(half + 1), 0.0);
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const int w = std::popcount(i);
    if (w > half) {
      if (std::abs(psi[i]) > thr) {
        throw std::domain_error("mixed-weight input needs support at weights <= " + std::to_string(half) +
                                ", found weight " + std::to_string(w));
      }
      continue;
    }
    profile[static_cast<std::size_t>(w)] += std::norm(psi[i]);
  }
  for (double& p : profile) p = std::sqrt(p);
  return profile;
}

}  // namespace leafsep
