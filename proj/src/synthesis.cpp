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

#include "leafsep/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "leafsep/combinatorics.hpp"

namespace leafsep {

namespace {

constexpr double kAngleZero = 1e-14;

bool is_zero_angle(double a) { return std::abs(a) <= kAngleZero; }

}  // namespace

std::vector<Gate> initial_state_gates(int n, int ell) {
  if (ell < 0 || ell > n) throw std::invalid_argument("initial state weight must lie in 0..n");
  std::vector<Gate> gates;
  for (int q = n - ell; q < n; ++q) gates.push_back(Gate::x(q));
  return gates;
}

Circuit synthesize_initial(int n, int ell) {
  Circuit c(n);
  c.metadata().ell = ell;
  c.append(initial_state_gates(n, ell));
  return c;
}

std::vector<Gate> synthesize_gwdb(const PartitionTree& tree, int node, int ell, std::span<const double> angles) {
  const PartitionTree::Node& v = tree.node(node);
  if (v.is_leaf()) throw std::invalid_argument("synthesize_gwdb: node is a leaf");
  const PartitionTree::Node& left = tree.node(v.left);
  const PartitionTree::Node& right = tree.node(v.right);
  const int m = left.size;
  const int r = right.size;
  if (ell < 0 || ell > m + r) throw std::invalid_argument("synthesize_gwdb: weight exceeds the node register");
  if (static_cast<int>(angles.size()) != ell) throw std::invalid_argument("synthesize_gwdb: need one angle per split");

  std::vector<Gate> gates;
  const int first = std::max(0, ell - r);
  const int last = std::min(ell, m);
  for (int i = first; i < last; ++i) {
    const double theta = angles[static_cast<std::size_t>(i)];
    if (is_zero_angle(theta)) continue;
    const int p_right = r - (ell - i);  // leftmost '1' of the right child
    const int p_left = m - 1 - i;       // rightmost '0' of the left child
    std::vector<Control> controls;
    if (i > 0) controls.push_back(pos(left.first + m - i));
    if (i + 1 < m) controls.push_back(neg(left.first + m - 2 - i));
    if (ell - i > 1) controls.push_back(pos(right.first + p_right + 1));
    if (p_right > 0) controls.push_back(neg(right.first + p_right - 1));
    gates.push_back(Gate::crbs(theta, 0.0, std::move(controls), right.first + p_right, left.first + p_left));
  }
  return gates;
}

std::vector<Gate> gwdb_tree_gates(const StateVector& psi, const PartitionTree& tree) {
  std::vector<Gate> gates;
  constexpr double kDeadWeight = kRelativeZero * kRelativeZero;
  const double total = psi.norm_squared();
  for (int id : tree.internal_nodes()) {
    const NodeSplitWeights split = node_split_weights(psi, tree, id);
    for (int ell = 0; ell <= split.left_size + split.right_size; ++ell) {
      if (split.node_weight(ell) <= kDeadWeight * total) continue;
      std::vector<double> betas;
      try {
        betas = compute_betas(split, ell);
      } catch (const std::domain_error&) {
        continue;
      }
      const std::vector<double> angles = betas_to_angles(betas);
      for (Gate& g : synthesize_gwdb(tree, id, ell, angles)) gates.push_back(std::move(g));
    }
  }
  return gates;
}

Circuit synthesize_gwdb_tree(const StateVector& psi, const PartitionTree& tree, int ell) {
  Circuit c(tree.num_qubits());
  c.metadata().k = tree.leaf_threshold();
  c.metadata().ell = ell;
  c.append(initial_state_gates(tree.num_qubits(), ell));
  c.append(gwdb_tree_gates(psi, tree));
  return c;
}

std::vector<Gate> distribution_phase_gates(const PartitionTree& tree, std::span<const DistributionPhase> phases) {
  if (phases.empty()) return {};
  const DistributionPhase* reference = &phases.front();
  for (const DistributionPhase& p : phases) {
    if (p.dist.total() == 0) {
      reference = &p;
      break;
    }
  }
  std::vector<Gate> gates;
  for (const DistributionPhase& p : phases) {
    const double rel = std::remainder(p.phase - reference->phase, 2.0 * std::numbers::pi);
    if (&p == reference || is_zero_angle(rel)) continue;
    int target = -1;
    std::vector<Control> controls;
    for (std::size_t u = 0; u < tree.num_leaves(); ++u) {
      const PartitionTree::Node& leaf = tree.leaf(u);
      const int w = p.dist[u];
      const int first_one = leaf.first + leaf.size - w;
      if (w > 0) {
        if (target < 0) {
          target = first_one;
        } else {
          controls.push_back(pos(first_one));
        }
      }
      if (w < leaf.size) controls.push_back(neg(first_one - 1));
    }
    // The all-zero distribution is always the reference when present, so a target exists.
    gates.push_back(Gate::mcphase(rel, std::move(controls), target));
  }
  return gates;
}

std::vector<Gate> synthesize_hwk_encoder(std::span<const int> wires, int w, std::span<const Complex> etas,
                                         const std::vector<Control>& extra_controls, EncoderControls scheme) {
  const int m = static_cast<int>(wires.size());
  if (w < 0 || w > m) throw std::invalid_argument("synthesize_hwk_encoder: weight out of range");
  if (etas.size() != binomial(m, w)) {
    throw std::invalid_argument("synthesize_hwk_encoder: expected " + std::to_string(binomial(m, w)) +
                                " amplitudes, got " + std::to_string(etas.size()));
  }
  if (w == 0) return {};
  const EncoderAngles angles = etas_to_angles(etas);
  const EhrlichSequence seq(m, w);
  auto wire = [&](int local) { return wires[static_cast<std::size_t>(local)]; };

  std::vector<Gate> gates;
  for (std::size_t t = 0; t < angles.steps.size(); ++t) {
    const RbsAngles& step = angles.steps[t];
    if (is_zero_angle(step.theta) && is_zero_angle(step.phi)) continue;
    const RotationSlot slot = controls_and_targets(seq[t], seq[t + 1]);
    std::vector<Control> controls;
    for (int q : slot.controls) controls.push_back(pos(wire(q)));
    if (scheme == EncoderControls::full_pattern) {
      for (int q : slot.shared_zeros()) controls.push_back(neg(wire(q)));
    }
    controls.insert(controls.end(), extra_controls.begin(), extra_controls.end());
    gates.push_back(Gate::crbs(step.theta, step.phi, std::move(controls), wire(slot.q1), wire(slot.q2)));
  }

  if (!is_zero_angle(angles.final_phase)) {
    const BasisString& s = seq[angles.final_index];
    int target = -1;
    std::vector<Control> controls;
    for (int q = 0; q < m; ++q) {
      if (s.bit(q)) {
        if (target < 0) {
          target = wire(q);
        } else {
          controls.push_back(pos(wire(q)));
        }
      } else if (scheme == EncoderControls::full_pattern) {
        controls.push_back(neg(wire(q)));
      }
    }
    controls.insert(controls.end(), extra_controls.begin(), extra_controls.end());
    gates.push_back(Gate::mcphase(angles.final_phase, std::move(controls), target));
  }
  return gates;
}

Circuit synthesize_hwk_baseline(const StateVector& psi, int ell) {
  const int n = psi.num_qubits();
  const EhrlichSequence seq(n, ell);
  std::vector<Complex> etas;
  etas.reserve(seq.size());
  for (const BasisString& s : seq) etas.push_back(psi[s.index()]);
  std::vector<int> wires(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) wires[static_cast<std::size_t>(q)] = q;

  Circuit c(n);
  c.metadata().k = n;
  c.metadata().ell = ell;
  c.metadata().mode = "hwk";
  c.append(initial_state_gates(n, ell));
  c.append(synthesize_hwk_encoder(wires, ell, etas, {}, EncoderControls::shared_ones));
  return c;
}

namespace {

std::vector<Gate> leaf_gates_free(const LeafAmplitudeTable& table, const PartitionTree::Node& leaf, int u,
                                  const std::vector<int>& classes) {
  const std::vector<int> wires = leaf.qubits();
  std::vector<Gate> gates;
  for (int j : classes) {
    for (Gate& g : synthesize_hwk_encoder(wires, j, table.at(u, j))) gates.push_back(std::move(g));
  }
  return gates;
}

std::vector<Gate> leaf_gates_ancilla(const LeafAmplitudeTable& table, const PartitionTree::Node& leaf, int u,
                                     const std::vector<int>& classes, int ancilla, MarkerStyle marker) {
  const std::vector<int> wires = leaf.qubits();
  const int m = leaf.size;
  std::vector<Gate> gates;
  for (int j : classes) {
    if (marker == MarkerStyle::exact) {
      std::vector<Control> controls;
      if (j < m) controls.push_back(neg(leaf.first + m - j - 1));
      for (int q = m - j; q < m; ++q) controls.push_back(pos(leaf.first + q));
      gates.push_back(Gate::mcx(std::move(controls), ancilla));
    } else if (j < m) {
      gates.push_back(Gate::mcx({neg(leaf.first + m - j - 1)}, ancilla));
    }
    for (Gate& g : synthesize_hwk_encoder(wires, j, table.at(u, j), {pos(ancilla)}, EncoderControls::shared_ones)) {
      gates.push_back(std::move(g));
    }
  }
  // Every state of the leaf has been marked exactly once, so the ancilla now reads |1> everywhere.
  if (marker == MarkerStyle::exact && !classes.empty()) gates.push_back(Gate::x(ancilla));
  return gates;
}

}  // namespace

std::vector<Gate> synthesize_leaf_encoders(const LeafAmplitudeTable& table, const PartitionTree& tree,
                                           const SynthesisConfig& config) {
  std::vector<Gate> gates;
  const int n = tree.num_qubits();
  for (std::size_t u = 0; u < tree.num_leaves(); ++u) {
    const PartitionTree::Node& leaf = tree.leaf(u);
    const int ui = static_cast<int>(u);
    std::vector<int> classes = table.weights(ui);
    if (config.class_order == ClassOrder::descending) std::reverse(classes.begin(), classes.end());

    std::vector<Gate> chosen = leaf_gates_free(table, leaf, ui, classes);
    if (config.mode == EncoderMode::per_leaf_ancilla) {
      std::vector<Gate> with_ancilla = leaf_gates_ancilla(table, leaf, ui, classes, n + ui, config.marker);
      if (config.ancilla_policy == AncillaPolicy::always || two_qubit_cost(with_ancilla) < two_qubit_cost(chosen)) {
        chosen = std::move(with_ancilla);
      }
    }
    for (Gate& g : chosen) gates.push_back(std::move(g));
  }
  return gates;
}

std::vector<Gate> synthesize_mixed_weight_input(int n, std::span<const double> profile) {
  if (profile.empty()) throw std::invalid_argument("mixed-weight profile is empty");
  const int half = n / 2;
  for (std::size_t w = static_cast<std::size_t>(half) + 1; w < profile.size(); ++w) {
    if (std::abs(profile[w]) > kRelativeZero) {
      throw std::domain_error("mixed-weight profile has support above weight " + std::to_string(half));
    }
  }
  const std::size_t len = std::min(profile.size(), static_cast<std::size_t>(half) + 1);
  const std::vector<double> angles = betas_to_angles(profile.first(len));
  std::vector<Gate> gates;
  for (std::size_t w = 0; w < angles.size(); ++w) {
    if (is_zero_angle(angles[w])) continue;
    const int target = n - 1 - static_cast<int>(w);
    std::vector<Control> controls;
    if (w > 0) controls.push_back(pos(target + 1));
    gates.push_back(Gate::mcry(angles[w], std::move(controls), target));
  }
  return gates;
}

SynthesisResult synthesize(const StateVector& psi, const SynthesisConfig& config) {
  const int n = psi.num_qubits();
  if (config.n != 0 && config.n != n) {
    throw std::invalid_argument("config n=" + std::to_string(config.n) + " but the state has " + std::to_string(n) +
                                " qubits");
  }
  if (!psi.is_normalized(1e-9)) throw std::domain_error("input state is not normalized");
  if (!config.complex_phases && !psi.is_real()) {
    throw std::domain_error("input has complex amplitudes; enable complex phases");
  }
  const PartitionTree tree(n, config.k);

  SynthesisResult result;
  const std::vector<int> support = psi.weight_support(zero_threshold(psi));
  if (config.ell >= 0 && (support.size() != 1 || support.front() != config.ell)) {
    throw std::domain_error("state does not have fixed Hamming weight " + std::to_string(config.ell));
  }
  result.mixed = support.size() > 1;
  const int ell = result.mixed ? -1 : support.front();

  const SeparabilityReport report = is_leaf_separable(psi, tree);
  result.separable = report.separable && report.shared_leaf_states;
  if (!report.separable) {
    result.warnings.push_back("state is not leaf-separable for k=" + std::to_string(config.k) +
                              "; the circuit is approximate");
  } else if (!report.shared_leaf_states) {
    result.warnings.push_back("leaf states differ across weight distributions; the circuit is approximate");
  }

  const int n_ancilla = config.mode == EncoderMode::per_leaf_ancilla ? static_cast<int>(tree.num_leaves()) : 0;
  Circuit circuit(n, n_ancilla);
  CircuitMetadata& md = circuit.metadata();
  md.k = config.k;
  md.ell = ell;
  md.mode = config.mode == EncoderMode::per_leaf_ancilla ? "ancilla" : "free";

  if (result.mixed) {
    circuit.append(synthesize_mixed_weight_input(n, mixed_weight_profile(psi)));
  } else {
    circuit.append(initial_state_gates(n, ell));
  }
  circuit.append(gwdb_tree_gates(psi, tree));
  const LeafAmplitudeTable table =
      compute_leaf_amplitudes(psi, tree, result.mixed ? std::nullopt : std::optional<int>(ell));
  const std::vector<DistributionPhase> phases = distribution_phases(psi, tree, table);
  circuit.append(distribution_phase_gates(tree, phases));
  circuit.append(synthesize_leaf_encoders(table, tree, config));
  result.circuit = std::move(circuit);
  return result;
}

Circuit synthesize_full(const StateVector& psi, const SynthesisConfig& config) {
  return synthesize(psi, config).circuit;
}

// ---------------------------------------------------------------------------

namespace {

/// Uniformly controlled rotation on `target` with controls 0..target-1 (qubit 0 most significant).
void append_multiplexer(std::vector<Gate>& out, GateKind kind, int target, const std::vector<double>& angles) {
  const int c = target;
  if (std::all_of(angles.begin(), angles.end(), is_zero_angle)) return;
  auto rotation = [&](double a) {
    return kind == GateKind::MCRY ? Gate::mcry(a, {}, target) : Gate::mcrz(a, {}, target);
  };
  if (c == 0) {
    out.push_back(rotation(angles[0]));
    return;
  }
  const std::size_t size = std::size_t{1} << c;
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t gray = i ^ (i >> 1);
    double a = 0.0;
    for (std::size_t p = 0; p < size; ++p) {
      a += (std::popcount(p & gray) % 2 == 0 ? 1.0 : -1.0) * angles[p];
    }
    out.push_back(rotation(a * scale));
    const std::size_t next = (i + 1) % size;
    const std::size_t changed = gray ^ (next ^ (next >> 1));
    const int bit = std::countr_zero(changed);
    out.push_back(Gate::cx(c - 1 - bit, target));
  }
}

}  // namespace

Circuit synthesize_general_baseline(const StateVector& psi) {
  const int n = psi.num_qubits();
  const std::size_t dim = psi.dimension();
  std::vector<Gate> gates;

  // Magnitudes: target t splits each t-bit prefix between its two children.
  std::vector<double> weight(dim);
  for (std::size_t i = 0; i < dim; ++i) weight[i] = std::norm(psi[i]);
  std::vector<std::vector<double>> level(static_cast<std::size_t>(n + 1));
  level[static_cast<std::size_t>(n)] = weight;
  for (int t = n - 1; t >= 0; --t) {
    const std::vector<double>& below = level[static_cast<std::size_t>(t + 1)];
    std::vector<double> here(below.size() / 2);
    for (std::size_t p = 0; p < here.size(); ++p) here[p] = below[2 * p] + below[2 * p + 1];
    level[static_cast<std::size_t>(t)] = std::move(here);
  }
  for (int t = 0; t < n; ++t) {
    const std::vector<double>& below = level[static_cast<std::size_t>(t + 1)];
    std::vector<double> angles(below.size() / 2);
    for (std::size_t p = 0; p < angles.size(); ++p) {
      angles[p] = 2.0 * std::atan2(std::sqrt(below[2 * p + 1]), std::sqrt(below[2 * p]));
    }
    append_multiplexer(gates, GateKind::MCRY, t, angles);
  }

  // Phases: peel a diagonal from the last qubit backwards.
  const double thr = zero_threshold(psi);
  std::vector<double> omega(dim, 0.0);
  bool any_phase = false;
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::abs(psi[i]) <= thr) continue;
    omega[i] = std::arg(psi[i]);
    any_phase = any_phase || !is_zero_angle(omega[i]);
  }
  if (any_phase) {
    for (int t = n - 1; t >= 0; --t) {
      std::vector<double> angles(omega.size() / 2);
      std::vector<double> mean(omega.size() / 2);
      for (std::size_t p = 0; p < angles.size(); ++p) {
        angles[p] = omega[2 * p + 1] - omega[2 * p];
        mean[p] = 0.5 * (omega[2 * p + 1] + omega[2 * p]);
      }
      append_multiplexer(gates, GateKind::MCRZ, t, angles);
      omega = std::move(mean);
    }
  }

  Circuit c(n);
  c.metadata().k = n;
  c.metadata().ell = -1;
  c.metadata().mode = "general";
  c.append(gates);
  return c;
}

}  // namespace leafsep
