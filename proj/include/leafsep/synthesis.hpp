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

#include <span>
#include <string>
#include <vector>

#include "leafsep/analysis.hpp"
#include "leafsep/circuit.hpp"
#include "leafsep/partition_tree.hpp"
#include "leafsep/state_vector.hpp"

namespace leafsep {

enum class EncoderMode { ancilla_free, per_leaf_ancilla };

/// In ancilla mode, whether each leaf may fall back to the ancilla-free gates when those cost less.
enum class AncillaPolicy { when_cheaper, always };

/**
 * Ancilla marker shape. `exact` fires only on the untouched weight-j pattern
 * (negative control on the last '0', positive on the j trailing ones) and
 * resets the ancilla at the end. `single_control` is the bare negative-controlled
 * CX from the last-'0' position, with no reset.
 */
enum class MarkerStyle { exact, single_control };

/// Order in which a leaf's weight classes are encoded. Only `ascending` is correct in ancilla mode.
enum class ClassOrder { ascending, descending };

struct SynthesisConfig {
  int n = 0;
  int k = 1;
  int ell = -1;  ///< target weight; -1 picks it from the state (or mixed mode)
  EncoderMode mode = EncoderMode::ancilla_free;
  bool complex_phases = false;
  AncillaPolicy ancilla_policy = AncillaPolicy::when_cheaper;
  MarkerStyle marker = MarkerStyle::exact;
  ClassOrder class_order = ClassOrder::ascending;
};

/// How the rotations of a fixed-weight encoder are confined.
enum class EncoderControls {
  full_pattern,  ///< shared ones positive, shared zeros negative
  shared_ones,   ///< shared ones only; exact when the register holds a single weight
};

/// X on the last ell qubits: |0^{n-ell} 1^ell>.
std::vector<Gate> initial_state_gates(int n, int ell);
Circuit synthesize_initial(int n, int ell);

/**
 * Weight-transfer ladder at an internal node for incoming weight `ell`.
 *
 * Step i moves one excitation from the leftmost '1' of the right child to the
 * rightmost '0' of the left child. Boundary controls pin the pair of
 * (left, right) weights, so states of other weights pass through untouched.
 * `angles` has one entry per split i = 0..ell-1; zero angles emit nothing.
 */
std::vector<Gate> synthesize_gwdb(const PartitionTree& tree, int node, int ell, std::span<const double> angles);

/// Splitting ladders for every internal node and every incoming weight with support, parents first.
std::vector<Gate> gwdb_tree_gates(const StateVector& psi, const PartitionTree& tree);
Circuit synthesize_gwdb_tree(const StateVector& psi, const PartitionTree& tree, int ell);

/**
 * Relative phases between weight distributions, applied on the per-leaf
 * |0^{n_u-i_u} 1^{i_u}> patterns left by the splitting tree.
 */
std::vector<Gate> distribution_phase_gates(const PartitionTree& tree, std::span<const DistributionPhase> phases);

/**
 * Fixed-weight encoder on `wires` (left to right), mapping |0^{m-w} 1^w> to
 * sum_g eta(g) |g>. Each CRBS carries the rotation's slot controls plus
 * `extra_controls`; a final MCPHASE fixes the last phase when it is nonzero.
 */
std::vector<Gate> synthesize_hwk_encoder(std::span<const int> wires, int w, std::span<const Complex> etas,
                                         const std::vector<Control>& extra_controls = {},
                                         EncoderControls scheme = EncoderControls::full_pattern);

/// Standalone encoder baseline for a single-weight state: X gates plus one encoder over all n qubits.
Circuit synthesize_hwk_baseline(const StateVector& psi, int ell);

/// Encoders for every (leaf, weight) in the table. Ancilla mode uses wire n + u for leaf u.
std::vector<Gate> synthesize_leaf_encoders(const LeafAmplitudeTable& table, const PartitionTree& tree,
                                           const SynthesisConfig& config);

/// RY staircase preparing sum_ell alpha_ell |0^{n-ell} 1^ell> from |0^n>.
std::vector<Gate> synthesize_mixed_weight_input(int n, std::span<const double> profile);

struct SynthesisResult {
  Circuit circuit;
  bool separable = true;
  bool mixed = false;
  std::vector<std::string> warnings;
};

/**
 * Full pipeline: initial state (or mixed-weight chain), splitting tree,
 * distribution phases, leaf encoders. Non-separable input proceeds with a
 * warning. Throws std::domain_error on complex input without complex_phases,
 * unnormalized input, or a weight mismatch with config.ell.
 */
SynthesisResult synthesize(const StateVector& psi, const SynthesisConfig& config);
Circuit synthesize_full(const StateVector& psi, const SynthesisConfig& config);

/**
 * Uniformly controlled rotation cascade for an arbitrary state. Each c-control
 * multiplexer becomes 2^c uncontrolled rotations and 2^c CX. Phases (when any
 * amplitude is not real positive) come from a trailing RZ cascade; the global
 * phase is dropped.
 */
Circuit synthesize_general_baseline(const StateVector& psi);

}  // namespace leafsep
