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

#include <optional>

#include "leafsep/circuit.hpp"
#include "leafsep/state_vector.hpp"

namespace leafsep {

struct SimulationResult {
  StateVector state;  ///< over system + ancilla wires
  int n_system = 0;
  int n_ancilla = 0;
  double norm = 0.0;
  /// Tr(rho_sys^2) of the system register after tracing out ancillas.
  double purity = 1.0;
  std::optional<double> fidelity;  ///< against the target, when one was given
  double wall_seconds = 0.0;
};

/// Applies one gate in place. The state must span exactly the gate's wire space.
void apply_gate(StateVector& state, const Gate& gate);

/**
 * Runs the circuit. `initial` may cover all wires or only the system wires,
 * in which case ancillas start in |0>. Throws std::invalid_argument on a
 * wire mismatch.
 */
SimulationResult simulate(const Circuit& circuit, const StateVector& initial);
SimulationResult simulate(const Circuit& circuit, const StateVector& initial, const StateVector& target);

/// Pads a system-register state with n_ancilla |0> wires (ancillas are the low-order bits).
StateVector with_ancillas(const StateVector& system, int n_ancilla);

/**
 * Phase-insensitive overlap |<b|a>|^2. When `a` has more qubits than `b`, the
 * surplus trailing wires are treated as ancillas and traced out, giving <b|rho_sys|b>.
 */
double fidelity(const StateVector& a, const StateVector& b);

/// Purity of the first n_system wires of a pure state over more wires.
double system_purity(const StateVector& full, int n_system);

}  // namespace leafsep
