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

#include "leafsep/simulator.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

namespace leafsep {

namespace {

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
};

ControlMask control_mask(const Gate& gate, int n) {
  ControlMask cm;
  for (const Control& c : gate.controls) {
    const std::uint64_t m = qubit_mask(n, c.wire);
    cm.mask |= m;
    if (c.positive) cm.value |= m;
  }
  return cm;
}

// Calls f(i0, i1) for every index pair differing only in `target`, with controls satisfied.
template <class F>
void for_each_pair(std::uint64_t dim, std::uint64_t target, const ControlMask& cm, F&& f) {
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & target) != 0 || (i & cm.mask) != cm.value) continue;
    f(i, i | target);
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
  const int n = state.num_qubits();
  for (int w : gate.wires()) {
    if (w < 0 || w >= n) throw std::invalid_argument("apply_gate: wire " + std::to_string(w) + " out of range");
  }
  const std::uint64_t dim = state.dimension();
  const ControlMask cm = control_mask(gate, n);
  const std::uint64_t t = qubit_mask(n, gate.target);
  auto amp = state.amplitudes();

  switch (gate.kind) {
    case GateKind::X:
    case GateKind::CX:
      for_each_pair(dim, t, cm, [&](std::uint64_t i0, std::uint64_t i1) { std::swap(amp[i0], amp[i1]); });
      break;
    case GateKind::MCRY: {
      const double c = std::cos(gate.theta / 2);
      const double s = std::sin(gate.theta / 2);
      for_each_pair(dim, t, cm, [&](std::uint64_t i0, std::uint64_t i1) {
        const Complex a = amp[i0];
        const Complex b = amp[i1];
        amp[i0] = c * a - s * b;
        amp[i1] = s * a + c * b;
      });
      break;
    }
    case GateKind::MCRZ: {
      const Complex p0 = std::polar(1.0, -gate.phi / 2);
      const Complex p1 = std::polar(1.0, gate.phi / 2);
      for_each_pair(dim, t, cm, [&](std::uint64_t i0, std::uint64_t i1) {
        amp[i0] *= p0;
        amp[i1] *= p1;
      });
      break;
    }
    case GateKind::MCPHASE: {
      const Complex p1 = std::polar(1.0, gate.phi);
      for_each_pair(dim, t, cm, [&](std::uint64_t, std::uint64_t i1) { amp[i1] *= p1; });
      break;
    }
    case GateKind::CRBS: {
      const std::uint64_t t2 = qubit_mask(n, gate.target2);
      const double c = std::cos(gate.theta / 2);
      const double s = std::sin(gate.theta / 2);
      const Complex plus = std::polar(1.0, gate.phi / 2);
      const Complex minus = std::conj(plus);
      for (std::uint64_t i = 0; i < dim; ++i) {
        // i is the |1_{q1} 0_{q2}> member of the pair
        if ((i & t) == 0 || (i & t2) != 0 || (i & cm.mask) != cm.value) continue;
        const std::uint64_t j = (i & ~t) | t2;
        const Complex a = amp[i];
        const Complex b = amp[j];
        amp[i] = plus * (c * a - s * b);
        amp[j] = minus * (s * a + c * b);
      }
      break;
    }
  }
}

StateVector with_ancillas(const StateVector& system, int n_ancilla) {
  if (n_ancilla == 0) return system;
  StateVector out(system.num_qubits() + n_ancilla);
  for (std::uint64_t i = 0; i < system.dimension(); ++i) out[i << n_ancilla] = system[i];
  return out;
}

double system_purity(const StateVector& full, int n_system) {
  const int n_anc = full.num_qubits() - n_system;
  if (n_anc < 0) throw std::invalid_argument("system_purity: more system wires than the state holds");
  if (n_anc == 0) return full.norm_squared() * full.norm_squared();
  const std::uint64_t da = std::uint64_t{1} << n_anc;
  const std::uint64_t ds = std::uint64_t{1} << n_system;
  // Tr(rho_sys^2) = Tr(rho_anc^2), and rho_anc = M^dagger M with M[s][a] = psi[s*da + a].
  std::vector<Complex> rho(da * da, 0.0);
  for (std::uint64_t s = 0; s < ds; ++s) {
    for (std::uint64_t a = 0; a < da; ++a) {
      const Complex x = full[s * da + a];
      if (x == 0.0) continue;
      for (std::uint64_t b = 0; b < da; ++b) rho[a * da + b] += std::conj(x) * full[s * da + b];
    }
  }
  double purity = 0.0;
  for (const Complex& r : rho) purity += std::norm(r);
  return purity;
}

double fidelity(const StateVector& a, const StateVector& b) {
  const int n_anc = a.num_qubits() - b.num_qubits();
  if (n_anc < 0) throw std::invalid_argument("fidelity: first state has fewer qubits than the second");
  if (n_anc == 0) return std::norm(inner_product(b, a));
  const std::uint64_t da = std::uint64_t{1} << n_anc;
  double total = 0.0;
  for (std::uint64_t anc = 0; anc < da; ++anc) {
    Complex overlap = 0.0;
    for (std::uint64_t s = 0; s < b.dimension(); ++s) overlap += std::conj(b[s]) * a[s * da + anc];
    total += std::norm(overlap);
  }
  return total;
}

SimulationResult simulate(const Circuit& circuit, const StateVector& initial) {
  const auto start = std::chrono::steady_clock::now();
  StateVector state;
  if (initial.num_qubits() == circuit.num_wires()) {
    state = initial;
  } else if (initial.num_qubits() == circuit.num_system()) {
    state = with_ancillas(initial, circuit.num_ancilla());
  } else {
    throw std::invalid_argument("simulate: initial state has " + std::to_string(initial.num_qubits()) +
                                " qubits but the circuit has " + std::to_string(circuit.num_system()) +
                                " system and " + std::to_string(circuit.num_ancilla()) + " ancilla wires");
  }
  for (const Gate& g : circuit.gates()) apply_gate(state, g);

  SimulationResult result;
  result.n_system = circuit.num_system();
  result.n_ancilla = circuit.num_ancilla();
  result.norm = state.norm();
  result.purity = system_purity(state, circuit.num_system());
  result.state = std::move(state);
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SimulationResult simulate(const Circuit& circuit, const StateVector& initial, const StateVector& target) {
  if (target.num_qubits() != circuit.num_system()) {
    throw std::invalid_argument("simulate: target must cover exactly the system wires");
  }
  SimulationResult result = simulate(circuit, initial);
  result.fidelity = fidelity(result.state, target);
  return result;
}

}  // namespace leafsep
