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

#include "leafsep/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leafsep {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::CX: return "cx";
    case GateKind::MCRY: return "mcry";
    case GateKind::MCRZ: return "mcrz";
    case GateKind::MCPHASE: return "mcphase";
    case GateKind::CRBS: return "crbs";
  }
  return "?";
}

Gate Gate::x(int target) {
  Gate g;
  g.target = target;
  return g;
}

Gate Gate::cx(int control, int target) {
  return Gate{.kind = GateKind::CX, .controls = {pos(control)}, .target = target};
}

Gate Gate::mcx(std::vector<Control> controls, int target) {
  if (controls.empty()) return x(target);
  return Gate{.kind = GateKind::CX, .controls = std::move(controls), .target = target};
}

Gate Gate::mcry(double theta, std::vector<Control> controls, int target) {
  return Gate{.kind = GateKind::MCRY, .controls = std::move(controls), .target = target, .theta = theta};
}

Gate Gate::mcrz(double phi, std::vector<Control> controls, int target) {
  return Gate{.kind = GateKind::MCRZ, .controls = std::move(controls), .target = target, .phi = phi};
}

Gate Gate::mcphase(double phi, std::vector<Control> controls, int target) {
  return Gate{.kind = GateKind::MCPHASE, .controls = std::move(controls), .target = target, .phi = phi};
}

Gate Gate::crbs(double theta, double phi, std::vector<Control> controls, int q1, int q2) {
  return Gate{.kind = GateKind::CRBS,
              .controls = std::move(controls),
              .target = q1,
              .target2 = q2,
              .theta = theta,
              .phi = phi};
}

std::vector<int> Gate::targets() const {
  if (kind == GateKind::CRBS) return {target, target2};
  return {target};
}

std::vector<int> Gate::wires() const {
  std::vector<int> out = targets();
  for (const Control& c : controls) out.push_back(c.wire);
  return out;
}

Circuit::Circuit(int n_system, int n_ancilla) : n_system_(n_system), n_ancilla_(n_ancilla) {
  if (n_system < 0 || n_ancilla < 0) throw std::invalid_argument("circuit wire counts must be nonnegative");
  metadata_.n = n_system;
}

void Circuit::append(Gate gate) {
  if (gate.kind == GateKind::CX && gate.controls.empty()) {
    throw std::invalid_argument("cx gate needs at least one control");
  }
  if (gate.kind == GateKind::X && !gate.controls.empty()) gate.kind = GateKind::CX;
  if (gate.kind == GateKind::CRBS && gate.target2 < 0) throw std::invalid_argument("crbs needs two targets");
  std::vector<int> wires = gate.wires();
  for (int w : wires) {
    if (w < 0 || w >= num_wires()) {
      throw std::invalid_argument("gate " + std::string(to_string(gate.kind)) + " touches wire " +
                                  std::to_string(w) + " outside 0.." + std::to_string(num_wires() - 1));
    }
  }
  std::sort(wires.begin(), wires.end());
  if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
    throw std::invalid_argument("gate " + std::string(to_string(gate.kind)) +
                                " repeats a wire among its controls and targets");
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(std::span<const Gate> gates) {
  for (const Gate& g : gates) append(g);
}

namespace {

long long negative_controls(const Gate& gate) {
  return std::count_if(gate.controls.begin(), gate.controls.end(), [](const Control& c) { return !c.positive; });
}

}  // namespace

long long two_qubit_cost(const Gate& gate, const CostModel& model) {
  const long long c = static_cast<long long>(gate.controls.size());
  switch (gate.kind) {
    case GateKind::X: return 0;
    case GateKind::CX: return c == 1 ? 1 : model.per_control * c;
    case GateKind::MCRY:
    case GateKind::MCRZ:
    case GateKind::MCPHASE: return c == 0 ? 0 : std::max(1LL, model.per_control * c);
    case GateKind::CRBS: return 2 + std::max(1LL, model.per_control * (c + 1));
  }
  return 0;
}

long long single_qubit_cost(const Gate& gate) {
  long long base = 0;
  switch (gate.kind) {
    case GateKind::X: base = 1; break;
    case GateKind::CX: base = 0; break;
    case GateKind::MCRY:
    case GateKind::MCRZ:
    case GateKind::MCPHASE: base = gate.controls.empty() ? 1 : 2; break;
    case GateKind::CRBS: base = 2; break;
  }
  return base + 2 * negative_controls(gate);
}

long long two_qubit_cost(std::span<const Gate> gates, const CostModel& model) {
  long long total = 0;
  for (const Gate& g : gates) total += two_qubit_cost(g, model);
  return total;
}

long long circuit_depth(const Circuit& circuit) {
  std::vector<long long> level(static_cast<std::size_t>(circuit.num_wires()), 0);
  long long depth = 0;
  for (const Gate& g : circuit.gates()) {
    long long layer = 0;
    const std::vector<int> wires = g.wires();
    for (int w : wires) layer = std::max(layer, level[static_cast<std::size_t>(w)]);
    ++layer;
    for (int w : wires) level[static_cast<std::size_t>(w)] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

CostReport cost(const Circuit& circuit, const CostModel& model) {
  CostReport report;
  for (const Gate& g : circuit.gates()) {
    const long long two = two_qubit_cost(g, model);
    report.two_qubit_count += two;
    report.total_gate_count += two + single_qubit_cost(g);
    ++report.per_kind[g.kind];
  }
  report.depth = circuit_depth(circuit);
  return report;
}

}  // namespace leafsep
