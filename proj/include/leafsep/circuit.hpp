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

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leafsep {

enum class GateKind { X, CX, MCRY, MCRZ, MCPHASE, CRBS };

std::string_view to_string(GateKind kind);

/// Control on a wire; negative polarity fires when the wire is |0>.
struct Control {
  int wire = 0;
  bool positive = true;

  friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(int wire) { return {wire, true}; }
inline Control neg(int wire) { return {wire, false}; }

/**
 * One gate of the IR.
 *
 * CX carries one or more controls of either polarity (a multi-controlled X).
 * CRBS acts on the ordered pair (target, target2): with all controls satisfied,
 *   |1_t 0_t2> -> e^{i phi/2} cos(theta/2) |10> + e^{-i phi/2} sin(theta/2) |01>
 *   |0_t 1_t2> -> -e^{i phi/2} sin(theta/2) |10> + e^{-i phi/2} cos(theta/2) |01>
 * and identity on |00>, |11>.
 */
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Control> controls;
  int target = 0;
  int target2 = -1;  ///< CRBS only
  double theta = 0.0;
  double phi = 0.0;

  static Gate x(int target);
  static Gate cx(int control, int target);
  static Gate mcx(std::vector<Control> controls, int target);
  static Gate mcry(double theta, std::vector<Control> controls, int target);
  static Gate mcrz(double phi, std::vector<Control> controls, int target);
  static Gate mcphase(double phi, std::vector<Control> controls, int target);
  static Gate crbs(double theta, double phi, std::vector<Control> controls, int q1, int q2);

  std::vector<int> targets() const;
  /// Controls and targets together.
  std::vector<int> wires() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct CircuitMetadata {
  int n = 0;
  int k = 0;
  int ell = -1;  ///< -1: mixed or unspecified
  std::string mode = "none";

  friend bool operator==(const CircuitMetadata&, const CircuitMetadata&) = default;
};

/// Gate list over n_system system wires followed by n_ancilla ancilla wires.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int n_system, int n_ancilla = 0);

  int num_system() const { return n_system_; }
  int num_ancilla() const { return n_ancilla_; }
  int num_wires() const { return n_system_ + n_ancilla_; }
  int ancilla_wire(int a) const { return n_system_ + a; }

  /// Validates wire ranges and control/target disjointness; throws std::invalid_argument.
  void append(Gate gate);
  void append(std::span<const Gate> gates);

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  CircuitMetadata& metadata() { return metadata_; }
  const CircuitMetadata& metadata() const { return metadata_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_system_ = 0;
  int n_ancilla_ = 0;
  std::vector<Gate> gates_;
  CircuitMetadata metadata_;
};

/// Two-qubit cost constants. A c-controlled rotation costs per_control * c (min 1 when c >= 1).
struct CostModel {
  int per_control = 2;
};

struct CostReport {
  long long two_qubit_count = 0;
  long long total_gate_count = 0;
  long long depth = 0;
  std::map<GateKind, long long> per_kind;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

long long two_qubit_cost(const Gate& gate, const CostModel& model = {});
long long single_qubit_cost(const Gate& gate);
long long circuit_depth(const Circuit& circuit);
CostReport cost(const Circuit& circuit, const CostModel& model = {});
long long two_qubit_cost(std::span<const Gate> gates, const CostModel& model = {});

// Text interchange format -------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Canonical text form; angles with 17 significant digits.
std::string export_text(const Circuit& circuit);
Circuit parse_text(std::string_view text);

}  // namespace leafsep
