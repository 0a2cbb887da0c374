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

#include "leafsep/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "leafsep/analysis.hpp"
#include "leafsep/circuit.hpp"
#include "leafsep/experiments.hpp"
#include "leafsep/simulator.hpp"
#include "leafsep/state_io.hpp"
#include "leafsep/synthesis.hpp"

namespace leafsep {

namespace {

using nlohmann::json;

/// Raised for file-system and format problems; maps to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

StateVector load_state(const std::string& path) {
  try {
    return parse_state_json(load(path));
  } catch (const StateFormatError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  try {
    write_text_file(path, text);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

Field parse_field(const std::string& s) { return s == "complex" ? Field::complex : Field::real; }

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

// ---------------------------------------------------------------------------

struct SynthesizeArgs {
  std::string input;
  std::string out;
  int n = 0;
  int k = 0;
  int ell = -1;
  std::string mode = "free";
  bool complex = false;
  bool strict = false;
};

int run_synthesize(const SynthesizeArgs& a, std::ostream& out, std::ostream& err) {
  const StateVector psi = load_state(a.input);
  if (a.n != 0 && a.n != psi.num_qubits()) {
    err << "error: --n " << a.n << " but " << a.input << " holds " << psi.num_qubits() << " qubits\n";
    return kExitDomain;
  }
  SynthesisConfig config;
  config.n = psi.num_qubits();
  config.k = a.k;
  config.ell = a.ell;
  config.mode = a.mode == "ancilla" ? EncoderMode::per_leaf_ancilla : EncoderMode::ancilla_free;
  config.complex_phases = a.complex;
  const SynthesisResult result = synthesize(psi, config);
  for (const std::string& w : result.warnings) err << "warning: " << w << '\n';
  if (a.strict && !result.separable) return kExitDomain;
  emit(a.out, export_text(result.circuit), out);
  return kExitOk;
}

struct SimulateArgs {
  std::string circuit;
  std::string input;
  std::string target;
  std::string report;
  std::string state_out;
};

int run_simulate(const SimulateArgs& a, std::ostream& out, std::ostream&) {
  Circuit circuit;
  try {
    circuit = parse_text(load(a.circuit));
  } catch (const ParseError& e) {
    throw IoError(a.circuit + ": " + e.what());
  }
  StateVector initial;
  if (a.input.empty()) {
    initial = StateVector::basis(circuit.num_system(), 0);
  } else if (a.input.starts_with("basis:")) {
    const std::string bits = a.input.substr(6);
    if (static_cast<int>(bits.size()) != circuit.num_system()) {
      throw std::invalid_argument("basis string has " + std::to_string(bits.size()) + " bits, circuit has " +
                                  std::to_string(circuit.num_system()) + " system wires");
    }
    initial = StateVector::basis(BasisString::from_string(bits));
  } else {
    initial = load_state(a.input);
  }

  SimulationResult r;
  if (a.target.empty()) {
    r = simulate(circuit, initial);
  } else {
    r = simulate(circuit, initial, load_state(a.target));
  }
  json report;
  report["fidelity"] = r.fidelity ? json(*r.fidelity) : json(nullptr);
  report["purity"] = r.purity;
  report["norm"] = r.norm;
  report["wires"] = {{"system", r.n_system}, {"ancilla", r.n_ancilla}, {"total", r.n_system + r.n_ancilla}};
  report["wall_seconds"] = r.wall_seconds;
  emit(a.report, report.dump(2) + "\n", out);
  if (!a.state_out.empty()) emit(a.state_out, state_to_json(r.state), out);
  return kExitOk;
}

struct CheckArgs {
  std::string input;
  int n = 0;
  int k = 0;
  double tol = 1e-9;
  bool strict = false;
};

int run_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const StateVector psi = load_state(a.input);
  if (a.n != 0 && a.n != psi.num_qubits()) {
    err << "error: --n " << a.n << " but " << a.input << " holds " << psi.num_qubits() << " qubits\n";
    return kExitDomain;
  }
  const PartitionTree tree(psi.num_qubits(), a.k);
  const SeparabilityReport rep = is_leaf_separable(psi, tree, a.tol);
  json doc;
  doc["separable"] = rep.separable;
  doc["tol"] = rep.tol;
  doc["shared_leaf_states"] = rep.shared_leaf_states;
  json violations = json::array();
  for (const SeparabilityViolation& v : rep.violations) {
    violations.push_back({{"bitstring", v.basis.to_string()},
                          {"ratio", {v.ratio.real(), v.ratio.imag()}},
                          {"product", {v.product.real(), v.product.imag()}}});
  }
  doc["violations"] = std::move(violations);
  json dists = json::array();
  for (const auto& [d, c] : rep.distributions) dists.push_back({{"I", d.weights}, {"c", c}});
  doc["distributions"] = std::move(dists);
  out << doc.dump(2) << '\n';
  if (a.strict && !rep.separable) return kExitDomain;
  return kExitOk;
}

struct RandomArgs {
  int n = 4;
  int k = 2;
  int ell = -1;
  std::string field = "real";
  std::uint64_t seed = 1;
  bool mixed = false;
  std::string out;
};

int run_random(const RandomArgs& a, std::ostream& out, std::ostream&) {
  const int ell = a.ell >= 0 ? a.ell : a.n / 2;
  const StateVector psi = a.mixed ? random_mixed_leaf_separable(a.n, a.k, ell, parse_field(a.field), a.seed)
                                  : random_leaf_separable(a.n, a.k, ell, parse_field(a.field), a.seed);
  emit(a.out, state_to_json(psi), out);
  return kExitOk;
}

struct BenchArgs {
  int n_min = 4;
  int n_max = 12;
  std::vector<int> ks;
  int k_fixed = -1;
  int ell = -1;
  int states = 50;
  std::uint64_t seed = 1;
  std::string field = "real";
  std::vector<std::string> modes{"free"};
  std::vector<std::string> methods;
  std::string csv;
  std::string plot;
  int threads = 0;
  bool full_scale = false;
};

int run_bench_fidelity(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  FidelitySweepConfig config = a.full_scale ? full_scale_fidelity_config() : desk_scale_fidelity_config();
  if (!a.full_scale) config.n_values = range(a.n_min, a.n_max);
  if (!a.full_scale) config.states_per_cell = a.states;
  config.k_values = a.ks;
  config.ell = a.ell;
  config.seed = a.seed;
  config.field = parse_field(a.field);
  config.threads = a.threads;
  config.modes.clear();
  for (const std::string& m : a.modes) {
    config.modes.push_back(m == "ancilla" ? EncoderMode::per_leaf_ancilla : EncoderMode::ancilla_free);
  }
  const std::vector<FidelityCell> cells = run_fidelity_sweep(config);
  for (const FidelityCell& c : cells) {
    if (c.failures > 0) err << "warning: n=" << c.n << " k=" << c.k << ": " << c.failures << " states failed\n";
  }
  emit(a.csv, fidelity_csv(cells), out);
  if (!a.plot.empty()) emit(a.plot, fidelity_plot_spec(a.csv.empty() ? "-" : a.csv), out);
  return kExitOk;
}

int run_bench_cost(const BenchArgs& a, std::ostream& out, std::ostream&) {
  CostSweepConfig config;
  config.n_values = range(a.n_min, a.n_max);
  config.k = a.k_fixed;
  config.ell = a.ell;
  config.seed = a.seed;
  config.field = parse_field(a.field);
  config.methods = a.methods;
  config.threads = a.threads;
  const std::vector<CostRow> rows = run_cost_sweep(config);
  emit(a.csv, cost_csv(rows), out);
  if (!a.plot.empty()) emit(a.plot, cost_plot_spec(a.csv.empty() ? "-" : a.csv), out);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leaf-separable quantum state preparation"};
  app.require_subcommand(1);

  SynthesizeArgs syn;
  CLI::App* s = app.add_subcommand("synthesize", "Build a preparation circuit for a state");
  s->add_option("--input", syn.input, "state JSON")->required();
  s->add_option("--n", syn.n, "qubit count (checked against the input)");
  s->add_option("--k", syn.k, "leaf size of the partition tree")->required()->check(CLI::PositiveNumber);
  s->add_option("--ell", syn.ell, "expected Hamming weight");
  s->add_option("--mode", syn.mode, "leaf encoders")->check(CLI::IsMember({"free", "ancilla"}));
  s->add_flag("--complex", syn.complex, "allow complex amplitudes");
  s->add_flag("--strict", syn.strict, "fail on non-separable input");
  s->add_option("--out", syn.out, "circuit text output (default stdout)");

  SimulateArgs sim;
  CLI::App* m = app.add_subcommand("simulate", "Run a circuit on the dense simulator");
  m->add_option("--circuit", sim.circuit, "circuit text file")->required();
  m->add_option("--input", sim.input, "initial state: JSON file or basis:BITSTRING (default all zeros)");
  m->add_option("--target", sim.target, "target state JSON for the fidelity");
  m->add_option("--report", sim.report, "report JSON output (default stdout)");
  m->add_option("--state-out", sim.state_out, "final state JSON output");

  CheckArgs chk;
  CLI::App* c = app.add_subcommand("check-separable", "Test leaf-separability of a state");
  c->add_option("--input", chk.input, "state JSON")->required();
  c->add_option("--n", chk.n, "qubit count (checked against the input)");
  c->add_option("--k", chk.k, "leaf size")->required()->check(CLI::PositiveNumber);
  c->add_option("--tol", chk.tol, "absolute tolerance on amplitude ratios");
  c->add_flag("--strict", chk.strict, "exit 1 when the state is not separable");

  RandomArgs rnd;
  CLI::App* r = app.add_subcommand("random-state", "Sample a random leaf-separable state");
  r->add_option("--n", rnd.n)->check(CLI::Range(1, 24));
  r->add_option("--k", rnd.k)->check(CLI::PositiveNumber);
  r->add_option("--ell", rnd.ell, "weight (default floor(n/2)); max weight with --mixed");
  r->add_option("--field", rnd.field)->check(CLI::IsMember({"real", "complex"}));
  r->add_option("--seed", rnd.seed);
  r->add_flag("--mixed", rnd.mixed, "superpose every weight 0..ell");
  r->add_option("--out", rnd.out, "state JSON output (default stdout)");

  BenchArgs fid;
  CLI::App* f = app.add_subcommand("bench-fidelity", "Fidelity sweep over random states");
  f->add_option("--n-min", fid.n_min)->check(CLI::Range(1, 20));
  f->add_option("--n-max", fid.n_max)->check(CLI::Range(1, 20));
  f->add_option("--k", fid.ks, "leaf sizes (default: all 1..n)");
  f->add_option("--ell", fid.ell, "weight (default floor(n/2))");
  f->add_option("--states", fid.states, "states per cell")->check(CLI::PositiveNumber);
  f->add_option("--seed", fid.seed);
  f->add_option("--field", fid.field)->check(CLI::IsMember({"real", "complex"}));
  f->add_option("--modes", fid.modes)->check(CLI::IsMember({"free", "ancilla"}));
  f->add_option("--csv", fid.csv, "CSV output (default stdout)");
  f->add_option("--plot", fid.plot, "plot-spec JSON output");
  f->add_option("--threads", fid.threads, "worker threads (LEAFSEP_THREADS caps)");
  f->add_flag("--paper-scale", fid.full_scale, "n 4..15 with 200 states per cell");

  BenchArgs cst;
  cst.n_min = 6;
  cst.n_max = 14;
  CLI::App* g = app.add_subcommand("bench-cost", "Gate-count sweep of every method");
  g->add_option("--n-min", cst.n_min)->check(CLI::Range(1, 20));
  g->add_option("--n-max", cst.n_max)->check(CLI::Range(1, 20));
  g->add_option("--k", cst.k_fixed, "fixed leaf size (default ceil(n/2))")->check(CLI::PositiveNumber);
  g->add_option("--ell", cst.ell, "weight (default floor(n/2))");
  g->add_option("--seed", cst.seed);
  g->add_option("--field", cst.field)->check(CLI::IsMember({"real", "complex"}));
  g->add_option("--methods", cst.methods)
      ->check(CLI::IsMember({"leafsep_free", "leafsep_ancilla", "hwk_encoder", "general_baseline"}));
  g->add_option("--csv", cst.csv, "CSV output (default stdout)");
  g->add_option("--plot", cst.plot, "plot-spec JSON output");
  g->add_option("--threads", cst.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (s->parsed()) return run_synthesize(syn, out, err);
    if (m->parsed()) return run_simulate(sim, out, err);
    if (c->parsed()) return run_check(chk, out, err);
    if (r->parsed()) return run_random(rnd, out, err);
    if (f->parsed()) return run_bench_fidelity(fid, out, err);
    if (g->parsed()) return run_bench_cost(cst, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitIo;
}

}  // namespace leafsep
