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

#include "leafsep/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "leafsep/circuit.hpp"
#include "leafsep/partition_tree.hpp"
#include "leafsep/simulator.hpp"

namespace leafsep {

std::string_view to_string(Field field) { return field == Field::real ? "real" : "complex"; }

std::string_view to_string(EncoderMode mode) { return mode == EncoderMode::ancilla_free ? "free" : "ancilla"; }

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Complex sample(std::mt19937_64& rng, Field field) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = field == Field::complex ? normal(rng) : 0.0;
  return {re, im};
}

// Unit vector over the 2^size local strings of a leaf, supported on weight w.
std::vector<Complex> random_leaf_vector(int size, int w, Field field, std::mt19937_64& rng) {
  std::vector<Complex> v(std::size_t{1} << size, 0.0);
  double norm = 0.0;
  while (!(norm > 1e-6)) {
    norm = 0.0;
    for (std::size_t g = 0; g < v.size(); ++g) {
      if (std::popcount(g) != w) continue;
      v[g] = sample(rng, field);
      norm += std::norm(v[g]);
    }
  }
  // Gauge: the first supported string carries a real positive amplitude. With c(I) >= 0
  // this leaves no relative phase between distributions.
  const auto first = std::find_if(v.begin(), v.end(), [](const Complex& x) { return x != 0.0; });
  const Complex scale = field == Field::real ? Complex(std::copysign(1.0, first->real()) / std::sqrt(norm))
                                             : std::polar(1.0 / std::sqrt(norm), -std::arg(*first));
  for (Complex& x : v) x *= scale;
  return v;
}

StateVector assemble_leaf_separable(int n, int k, const std::vector<int>& totals, Field field, std::uint64_t seed) {
  const PartitionTree tree(n, k);
  std::mt19937_64 rng(seed);
  // leaf_vectors[u][i]: shared by every distribution that puts weight i on leaf u
  std::vector<std::vector<std::vector<Complex>>> leaf_vectors(tree.num_leaves());
  for (std::size_t u = 0; u < tree.num_leaves(); ++u) {
    const int size = tree.leaf(u).size;
    for (int i = 0; i <= size; ++i) leaf_vectors[u].push_back(random_leaf_vector(size, i, field, rng));
  }
  std::map<WeightDistribution, double> coeff;
  std::exponential_distribution<double> exponential(1.0);
  double sum = 0.0;
  for (int total : totals) {
    for (const WeightDistribution& d : enumerate_weight_distributions(tree.leaf_sizes(), total)) {
      const double e = exponential(rng);
      coeff[d] = e;
      sum += e;
    }
  }
  if (coeff.empty()) throw std::invalid_argument("no valid weight distribution for the requested weights");
  for (auto& [d, c] : coeff) c = std::sqrt(c / sum);

  StateVector psi(n);
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    const auto it = coeff.find(weight_distribution_of(i, tree));
    if (it == coeff.end()) continue;
    Complex a = it->second;
    for (std::size_t u = 0; u < tree.num_leaves(); ++u) {
      const PartitionTree::Node& leaf = tree.leaf(u);
      const std::uint64_t local = (i >> (n - leaf.first - leaf.size)) & ((std::uint64_t{1} << leaf.size) - 1);
      a *= leaf_vectors[u][static_cast<std::size_t>(it->first[u])][local];
    }
    psi[i] = a;
  }
  psi.normalize();
  return psi;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, int n, int k, std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t h = splitmix64(state);
  for (std::uint64_t part : {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), index}) {
    state = h ^ part;
    h = splitmix64(state);
  }
  return h;
}

StateVector random_leaf_separable(int n, int k, int ell, Field field, std::uint64_t seed) {
  if (ell < 0 || ell > n) throw std::invalid_argument("random_leaf_separable: weight out of range");
  return assemble_leaf_separable(n, k, {ell}, field, seed);
}

StateVector random_mixed_leaf_separable(int n, int k, int max_weight, Field field, std::uint64_t seed) {
  if (max_weight < 0 || max_weight > n) throw std::invalid_argument("random_mixed_leaf_separable: weight out of range");
  std::vector<int> totals;
  for (int w = 0; w <= max_weight; ++w) totals.push_back(w);
  return assemble_leaf_separable(n, k, totals, field, seed);
}

StateVector random_state(int n, Field field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StateVector psi(n);
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) psi[i] = sample(rng, field);
  psi.normalize();
  return psi;
}

StateVector random_fixed_weight_state(int n, int w, Field field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StateVector psi(n);
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (std::popcount(i) == w) psi[i] = sample(rng, field);
  }
  psi.normalize();
  return psi;
}

StateVector dicke_state(int n, int ell) {
  StateVector psi(n);
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (std::popcount(i) == ell) psi[i] = 1.0;
  }
  psi.normalize();
  return psi;
}

int worker_count(int requested) {
  int workers = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("LEAFSEP_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) workers = std::min(workers, limit);
  }
  return std::max(1, workers);
}

namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads. Results go to caller-owned slots.
template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const int spawn = std::min<int>(workers, static_cast<int>(count)) - 1;
  std::vector<std::jthread> pool;
  for (int t = 0; t < spawn; ++t) pool.emplace_back(run);
  run();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

FidelitySweepConfig desk_scale_fidelity_config() {
  FidelitySweepConfig c;
  for (int n = 4; n <= 12; ++n) c.n_values.push_back(n);
  return c;
}

FidelitySweepConfig full_scale_fidelity_config() {
  FidelitySweepConfig c;
  for (int n = 4; n <= 15; ++n) c.n_values.push_back(n);
  c.states_per_cell = 200;
  return c;
}

std::vector<FidelityCell> run_fidelity_sweep(const FidelitySweepConfig& config) {
  struct Task {
    std::size_t cell;
    std::uint64_t seed;
  };
  std::vector<FidelityCell> cells;
  std::vector<Task> tasks;
  for (int n : config.n_values) {
    std::vector<int> ks = config.k_values;
    if (ks.empty()) {
      for (int k = 1; k <= n; ++k) ks.push_back(k);
    }
    const int ell = config.ell >= 0 ? config.ell : n / 2;
    for (int k : ks) {
      if (k < 1 || k > n || ell > n) continue;
      for (EncoderMode mode : config.modes) {
        FidelityCell cell;
        cell.n = n;
        cell.k = k;
        cell.ell = ell;
        cell.mode = mode;
        cell.field = config.field;
        cell.seed = config.seed;
        cells.push_back(cell);
        for (int s = 0; s < config.states_per_cell; ++s) {
          // the state depends on (n, k, s) only, so every mode sees the same targets
          tasks.push_back({cells.size() - 1, derive_seed(config.seed, n, k, static_cast<std::uint64_t>(s))});
        }
      }
    }
  }

  struct Outcome {
    bool ok = false;
    double fidelity = 0.0;
    double purity = 1.0;
  };
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), worker_count(config.threads), [&](std::size_t t) {
    const FidelityCell& cell = cells[tasks[t].cell];
    try {
      const StateVector psi = random_leaf_separable(cell.n, cell.k, cell.ell, cell.field, tasks[t].seed);
      SynthesisConfig sc;
      sc.n = cell.n;
      sc.k = cell.k;
      sc.mode = cell.mode;
      sc.complex_phases = cell.field == Field::complex;
      const Circuit circuit = synthesize_full(psi, sc);
      const SimulationResult r = simulate(circuit, StateVector::basis(cell.n, 0), psi);
      outcomes[t] = {true, *r.fidelity, r.purity};
    } catch (const std::exception&) {
      outcomes[t] = {};
    }
  });

  std::vector<std::vector<double>> values(cells.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    FidelityCell& cell = cells[tasks[t].cell];
    if (!outcomes[t].ok) {
      ++cell.failures;
      continue;
    }
    values[tasks[t].cell].push_back(outcomes[t].fidelity);
    cell.min_purity = std::min(cell.min_purity, outcomes[t].purity);
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::vector<double>& v = values[c];
    FidelityCell& cell = cells[c];
    cell.count = static_cast<int>(v.size());
    if (v.empty()) continue;
    double sum = 0.0;
    for (double x : v) sum += x;
    cell.mean = sum / static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - cell.mean) * (x - cell.mean);
    cell.stddev = std::sqrt(var / static_cast<double>(v.size()));
    cell.min = *std::min_element(v.begin(), v.end());
    cell.max = *std::max_element(v.begin(), v.end());
  }
  return cells;
}

std::string fidelity_csv(std::span<const FidelityCell> cells) {
  std::ostringstream os;
  os << "n,k,ell,mode,field,seed,mean_fidelity,min_fidelity,max_fidelity,std_fidelity,count\n";
  for (const FidelityCell& c : cells) {
    os << c.n << ',' << c.k << ',' << c.ell << ',' << to_string(c.mode) << ',' << to_string(c.field) << ','
       << c.seed << ',' << fmt(c.mean) << ',' << fmt(c.min) << ',' << fmt(c.max) << ',' << fmt(c.stddev) << ','
       << c.count << '\n';
  }
  return os.str();
}

std::string fidelity_plot_spec(const std::string& csv_path) {
  nlohmann::json spec;
  spec["data"] = csv_path;
  spec["mark"] = "line";
  spec["x"] = {{"field", "n"}, {"title", "qubits"}};
  spec["y"] = {{"field", "mean_fidelity"}, {"title", "mean fidelity"}, {"domain", {0.0, 1.0}}};
  spec["series"] = "k";
  spec["facet"] = {"mode", "field"};
  spec["error"] = {{"low", "min_fidelity"}, {"high", "max_fidelity"}};
  return spec.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

std::vector<std::string> cost_methods() { return {"leafsep_free", "leafsep_ancilla", "hwk_encoder", "general_baseline"}; }

std::vector<CostRow> run_cost_sweep(const CostSweepConfig& config) {
  const std::vector<std::string> methods = config.methods.empty() ? cost_methods() : config.methods;
  for (const std::string& m : methods) {
    if (std::find(cost_methods().begin(), cost_methods().end(), m) == cost_methods().end()) {
      throw std::invalid_argument("unknown cost method '" + m + "'");
    }
  }
  std::vector<CostRow> rows;
  for (int n : config.n_values) {
    const int k = config.k > 0 ? std::min(config.k, n) : (n + 1) / 2;
    for (const std::string& m : methods) rows.push_back(CostRow{n, k, m, 0, 0, 0});
  }
  parallel_for(rows.size(), worker_count(config.threads), [&](std::size_t r) {
    CostRow& row = rows[r];
    const int ell = config.ell >= 0 ? config.ell : row.n / 2;
    const StateVector psi = random_leaf_separable(row.n, row.k, ell, config.field, derive_seed(config.seed, row.n, row.k, 0));
    Circuit circuit;
    if (row.method == "general_baseline") {
      circuit = synthesize_general_baseline(psi);
    } else if (row.method == "hwk_encoder") {
      circuit = synthesize_hwk_baseline(psi, ell);
    } else {
      SynthesisConfig sc;
      sc.n = row.n;
      sc.k = row.k;
      sc.complex_phases = config.field == Field::complex;
      sc.mode = row.method == "leafsep_ancilla" ? EncoderMode::per_leaf_ancilla : EncoderMode::ancilla_free;
      circuit = synthesize_full(psi, sc);
    }
    const CostReport report = cost(circuit);
    row.two_qubit = report.two_qubit_count;
    row.total = report.total_gate_count;
    row.depth = report.depth;
  });
  return rows;
}

std::string cost_csv(std::span<const CostRow> rows) {
  std::ostringstream os;
  os << "n,k,method,two_qubit,total,depth\n";
  for (const CostRow& r : rows) {
    os << r.n << ',' << r.k << ',' << r.method << ',' << r.two_qubit << ',' << r.total << ',' << r.depth << '\n';
  }
  return os.str();
}

std::string cost_plot_spec(const std::string& csv_path) {
  nlohmann::json spec;
  spec["data"] = csv_path;
  spec["mark"] = "line";
  spec["x"] = {{"field", "n"}, {"title", "qubits"}};
  spec["y"] = {{"field", "two_qubit"}, {"title", "two-qubit gates"}, {"scale", "log"}};
  spec["series"] = "method";
  return spec.dump(2) + "\n";
}

}  // namespace leafsep
