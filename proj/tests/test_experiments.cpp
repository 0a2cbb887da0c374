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

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "doctest.h"
#include "leafsep/analysis.hpp"
#include "leafsep/experiments.hpp"
#include "oracles.hpp"

using namespace leafsep;

TEST_CASE("seed derivation is a pure function of its inputs") {
  CHECK(derive_seed(1, 4, 2, 0) == derive_seed(1, 4, 2, 0));
  std::set<std::uint64_t> seen;
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (std::uint64_t i = 0; i < 5; ++i) seen.insert(derive_seed(9, n, k, i));
  CHECK(seen.size() == 21 * 5);
}

TEST_CASE("generator golden vector (4, 2, 2, real, seed 7)") {
  const StateVector psi = random_leaf_separable(4, 2, 2, Field::real, 7);
  const std::vector<std::pair<std::uint64_t, double>> golden = {
      {0b0011, 0.82156359593214423},   {0b0101, 0.0304857097549357},    {0b0110, 0.029725695826240357},
      {0b1001, -0.089669346735838262}, {0b1010, -0.087433874672235873}, {0b1100, 0.55455837218745152},
  };
  double mass = 0.0;
  for (auto [index, value] : golden) {
    CHECK(std::abs(psi[index] - value) < 1e-15);
    mass += value * value;
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);
}

TEST_CASE("generated states are leaf-separable (1000 samples, n <= 12)") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int ell = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    const Field f = (rng() & 1U) ? Field::complex : Field::real;
    const StateVector psi = random_leaf_separable(n, k, ell, f, rng());
    CHECK(psi.is_normalized());
    CHECK(psi.weight_support(1e-14) == std::vector<int>{ell});
    if (f == Field::real) CHECK(psi.is_real(0.0));
    const auto report = is_leaf_separable(psi, PartitionTree(n, k), 1e-9);
    CHECK(report.separable);
    CHECK(report.shared_leaf_states);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("a single valid distribution gives a product across leaves") {
  // weight n on tree(n, k): every leaf is full
  const StateVector full = random_leaf_separable(6, 2, 6, Field::complex, 1);
  CHECK(std::abs(std::abs(full[63]) - 1.0) < 1e-12);
  // weight 1 on one leaf of size 1 next to nothing else: still one class per leaf choice
  const StateVector one = random_leaf_separable(3, 3, 1, Field::real, 2);
  CHECK(oracle::separable_by_factorization(one, 3, 1e-12));
  CHECK(is_leaf_separable(one, PartitionTree(3, 3)).separable);
}

TEST_CASE("mixed generator covers each weight up to the cap") {
  const StateVector psi = random_mixed_leaf_separable(8, 4, 4, Field::complex, 3);
  CHECK(psi.is_normalized());
  CHECK(psi.weight_support(1e-14) == std::vector<int>{0, 1, 2, 3, 4});
  const auto report = is_leaf_separable(psi, PartitionTree(8, 4));
  CHECK(report.separable);
  CHECK(report.shared_leaf_states);
}

TEST_CASE("reference states") {
  const StateVector d = dicke_state(5, 2);
  for (std::uint64_t i = 0; i < 32; ++i) {
    CHECK(std::abs(d[i] - (std::popcount(i) == 2 ? 1.0 / std::sqrt(10.0) : 0.0)) < 1e-15);
  }
  const StateVector w = random_fixed_weight_state(6, 3, Field::complex, 4);
  CHECK(w.is_normalized());
  CHECK(w.weight_support(1e-14) == std::vector<int>{3});
  const StateVector g = random_state(4, Field::real, 4);
  CHECK(g.is_normalized());
  CHECK(g.is_real());
  CHECK(random_state(4, Field::real, 4)[5] == g[5]);
}

TEST_CASE("worker count honours the thread cap") {
  CHECK(worker_count(3) >= 1);
  setenv("LEAFSEP_THREADS", "2", 1);
  CHECK(worker_count(8) == 2);
  CHECK(worker_count(1) == 1);
  unsetenv("LEAFSEP_THREADS");
  CHECK(worker_count(5) == 5);
}

TEST_CASE("fidelity sweep is independent of the thread count") {
  FidelitySweepConfig cfg;
  cfg.n_values = {4, 5, 6};
  cfg.states_per_cell = 6;
  cfg.seed = 77;
  cfg.modes = {EncoderMode::ancilla_free, EncoderMode::per_leaf_ancilla};
  cfg.threads = 1;
  const std::string one = fidelity_csv(run_fidelity_sweep(cfg));
  cfg.threads = 4;
  const std::string four = fidelity_csv(run_fidelity_sweep(cfg));
  CHECK(one == four);
  CHECK(one.rfind("n,k,ell,mode,field,seed,mean_fidelity,min_fidelity,max_fidelity,std_fidelity,count\n", 0) == 0);
}

TEST_CASE("fidelity sweep cells") {
  FidelitySweepConfig cfg;
  cfg.n_values = {6};
  cfg.k_values = {3};
  cfg.states_per_cell = 8;
  cfg.field = Field::complex;
  const auto cells = run_fidelity_sweep(cfg);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].count == 8);
  CHECK(cells[0].failures == 0);
  CHECK(cells[0].ell == 3);
  CHECK(cells[0].min > 1 - 1e-9);
  CHECK(cells[0].max <= 1 + 1e-12);
  CHECK(cells[0].min_purity > 1 - 1e-9);
}

TEST_CASE("empty sweeps give header-only tables") {
  CHECK(run_fidelity_sweep(FidelitySweepConfig{}).empty());
  CHECK(fidelity_csv({}) == "n,k,ell,mode,field,seed,mean_fidelity,min_fidelity,max_fidelity,std_fidelity,count\n");
  CHECK(run_cost_sweep(CostSweepConfig{}).empty());
  CHECK(cost_csv({}) == "n,k,method,two_qubit,total,depth\n");
}

TEST_CASE("plot specs are json naming the csv") {
  CHECK(fidelity_plot_spec("f.csv").find("\"f.csv\"") != std::string::npos);
  CHECK(cost_plot_spec("c.csv").find("\"c.csv\"") != std::string::npos);
}

TEST_CASE("ancilla mode never costs more than the ancilla-free mode") {
  CostSweepConfig cfg;
  cfg.n_values = {4, 5, 6, 7, 8, 9, 10, 11, 12};
  cfg.methods = {"leafsep_free", "leafsep_ancilla"};
  for (Field f : {Field::real, Field::complex}) {
    cfg.field = f;
    const auto rows = run_cost_sweep(cfg);
    REQUIRE(rows.size() == 2 * cfg.n_values.size());
    for (std::size_t i = 0; i < rows.size(); i += 2) {
      CHECK(rows[i].n == rows[i + 1].n);
      CHECK(rows[i + 1].two_qubit <= rows[i].two_qubit);
    }
  }
}

namespace {

std::vector<long long> ancilla_costs(const std::vector<int>& ns, int k, int ell) {
  CostSweepConfig cfg;
  cfg.n_values = ns;
  cfg.k = k;
  cfg.ell = ell;
  cfg.methods = {"leafsep_ancilla"};
  std::vector<long long> out;
  for (const CostRow& r : run_cost_sweep(cfg)) out.push_back(r.two_qubit);
  return out;
}

}  // namespace

TEST_CASE("doubling n at fixed small k roughly doubles the two-qubit count") {
  for (int k : {2, 3}) {
    const auto c = ancilla_costs({6, 7, 8, 12, 14, 16}, k, 1);
    for (std::size_t i = 0; i < 3; ++i) {
      const double ratio = static_cast<double>(c[i + 3]) / static_cast<double>(c[i]);
      CHECK(std::abs(ratio - 2.0) <= 0.15 * 2.0);
    }
  }
}

TEST_CASE("two-qubit count is affine in n at fixed k") {
  for (int k : {2, 3}) {
    std::vector<int> ns;
    for (int n = 2 * k; n <= 14; ++n) ns.push_back(n);
    const auto c = ancilla_costs(ns, k, k);
    // least-squares line through (n, cost)
    const double m = static_cast<double>(ns.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const double x = ns[i], y = static_cast<double>(c[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / m;
    CHECK(slope > 0.0);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const double fit = slope * ns[i] + icpt;
      CHECK(std::abs(static_cast<double>(c[i]) - fit) <= 0.15 * static_cast<double>(c[i]));
    }
  }
}
