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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leafsep/state_vector.hpp"
#include "leafsep/synthesis.hpp"

namespace leafsep {

enum class Field { real, complex };

std::string_view to_string(Field field);
std::string_view to_string(EncoderMode mode);

/// splitmix64 over (master, n, k, index); sweep cells stay reproducible under any thread count.
std::uint64_t derive_seed(std::uint64_t master, int n, int k, std::uint64_t index);

/**
 * Random leaf-separable state of weight ell for tree(n, k): one Gaussian unit
 * vector per (leaf, local weight), shared by every distribution, and
 * c(I)^2 ~ Dirichlet(1) over the valid distributions.
 */
StateVector random_leaf_separable(int n, int k, int ell, Field field, std::uint64_t seed);

/// Same construction over every total weight 0..max_weight, leaf vectors shared across weights.
StateVector random_mixed_leaf_separable(int n, int k, int max_weight, Field field, std::uint64_t seed);

/// Gaussian state on all 2^n amplitudes.
StateVector random_state(int n, Field field, std::uint64_t seed);
/// Gaussian state inside the weight-w subspace.
StateVector random_fixed_weight_state(int n, int w, Field field, std::uint64_t seed);
/// Uniform superposition of the weight-ell strings.
StateVector dicke_state(int n, int ell);

/// Worker count: `requested` if positive, else hardware concurrency, capped by LEAFSEP_THREADS.
int worker_count(int requested = 0);

struct FidelitySweepConfig {
  std::vector<int> n_values;
  std::vector<int> k_values;  ///< empty: every k in 1..n
  int ell = -1;               ///< -1: floor(n/2) per n
  int states_per_cell = 50;
  std::uint64_t seed = 1;
  Field field = Field::real;
  std::vector<EncoderMode> modes = {EncoderMode::ancilla_free};
  int threads = 0;
};

struct FidelityCell {
  int n = 0;
  int k = 0;
  int ell = 0;
  EncoderMode mode = EncoderMode::ancilla_free;
  Field field = Field::real;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;
  double min_purity = 1.0;
  int count = 0;     ///< states that synthesized and simulated
  int failures = 0;  ///< states that threw
};

/// Desk scale: n 4..12, 50 states per cell.
FidelitySweepConfig desk_scale_fidelity_config();
/// Full scale: n 4..15, 200 states per cell.
FidelitySweepConfig full_scale_fidelity_config();

std::vector<FidelityCell> run_fidelity_sweep(const FidelitySweepConfig& config);
std::string fidelity_csv(std::span<const FidelityCell> cells);
std::string fidelity_plot_spec(const std::string& csv_path);

struct CostSweepConfig {
  std::vector<int> n_values;
  int k = -1;    ///< -1: ceil(n/2) per n
  int ell = -1;  ///< -1: floor(n/2) per n
  std::uint64_t seed = 1;
  Field field = Field::real;
  std::vector<std::string> methods;  ///< empty: all four
  int threads = 0;
};

struct CostRow {
  int n = 0;
  int k = 0;
  std::string method;  ///< leafsep_free, leafsep_ancilla, hwk_encoder, general_baseline
  long long two_qubit = 0;
  long long total = 0;
  long long depth = 0;
};

std::vector<std::string> cost_methods();
std::vector<CostRow> run_cost_sweep(const CostSweepConfig& config);
std::string cost_csv(std::span<const CostRow> rows);
std::string cost_plot_spec(const std::string& csv_path);

}  // namespace leafsep
