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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "leafsep/bitstring.hpp"

namespace leafsep {

using Complex = std::complex<double>;

/// Absolute tolerance on |sum |a|^2 - 1| for a normalized state.
inline constexpr double kNormTolerance = 1e-12;

/// Dense amplitude vector over n qubits, indexed by BasisString::index().
class StateVector {
 public:
  StateVector() = default;
  /// All-zero amplitudes (not normalized). Use basis() or normalize() to get a state.
  explicit StateVector(int n);
  StateVector(int n, std::vector<Complex> amplitudes);

  static StateVector basis(int n, std::uint64_t index);
  static StateVector basis(const BasisString& b) { return basis(b.size(), b.index()); }

  int num_qubits() const { return n_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  Complex operator[](std::uint64_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::uint64_t i) { return amplitudes_[i]; }
  Complex amplitude(const BasisString& b) const;

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  double norm_squared() const;
  double norm() const;
  /// Scales to unit norm. Throws std::domain_error on the zero vector.
  void normalize();
  bool is_normalized(double tol = kNormTolerance) const;

  /// True when every amplitude has |imag| <= tol.
  bool is_real(double tol = 1e-12) const;
  double max_abs() const;

  /// Hamming weights carrying amplitude above `threshold` in absolute value.
  std::vector<int> weight_support(double threshold) const;

 private:
  int n_ = 0;
  std::vector<Complex> amplitudes_;
};

/// <a|b> (conjugate-linear in a).
Complex inner_product(const StateVector& a, const StateVector& b);

/// Relative zero threshold used for reference states and dead branches.
inline constexpr double kRelativeZero = 1e-9;

inline double zero_threshold(const StateVector& psi) { return kRelativeZero * psi.max_abs(); }

}  // namespace leafsep
