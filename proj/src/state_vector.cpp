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

#include "leafsep/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace leafsep {

namespace {

std::size_t dimension_for(int n) {
  if (n < 0 || n > 30) {
    throw std::invalid_argument("dense state vectors support 0..30 qubits, got " + std::to_string(n));
  }
  return std::size_t{1} << n;
}

}  // namespace

StateVector::StateVector(int n) : n_(n), amplitudes_(dimension_for(n)) {}

StateVector::StateVector(int n, std::vector<Complex> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dimension_for(n)) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match 2^" + std::to_string(n));
  }
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amplitudes_[index] = 1.0;
  return s;
}

Complex StateVector::amplitude(const BasisString& b) const {
  if (b.size() != n_) throw std::invalid_argument("basis string length does not match state");
  return amplitudes_[b.index()];
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (Complex& a : amplitudes_) a /= nrm;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

bool StateVector::is_real(double tol) const {
  for (const Complex& a : amplitudes_) {
    if (std::abs(a.imag()) > tol) return false;
  }
  return true;
}

double StateVector::max_abs() const {
  double m = 0.0;
  for (const Complex& a : amplitudes_) m = std::max(m, std::abs(a));
  return m;
}

std::vector<int> StateVector::weight_support(double threshold) const {
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (std::abs(amplitudes_[i]) > threshold) seen[static_cast<std::size_t>(std::popcount(i))] = true;
  }
  std::vector<int> out;
  for (int w = 0; w <= n_; ++w) {
    if (seen[static_cast<std::size_t>(w)]) out.push_back(w);
  }
  return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner_product: dimension mismatch");
  Complex total = 0.0;
  for (std::uint64_t i = 0; i < a.dimension(); ++i) total += std::conj(a[i]) * b[i];
  return total;
}

}  // namespace leafsep
