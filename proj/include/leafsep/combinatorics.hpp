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
#include <vector>

#include "leafsep/bitstring.hpp"

namespace leafsep {

/**
 * All weight-w strings on n_bits positions, ordered so consecutive strings
 * differ in exactly two positions, starting at 0^{n-w}1^w.
 *
 * The order is the revolving-door code R(n,w) = R(n-1,w)|0 ++ reverse(R(n-1,w-1))|1,
 * where the new bit is the leftmost character. Every producer and consumer of
 * Ehrlich-ordered amplitude lists goes through this one function.
 */
class EhrlichSequence {
 public:
  EhrlichSequence(int n_bits, int weight);

  int n_bits() const { return n_bits_; }
  int weight() const { return weight_; }
  std::size_t size() const { return strings_.size(); }
  const BasisString& operator[](std::size_t i) const { return strings_[i]; }
  const std::vector<BasisString>& strings() const { return strings_; }
  auto begin() const { return strings_.begin(); }
  auto end() const { return strings_.end(); }

  /// Position of b in the sequence; throws std::out_of_range when absent.
  std::size_t position(const BasisString& b) const;

 private:
  int n_bits_;
  int weight_;
  std::vector<BasisString> strings_;
};

EhrlichSequence ehrlich_sequence(int n_bits, int weight);

std::uint64_t binomial(int n, int k);

/// A two-position rotation between strings at Hamming distance 2.
struct RotationSlot {
  std::vector<int> controls;  ///< positions where both strings hold '1'
  int q1 = -1;                ///< position where from_string holds '1'
  int q2 = -1;                ///< position where to_string holds '1'
  BasisString from_string;
  BasisString to_string;

  /// Positions where both strings hold '0'.
  std::vector<int> shared_zeros() const;
};

/// Throws std::invalid_argument unless the strings have equal weight and distance 2.
RotationSlot controls_and_targets(const BasisString& from, const BasisString& to);

}  // namespace leafsep
