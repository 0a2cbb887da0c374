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
#include <string_view>

namespace leafsep {

/// Maximum register width handled by the library (dense simulation caps well below this).
inline constexpr int kMaxQubits = 62;

/**
 * Fixed-length computational basis string.
 *
 * Character position 0 is the leftmost character and the most significant bit
 * of the index, so "0011" has index 3 and qubit 3 is the least significant bit.
 */
class BasisString {
 public:
  BasisString() = default;
  BasisString(int n, std::uint64_t index);

  /// Parses a string of '0'/'1' characters. Throws std::invalid_argument otherwise.
  static BasisString from_string(std::string_view bits);

  int size() const { return n_; }
  std::uint64_t index() const { return index_; }

  /// Bit at character position q (0 = leftmost).
  bool bit(int q) const;
  BasisString with_bit(int q, bool value) const;

  std::string to_string() const;

  friend bool operator==(const BasisString&, const BasisString&) = default;
  friend auto operator<=>(const BasisString&, const BasisString&) = default;

 private:
  int n_ = 0;
  std::uint64_t index_ = 0;
};

int hamming_weight(const BasisString& b);
int hamming_distance(const BasisString& a, const BasisString& b);

/// Substring of b at the given positions, in the order given.
BasisString restrict(const BasisString& b, std::span<const int> positions);

/// Bit of qubit q inside an n-qubit index (qubit 0 is the most significant bit).
inline bool index_bit(std::uint64_t index, int n, int q) {
  return ((index >> (n - 1 - q)) & 1U) != 0;
}

inline std::uint64_t qubit_mask(int n, int q) {
  return std::uint64_t{1} << (n - 1 - q);
}

}  // namespace leafsep
