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

#include "leafsep/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace leafsep {

BasisString::BasisString(int n, std::uint64_t index) : n_(n), index_(index) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("basis string length out of range: " + std::to_string(n));
  }
  if (n < 64 && index >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("basis index " + std::to_string(index) + " does not fit in " +
                                std::to_string(n) + " bits");
  }
}

BasisString BasisString::from_string(std::string_view bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("basis string too long");
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis string may only contain '0' and '1': \"" +
                                  std::string(bits) + "\"");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BasisString(static_cast<int>(bits.size()), index);
}

bool BasisString::bit(int q) const {
  if (q < 0 || q >= n_) {
    throw std::out_of_range("qubit position " + std::to_string(q) + " outside basis string of length " +
                            std::to_string(n_));
  }
  return index_bit(index_, n_, q);
}

BasisString BasisString::with_bit(int q, bool value) const {
  if (q < 0 || q >= n_) throw std::out_of_range("qubit position out of range");
  const std::uint64_t mask = qubit_mask(n_, q);
  return BasisString(n_, value ? (index_ | mask) : (index_ & ~mask));
}

std::string BasisString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int q = 0; q < n_; ++q) {
    if (index_bit(index_, n_, q)) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

int hamming_weight(const BasisString& b) { return std::popcount(b.index()); }

int hamming_distance(const BasisString& a, const BasisString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  return std::popcount(a.index() ^ b.index());
}

BasisString restrict(const BasisString& b, std::span<const int> positions) {
  std::uint64_t index = 0;
  for (int q : positions) {
    index = (index << 1) | static_cast<std::uint64_t>(b.bit(q));
  }
  return BasisString(static_cast<int>(positions.size()), index);
}

}  // namespace leafsep
