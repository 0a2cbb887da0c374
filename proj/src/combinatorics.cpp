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

#include "leafsep/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leafsep {

namespace {

// Indices (not strings) of R(n, w); the prepended bit is the most significant one.
std::vector<std::uint64_t> revolving_door(int n, int w) {
  if (w == 0) return {0};
  if (w == n) return {(std::uint64_t{1} << n) - 1};
  std::vector<std::uint64_t> out = revolving_door(n - 1, w);
  const std::vector<std::uint64_t> upper = revolving_door(n - 1, w - 1);
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  out.reserve(out.size() + upper.size());
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) out.push_back(*it | top);
  return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

EhrlichSequence::EhrlichSequence(int n_bits, int weight) : n_bits_(n_bits), weight_(weight) {
  if (n_bits < 0 || n_bits > 30) throw std::invalid_argument("ehrlich_sequence: n_bits out of range");
  if (weight < 0 || weight > n_bits) {
    throw std::invalid_argument("ehrlich_sequence: weight " + std::to_string(weight) + " outside 0.." +
                                std::to_string(n_bits));
  }
  if (n_bits == 0) {
    strings_.emplace_back(0, 0);
    return;
  }
  for (std::uint64_t idx : revolving_door(n_bits, weight)) strings_.emplace_back(n_bits, idx);
}

std::size_t EhrlichSequence::position(const BasisString& b) const {
  auto it = std::find(strings_.begin(), strings_.end(), b);
  if (it == strings_.end()) throw std::out_of_range("string not in Ehrlich sequence: " + b.to_string());
  return static_cast<std::size_t>(it - strings_.begin());
}

EhrlichSequence ehrlich_sequence(int n_bits, int weight) { return EhrlichSequence(n_bits, weight); }

std::vector<int> RotationSlot::shared_zeros() const {
  std::vector<int> out;
  for (int q = 0; q < from_string.size(); ++q) {
    if (!from_string.bit(q) && !to_string.bit(q)) out.push_back(q);
  }
  return out;
}

RotationSlot controls_and_targets(const BasisString& from, const BasisString& to) {
  if (from.size() != to.size()) throw std::invalid_argument("controls_and_targets: length mismatch");
  if (hamming_weight(from) != hamming_weight(to)) {
    throw std::invalid_argument("controls_and_targets: strings have different Hamming weight");
  }
  if (hamming_distance(from, to) != 2) {
    throw std::invalid_argument("controls_and_targets: " + from.to_string() + " and " + to.to_string() +
                                " are not at Hamming distance 2");
  }
  RotationSlot slot;
  slot.from_string = from;
  slot.to_string = to;
  for (int q = 0; q < from.size(); ++q) {
    const bool a = from.bit(q);
    const bool b = to.bit(q);
    if (a && b) {
      slot.controls.push_back(q);
    } else if (a) {
      slot.q1 = q;
    } else if (b) {
      slot.q2 = q;
    }
  }
  return slot;
}

}  // namespace leafsep
