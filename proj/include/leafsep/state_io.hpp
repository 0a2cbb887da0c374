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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "leafsep/state_vector.hpp"

namespace leafsep {

/// Malformed state JSON. `what()` carries the byte offset when the JSON itself is broken.
class StateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * {"n": N, "amplitudes": [{"bitstring": "0101", "re": x, "im": y}, ...]}
 * Entries may use an integer "index" instead of "bitstring"; omitted states are zero,
 * repeated states add up.
 */
StateVector parse_state_json(std::string_view text);

/// Nonzero amplitudes only, bitstring keys, 17 significant digits.
std::string state_to_json(const StateVector& psi);

StateVector read_state_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace leafsep
