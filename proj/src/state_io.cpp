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

#include "leafsep/state_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace leafsep {

using nlohmann::json;

StateVector parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateFormatError("state JSON: parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw StateFormatError("state JSON: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw StateFormatError("state JSON: missing integer \"n\"");
  const int n = doc["n"].get<int>();
  if (n < 0 || n > 30) throw StateFormatError("state JSON: n=" + std::to_string(n) + " outside 0..30");
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw StateFormatError("state JSON: missing \"amplitudes\" array");
  }

  StateVector psi(n);
  std::size_t entry = 0;
  for (const json& a : doc["amplitudes"]) {
    const std::string where = "state JSON: amplitudes[" + std::to_string(entry++) + "]";
    if (!a.is_object()) throw StateFormatError(where + " is not an object");
    std::uint64_t index = 0;
    if (a.contains("bitstring")) {
      if (!a["bitstring"].is_string()) throw StateFormatError(where + ": bitstring must be a string");
      const std::string bits = a["bitstring"].get<std::string>();
      if (static_cast<int>(bits.size()) != n) {
        throw StateFormatError(where + ": bitstring \"" + bits + "\" has length " + std::to_string(bits.size()) +
                               ", expected " + std::to_string(n));
      }
      try {
        index = BasisString::from_string(bits).index();
      } catch (const std::exception& e) {
        throw StateFormatError(where + ": " + e.what());
      }
    } else if (a.contains("index")) {
      if (!a["index"].is_number_unsigned()) throw StateFormatError(where + ": index must be a nonnegative integer");
      index = a["index"].get<std::uint64_t>();
      if (index >= psi.dimension()) throw StateFormatError(where + ": index out of range");
    } else {
      throw StateFormatError(where + ": needs \"bitstring\" or \"index\"");
    }
    auto component = [&](const char* key) {
      if (!a.contains(key)) return 0.0;
      if (!a[key].is_number()) throw StateFormatError(where + ": \"" + key + "\" must be a number");
      return a[key].get<double>();
    };
    psi[index] += Complex(component("re"), component("im"));
  }
  return psi;
}

std::string state_to_json(const StateVector& psi) {
  json amps = json::array();
  for (std::uint64_t i = 0; i < psi.dimension(); ++i) {
    if (psi[i] == 0.0) continue;
    json entry;
    entry["bitstring"] = BasisString(psi.num_qubits(), i).to_string();
    entry["re"] = psi[i].real();
    entry["im"] = psi[i].imag();
    amps.push_back(std::move(entry));
  }
  json doc;
  doc["n"] = psi.num_qubits();
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

StateVector read_state_file(const std::filesystem::path& path) { return parse_state_json(read_text_file(path)); }

}  // namespace leafsep
