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

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "leafsep/circuit.hpp"

namespace leafsep {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string format_angle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string wire_name(const Circuit& c, int wire) {
  if (wire < c.num_system()) return "q" + std::to_string(wire);
  return "a" + std::to_string(wire - c.num_system());
}

std::string control_list(const Circuit& c, const std::vector<Control>& controls) {
  std::string out = "[";
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (i > 0) out += ',';
    out += wire_name(c, controls[i].wire);
    out += controls[i].positive ? '+' : '-';
  }
  out += ']';
  return out;
}

}  // namespace

std::string export_text(const Circuit& circuit) {
  const CircuitMetadata& md = circuit.metadata();
  std::ostringstream os;
  os << "# format=1\n";
  os << "# n=" << circuit.num_system() << " k=" << md.k << " ell=" << (md.ell < 0 ? std::string("mixed") : std::to_string(md.ell))
     << " mode=" << md.mode << " ancilla=" << circuit.num_ancilla() << '\n';
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::X: os << "x " << wire_name(circuit, g.target); break;
      case GateKind::CX:
        if (g.controls.size() == 1 && g.controls[0].positive) {
          os << "cx " << wire_name(circuit, g.controls[0].wire) << ' ' << wire_name(circuit, g.target);
        } else {
          os << "mcx " << control_list(circuit, g.controls) << ' ' << wire_name(circuit, g.target);
        }
        break;
      case GateKind::MCRY:
        os << "mcry(" << format_angle(g.theta) << ") " << control_list(circuit, g.controls) << ' '
           << wire_name(circuit, g.target);
        break;
      case GateKind::MCRZ:
        os << "mcrz(" << format_angle(g.phi) << ") " << control_list(circuit, g.controls) << ' '
           << wire_name(circuit, g.target);
        break;
      case GateKind::MCPHASE:
        os << "mcphase(" << format_angle(g.phi) << ") " << control_list(circuit, g.controls) << ' '
           << wire_name(circuit, g.target);
        break;
      case GateKind::CRBS:
        os << "crbs(" << format_angle(g.theta) << ',' << format_angle(g.phi) << ") "
           << control_list(circuit, g.controls) << ' ' << wire_name(circuit, g.target) << ' '
           << wire_name(circuit, g.target2);
        break;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

/// Cursor over one line; columns are 1-based in diagnostics.
class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no_, static_cast<int>(pos_) + 1, msg); }

  void skip_spaces() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_spaces();
    return pos_ >= line_.size();
  }
  void expect(char c) {
    if (pos_ >= line_.size() || line_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (pos_ < line_.size() && line_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < line_.size() && std::isalpha(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    if (start == pos_) fail("expected gate name");
    return line_.substr(start, pos_ - start);
  }
  double number() {
    const std::string rest(line_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }
  int wire(int n_system, int n_ancilla) {
    skip_spaces();
    if (pos_ >= line_.size()) fail("expected a wire name");
    const char kind = line_[pos_];
    if (kind != 'q' && kind != 'a') fail("wire names start with 'q' or 'a'");
    const std::size_t start = pos_;
    ++pos_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(line_.data() + pos_, line_.data() + line_.size(), value);
    if (ec != std::errc() || value < 0) {
      pos_ = start;
      fail("malformed wire name");
    }
    pos_ = static_cast<std::size_t>(ptr - line_.data());
    const int limit = kind == 'q' ? n_system : n_ancilla;
    if (value >= limit) {
      pos_ = start;
      fail(std::string(1, kind) + std::to_string(value) + " is out of range");
    }
    return kind == 'q' ? value : n_system + value;
  }
  std::vector<Control> controls(int n_system, int n_ancilla) {
    skip_spaces();
    expect('[');
    std::vector<Control> out;
    skip_spaces();
    if (accept(']')) return out;
    while (true) {
      const int w = wire(n_system, n_ancilla);
      if (accept('+')) {
        out.push_back(pos(w));
      } else if (accept('-')) {
        out.push_back(neg(w));
      } else {
        fail("control needs a '+' or '-' polarity");
      }
      skip_spaces();
      if (accept(']')) return out;
      expect(',');
      skip_spaces();
    }
  }

 private:
  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Circuit parse_text(std::string_view text) {
  std::map<std::string, std::string> header;
  std::optional<Circuit> circuit;
  int line_no = 0;
  std::size_t start = 0;
  auto ensure_circuit = [&](int ln) -> Circuit& {
    if (!circuit) {
      if (!header.contains("n")) throw ParseError(ln, 1, "gate before the '# n=...' header line");
      int n = 0;
      int ancilla = 0;
      try {
        n = std::stoi(header.at("n"));
        if (header.contains("ancilla")) ancilla = std::stoi(header.at("ancilla"));
      } catch (const std::exception&) {
        throw ParseError(ln, 1, "malformed header values");
      }
      if (n < 0 || ancilla < 0) throw ParseError(ln, 1, "negative wire count in header");
      circuit.emplace(n, ancilla);
      CircuitMetadata& md = circuit->metadata();
      md.n = n;
      try {
        if (header.contains("k")) md.k = std::stoi(header.at("k"));
        if (header.contains("ell")) md.ell = header.at("ell") == "mixed" ? -1 : std::stoi(header.at("ell"));
      } catch (const std::exception&) {
        throw ParseError(ln, 1, "malformed header values");
      }
      if (header.contains("mode")) md.mode = header.at("mode");
    }
    return *circuit;
  };

  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;

    LineScanner sc(line, line_no);
    if (sc.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      std::istringstream is{std::string(line.substr(1))};
      std::string token;
      while (is >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "format" && value != "1") throw ParseError(line_no, 1, "unsupported format version " + value);
        if (circuit && (key == "n" || key == "ancilla")) throw ParseError(line_no, 1, "header after gates");
        header[key] = value;
      }
      if (end == text.size()) break;
      continue;
    }

    Circuit& c = ensure_circuit(line_no);
    const int ns = c.num_system();
    const int na = c.num_ancilla();
    sc.skip_spaces();
    const std::string name(sc.identifier());
    Gate gate;
    if (name == "x") {
      gate = Gate::x(sc.wire(ns, na));
    } else if (name == "cx") {
      const int control = sc.wire(ns, na);
      gate = Gate::cx(control, sc.wire(ns, na));
    } else if (name == "mcx") {
      auto controls = sc.controls(ns, na);
      if (controls.empty()) sc.fail("mcx needs at least one control");
      gate = Gate::mcx(std::move(controls), sc.wire(ns, na));
    } else if (name == "mcry" || name == "mcrz" || name == "mcphase") {
      sc.expect('(');
      const double angle = sc.number();
      sc.expect(')');
      auto controls = sc.controls(ns, na);
      const int target = sc.wire(ns, na);
      if (name == "mcry") gate = Gate::mcry(angle, std::move(controls), target);
      if (name == "mcrz") gate = Gate::mcrz(angle, std::move(controls), target);
      if (name == "mcphase") gate = Gate::mcphase(angle, std::move(controls), target);
    } else if (name == "crbs") {
      sc.expect('(');
      const double theta = sc.number();
      sc.expect(',');
      const double phi = sc.number();
      sc.expect(')');
      auto controls = sc.controls(ns, na);
      const int q1 = sc.wire(ns, na);
      gate = Gate::crbs(theta, phi, std::move(controls), q1, sc.wire(ns, na));
    } else {
      throw ParseError(line_no, 1, "unknown gate '" + name + "'");
    }
    if (!sc.at_end()) sc.fail("trailing characters");
    try {
      c.append(std::move(gate));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, 1, e.what());
    }
    if (end == text.size()) break;
  }
  if (!circuit) return ensure_circuit(line_no);
  return *circuit;
}

}  // namespace leafsep
