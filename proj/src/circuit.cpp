#include "qaoa/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qaoa/error.hpp"
#include "qaoa/text.hpp"

namespace qaoa {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw Error(Errc::QubitOutOfRange, "negative qubit count");
}

Circuit& Circuit::append(const Gate& g) {
  const auto in_range = [this](int q) { return q >= 0 && q < num_qubits_; };
  if (!in_range(g.target) || (g.is_two_qubit() && !in_range(g.control))) {
    throw Error(Errc::QubitOutOfRange, "gate qubit outside register of " +
                                           std::to_string(num_qubits_) + " qubits");
  }
  if (g.is_two_qubit() && g.control == g.target) {
    throw Error(Errc::ControlEqualsTarget, "cx on qubit " + std::to_string(g.target));
  }
  if (!std::isfinite(g.angle)) throw Error(Errc::InvalidAngle, "non-finite rotation angle");
  Gate stored = g;
  if (!g.is_two_qubit()) stored.control = -1;
  if (g.kind == GateKind::H || g.kind == GateKind::CNOT) stored.angle = 0.0;
  gates_.push_back(stored);
  return *this;
}

Circuit append(Circuit c, const Gate& g) {
  c.append(g);
  return c;
}

std::size_t count_kind(const Circuit& c, GateKind kind) {
  return static_cast<std::size_t>(std::count_if(
      c.gates().begin(), c.gates().end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t cnot_count(const Circuit& c) { return count_kind(c, GateKind::CNOT); }

std::vector<int> asap_layers(const Circuit& c) {
  std::vector<int> frontier(c.num_qubits(), 0);
  std::vector<int> layers;
  layers.reserve(c.size());
  for (const auto& g : c.gates()) {
    int layer = frontier[g.target];
    if (g.is_two_qubit()) layer = std::max(layer, frontier[g.control]);
    ++layer;
    frontier[g.target] = layer;
    if (g.is_two_qubit()) frontier[g.control] = layer;
    layers.push_back(layer);
  }
  return layers;
}

DepthProfile depth_profile(const Circuit& c) {
  DepthProfile p;
  for (int layer : asap_layers(c)) p.full_depth = std::max(p.full_depth, layer);

  // CNOT layers: the same greedy packing applied to the CNOTs alone.
  std::vector<int> frontier(c.num_qubits(), 0);
  for (const auto& g : c.gates()) {
    if (!g.is_two_qubit()) continue;
    const int layer = std::max(frontier[g.control], frontier[g.target]) + 1;
    frontier[g.control] = frontier[g.target] = layer;
    p.cnot_depth = std::max(p.cnot_depth, layer);
  }
  return p;
}

std::string emit_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\nqreg q[" + std::to_string(c.num_qubits()) + "];\n";
  const auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H: out += "h " + q(g.target) + ";\n"; break;
      case GateKind::RX: out += "rx(" + text::format_double(g.angle) + ") " + q(g.target) + ";\n"; break;
      case GateKind::RZ: out += "rz(" + text::format_double(g.angle) + ") " + q(g.target) + ";\n"; break;
      case GateKind::CNOT: out += "cx " + q(g.control) + "," + q(g.target) + ";\n"; break;
    }
  }
  return out;
}

namespace {

int parse_qubit_ref(std::string_view s, std::size_t lineno) {
  s = text::trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
    throw ParseError(Errc::ParseError, lineno, "expected q[i], got '" + std::string(s) + "'");
  }
  const auto idx = text::parse_int(s.substr(2, s.size() - 3));
  if (!idx) throw ParseError(Errc::ParseError, lineno, "bad qubit index");
  return static_cast<int>(*idx);
}

}  // namespace

Circuit parse_qasm(std::string_view src) {
  const auto lines = text::split_lines(src);
  std::optional<Circuit> circuit;
  bool saw_version = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    auto line = text::trim(lines[i]);
    if (line.empty() || line.substr(0, 2) == "//") continue;
    if (line.back() != ';') throw ParseError(Errc::ParseError, lineno, "missing ';'");
    line = text::trim(line.substr(0, line.size() - 1));

    if (!saw_version) {
      if (line != "OPENQASM 2.0") throw ParseError(Errc::ParseError, lineno, "expected OPENQASM 2.0");
      saw_version = true;
      continue;
    }
    if (!circuit) {
      if (line.substr(0, 5) != "qreg ") throw ParseError(Errc::ParseError, lineno, "expected qreg");
      circuit.emplace(parse_qubit_ref(line.substr(5), lineno) );
      continue;
    }

    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError(Errc::ParseError, lineno, "missing operands");
    const auto head = line.substr(0, space);
    const auto operands = line.substr(space + 1);
    try {
      if (head == "h") {
        circuit->append(Gate::h(parse_qubit_ref(operands, lineno)));
      } else if (head == "cx") {
        const auto comma = operands.find(',');
        if (comma == std::string_view::npos) throw ParseError(Errc::ParseError, lineno, "cx needs two operands");
        circuit->append(Gate::cnot(parse_qubit_ref(operands.substr(0, comma), lineno),
                                   parse_qubit_ref(operands.substr(comma + 1), lineno)));
      } else if (head.substr(0, 3) == "rx(" || head.substr(0, 3) == "rz(") {
        if (head.back() != ')') throw ParseError(Errc::ParseError, lineno, "unterminated angle");
        const auto angle = text::parse_double(head.substr(3, head.size() - 4));
        if (!angle) throw ParseError(Errc::ParseError, lineno, "bad angle");
        const int q = parse_qubit_ref(operands, lineno);
        circuit->append(head[1] == 'x' ? Gate::rx(*angle, q) : Gate::rz(*angle, q));
      } else {
        throw ParseError(Errc::ParseError, lineno, "unsupported statement '" + std::string(head) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), lineno, e.what());
    }
  }
  if (!circuit) throw ParseError(Errc::ParseError, 0, "missing header");
  return *circuit;
}

}  // namespace qaoa
