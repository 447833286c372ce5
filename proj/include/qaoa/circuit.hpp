#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

enum class GateKind { H, RX, RZ, CNOT };

/// One gate of the IR. Single-qubit gates act on `target`; CNOT uses
/// `control` as well. `angle` is meaningful for RX and RZ only.
///
/// Conventions: RZ(t) = diag(e^{-it/2}, e^{it/2}), RX(t) = exp(-i t X / 2).
struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::H, q, -1, 0.0}; }
  static Gate rx(double theta, int q) { return {GateKind::RX, q, -1, theta}; }
  static Gate rz(double theta, int q) { return {GateKind::RZ, q, -1, theta}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, t, c, 0.0}; }

  bool is_two_qubit() const noexcept { return kind == GateKind::CNOT; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(int num_qubits = 0);

  /// Throws QubitOutOfRange, ControlEqualsTarget or InvalidAngle.
  Circuit& append(const Gate& g);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Copying form of Circuit::append.
Circuit append(Circuit c, const Gate& g);

std::size_t cnot_count(const Circuit& c);
std::size_t count_kind(const Circuit& c, GateKind kind);

/// Greedy ASAP layering: each gate lands one layer after the latest layer
/// already occupied on any of its qubits.
struct DepthProfile {
  /// Layers when every gate takes one time step.
  int full_depth = 0;
  /// Layers when only CNOTs take a time step; single-qubit gates are free.
  /// Every such layer holds at least one CNOT.
  int cnot_depth = 0;
};

DepthProfile depth_profile(const Circuit& c);

/// 1-based ASAP layer of every gate, in program order.
std::vector<int> asap_layers(const Circuit& c);

/// Subset of OpenQASM 2.0: h, rx, rz, cx on a single register q.
std::string emit_qasm(const Circuit& c);
Circuit parse_qasm(std::string_view src);

}  // namespace qaoa
