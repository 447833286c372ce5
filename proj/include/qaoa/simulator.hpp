#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qaoa/circuit.hpp"
#include "qaoa/error.hpp"
#include "qaoa/graph.hpp"

namespace qaoa {

inline constexpr int kMaxSimQubits = 22;

/// Dense statevector; qubit 0 is the least significant bit of the basis
/// index.
template <typename Scalar = double>
class Statevector {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// |0...0> on n qubits.
  explicit Statevector(int n) : n_(n) {
    if (n < 0 || n > kMaxSimQubits) {
      throw Error(Errc::TooManyQubits, std::to_string(n) + " qubits exceeds the simulator cap of " +
                                           std::to_string(kMaxSimQubits));
    }
    amps_ = Vector::Zero(Eigen::Index{1} << n);
    amps_(0) = Complex(1);
  }

  static Statevector basis(int n, std::uint64_t index) {
    Statevector s(n);
    s.amps_(0) = Complex(0);
    s.amps_(static_cast<Eigen::Index>(index)) = Complex(1);
    return s;
  }

  static Statevector from_amplitudes(int n, Vector amps) {
    Statevector s(n);
    if (amps.size() != s.amps_.size()) throw Error(Errc::DimensionMismatch, "amplitude count");
    s.amps_ = std::move(amps);
    return s;
  }

  int num_qubits() const noexcept { return n_; }
  Eigen::Index dim() const noexcept { return amps_.size(); }
  const Vector& amplitudes() const noexcept { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

  void apply(const Gate& g) {
    switch (g.kind) {
      case GateKind::H: apply_h(g.target); break;
      case GateKind::RX: apply_rx(g.angle, g.target); break;
      case GateKind::RZ: apply_rz(g.angle, g.target); break;
      case GateKind::CNOT: apply_cnot(g.control, g.target); break;
    }
  }

  void apply_h(int q) {
    const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
    for_each_pair(q, [r](Complex& a, Complex& b) {
      const Complex x = a, y = b;
      a = r * (x + y);
      b = r * (x - y);
    });
  }

  void apply_rx(Scalar theta, int q) {
    const Scalar c = std::cos(theta / 2), s = std::sin(theta / 2);
    const Complex mis(0, -s);
    for_each_pair(q, [c, mis](Complex& a, Complex& b) {
      const Complex x = a, y = b;
      a = c * x + mis * y;
      b = mis * x + c * y;
    });
  }

  void apply_rz(Scalar theta, int q) {
    const Complex lo = std::polar(Scalar(1), -theta / 2);
    const Complex hi = std::polar(Scalar(1), theta / 2);
    for_each_pair(q, [lo, hi](Complex& a, Complex& b) {
      a *= lo;
      b *= hi;
    });
  }

  void apply_cnot(int control, int target) {
    const Eigen::Index cm = Eigen::Index{1} << control;
    const Eigen::Index tm = Eigen::Index{1} << target;
    for (Eigen::Index i = 0; i < dim(); ++i)
      if ((i & cm) && !(i & tm)) std::swap(amps_(i), amps_(i | tm));
  }

  /// Single-qubit Pauli: 0 = I, 1 = X, 2 = Y, 3 = Z.
  void apply_pauli(int pauli, int q) {
    switch (pauli) {
      case 1: for_each_pair(q, [](Complex& a, Complex& b) { std::swap(a, b); }); break;
      case 2:
        for_each_pair(q, [](Complex& a, Complex& b) {
          const Complex x = a;
          a = Complex(0, -1) * b;
          b = Complex(0, 1) * x;
        });
        break;
      case 3: for_each_pair(q, [](Complex&, Complex& b) { b = -b; }); break;
      default: break;
    }
  }

  Scalar norm_squared() const { return amps_.squaredNorm(); }

 private:
  template <typename F>
  void for_each_pair(int q, F&& f) {
    const Eigen::Index m = Eigen::Index{1} << q;
    for (Eigen::Index i = 0; i < dim(); ++i)
      if (!(i & m)) f(amps_(i), amps_(i | m));
  }

  int n_;
  Vector amps_;
};

template <typename Scalar = double>
Statevector<Scalar> run(const Circuit& c) {
  Statevector<Scalar> s(c.num_qubits());
  for (const auto& g : c.gates()) s.apply(g);
  return s;
}

/// |<a|b>|^2. Throws DimensionMismatch.
template <typename Scalar>
Scalar fidelity(const Statevector<Scalar>& a, const Statevector<Scalar>& b) {
  if (a.num_qubits() != b.num_qubits()) throw Error(Errc::DimensionMismatch, "qubit counts differ");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

/// Weighted cut value of every basis state, indexed like the amplitudes.
std::vector<double> cut_values(const Graph& g);

/// <H_P> measured in the computational basis: sum over edges of
/// w * Pr[endpoints differ].
template <typename Scalar>
Scalar maxcut_expectation(const Graph& g, const Statevector<Scalar>& v) {
  if (v.num_qubits() != g.num_vertices()) throw Error(Errc::DimensionMismatch, "graph/state size");
  const auto cuts = cut_values(g);
  Scalar total = 0;
  for (Eigen::Index x = 0; x < v.dim(); ++x) total += std::norm(v[x]) * static_cast<Scalar>(cuts[x]);
  return total;
}

/// Exact Max-Cut by enumerating bipartitions; throws TooLarge beyond 24
/// vertices.
double maxcut_bruteforce(const Graph& g);

struct NoiseSpec {
  /// Probability of a random non-identity two-qubit Pauli after each CNOT.
  double p_cx = 0.0;
  std::uint64_t seed = 0;
};

/// Seed of trial `index` of a Monte-Carlo run seeded with `base`.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

/// Fidelity of one Pauli trajectory against `ideal`. Fault draws are keyed by
/// (seed, qubit pair, number of later CNOTs on that pair), so one seed gives
/// aligned faults across variants of the same ansatz.
double run_noisy_trial(const Circuit& c, double p_cx, std::uint64_t seed,
                       const Statevector<double>& ideal);

/// Below this probability of any fault, run_noisy_trials averages plain
/// trajectories instead of conditioning on a fault.
inline constexpr double kMinFaultMass = 1e-3;

/// Monte-Carlo estimate of the mean trajectory fidelity. With k CNOTs the
/// fault-free branch has weight (1 - p_cx)^k and is evaluated exactly; the
/// `trials` trajectories are the first seeds trial_seed(seed, 0), (seed, 1),
/// ... that carry at least one fault. Throws InvalidTrials or
/// InvalidProbability.
double run_noisy_trials(const Circuit& c, const NoiseSpec& noise, int trials,
                        const Statevector<double>& ideal);

/// p = 1 expectation of the traditional ansatz, evaluated through the
/// diagonal phase e^{2 i gamma cut(x)} rather than gate by gate.
double p1_expectation(const Graph& g, double gamma, double beta);

struct GridResult {
  double gamma = 0.0;
  double beta = 0.0;
  double expectation = 0.0;
};

/// Best p = 1 point on a resolution x resolution grid over [0, pi]^2,
/// sampled at i * pi / resolution (resolution 1 is the corner (0, 0)). Throws TooLarge
/// beyond 12 vertices.
GridResult grid_search_p1(const Graph& g, int resolution);

std::string statevector_to_json(const Statevector<double>& v);

}  // namespace qaoa
