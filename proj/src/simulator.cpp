#include "qaoa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include <json.hpp>

namespace qaoa {

std::vector<double> cut_values(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw Error(Errc::TooLarge, "cut table limited to 24 vertices");
  std::vector<double> cuts(std::size_t{1} << n, 0.0);
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    const double w = g.weight(i);
    for (std::size_t x = 0; x < cuts.size(); ++x)
      if (((x >> e.u) ^ (x >> e.v)) & 1u) cuts[x] += w;
  }
  return cuts;
}

double maxcut_bruteforce(const Graph& g) {
  if (g.num_vertices() > 24) throw Error(Errc::TooLarge, "brute force limited to 24 vertices");
  const auto cuts = cut_values(g);
  double best = 0.0;
  for (double c : cuts) best = std::max(best, c);
  return best;
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Fault draws are keyed by the CNOT's qubit pair and the number of later
// CNOTs on that pair, so the closing CNOT of an edge gadget gets the same key
// in every variant of one ansatz.
struct CnotKey {
  std::size_t gate;
  std::uint64_t key;
};

std::vector<CnotKey> cnot_keys(const Circuit& c) {
  std::vector<CnotKey> keys;
  std::map<std::pair<int, int>, std::uint64_t> later;
  const auto& gates = c.gates();
  for (std::size_t i = gates.size(); i-- > 0;) {
    const auto& g = gates[i];
    if (g.kind != GateKind::CNOT) continue;
    const std::pair pair{std::min(g.control, g.target), std::max(g.control, g.target)};
    const auto pair_id = static_cast<std::uint64_t>(pair.first) << 32 | static_cast<std::uint32_t>(pair.second);
    keys.push_back({i, trial_seed(pair_id, later[pair]++)});
  }
  std::reverse(keys.begin(), keys.end());
  return keys;
}

double unit(std::uint64_t z) { return static_cast<double>(z >> 11) * 0x1.0p-53; }

std::uint64_t fault_word(std::uint64_t seed, const CnotKey& k) { return trial_seed(seed, k.key); }

bool any_fault(const std::vector<CnotKey>& keys, double p_cx, std::uint64_t seed) {
  return std::any_of(keys.begin(), keys.end(), [&](const CnotKey& k) { return unit(fault_word(seed, k)) < p_cx; });
}

double trajectory(const Circuit& c, const std::vector<CnotKey>& keys, double p_cx, std::uint64_t seed,
                  const Statevector<double>& ideal) {
  Statevector<double> s(c.num_qubits());
  auto next = keys.begin();
  const auto& gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    s.apply(g);
    if (next == keys.end() || next->gate != i) continue;
    const auto word = fault_word(seed, *next++);
    if (unit(word) < p_cx) {
      // 1..15 indexes the non-identity Paulis P_low (x) P_high on the pair.
      const int k = 1 + static_cast<int>(unit(trial_seed(word, 0)) * 15.0);
      s.apply_pauli(k % 4, std::min(g.control, g.target));
      s.apply_pauli(k / 4, std::max(g.control, g.target));
    }
  }
  return fidelity(ideal, s);
}

}  // namespace

double run_noisy_trial(const Circuit& c, double p_cx, std::uint64_t seed,
                       const Statevector<double>& ideal) {
  return trajectory(c, cnot_keys(c), p_cx, seed, ideal);
}

double run_noisy_trials(const Circuit& c, const NoiseSpec& noise, int trials,
                        const Statevector<double>& ideal) {
  if (trials <= 0) throw Error(Errc::InvalidTrials, "trials must be positive");
  if (!(noise.p_cx >= 0.0 && noise.p_cx <= 1.0)) {
    throw Error(Errc::InvalidProbability, "p_cx must lie in [0,1]");
  }
  const auto keys = cnot_keys(c);
  const double clean = std::pow(1.0 - noise.p_cx, static_cast<double>(keys.size()));
  const double fault_mass = 1.0 - clean;

  if (fault_mass < kMinFaultMass || clean == 0.0) {
    double sum = 0.0;
    for (int t = 0; t < trials; ++t)
      sum += trajectory(c, keys, noise.p_cx, trial_seed(noise.seed, static_cast<std::uint64_t>(t)), ideal);
    return sum / trials;
  }

  // Split on "at least one fault": the fault-free branch is weighted exactly
  // and the trials are spent on trajectories that carry a fault.
  double sum = 0.0;
  std::uint64_t attempt = 0;
  for (int accepted = 0; accepted < trials; ++attempt) {
    const auto seed = trial_seed(noise.seed, attempt);
    if (!any_fault(keys, noise.p_cx, seed)) continue;
    sum += trajectory(c, keys, noise.p_cx, seed, ideal);
    ++accepted;
  }
  return clean * fidelity(ideal, run<double>(c)) + fault_mass * sum / trials;
}

double p1_expectation(const Graph& g, double gamma, double beta) {
  const int n = g.num_vertices();
  const auto cuts = cut_values(g);
  const double amp = 1.0 / std::sqrt(static_cast<double>(cuts.size()));
  Statevector<double>::Vector v(static_cast<Eigen::Index>(cuts.size()));
  for (std::size_t x = 0; x < cuts.size(); ++x)
    v(static_cast<Eigen::Index>(x)) = std::polar(amp, 2.0 * gamma * cuts[x]);
  auto s = Statevector<double>::from_amplitudes(n, std::move(v));
  for (int q = 0; q < n; ++q) s.apply_rx(2.0 * beta, q);
  double total = 0.0;
  for (Eigen::Index x = 0; x < s.dim(); ++x) total += std::norm(s[x]) * cuts[x];
  return total;
}

GridResult grid_search_p1(const Graph& g, int resolution) {
  if (g.num_vertices() > 12) throw Error(Errc::TooLarge, "grid search limited to 12 vertices");
  if (resolution < 1) throw Error(Errc::InvalidParams, "resolution must be >= 1");
  // Half-open grid: the problem layer is pi-periodic in gamma for integer
  // weights and the mixer is pi-periodic in beta, so the endpoint pi repeats 0.
  const auto point = [resolution](int i) { return std::numbers::pi * i / resolution; };
  GridResult best{0.0, 0.0, -1.0};
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      const double value = p1_expectation(g, point(i), point(j));
      if (value > best.expectation) best = {point(i), point(j), value};
    }
  return best;
}

std::string statevector_to_json(const Statevector<double>& v) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.dim(); ++i) arr.push_back({v[i].real(), v[i].imag()});
  return arr.dump();
}

}  // namespace qaoa
