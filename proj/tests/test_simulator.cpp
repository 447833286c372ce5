#include "qaoa/simulator.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include <json.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "qaoa/ansatz.hpp"

namespace qaoa {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

Statevector<double> uniform_state(int n) {
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));
  return run(c);
}

TEST(SimulatorTest, BasicGates) {
  const auto s = uniform_state(3);
  for (Eigen::Index i = 0; i < s.dim(); ++i) EXPECT_NEAR(std::abs(s[i] - cd(1 / std::sqrt(8.0))), 0, 1e-15);

  auto one = Statevector<double>::basis(2, 0b01);
  one.apply(Gate::cnot(0, 1));
  EXPECT_EQ(one[0b11], cd(1));

  const double gamma = 0.37;
  auto excited = Statevector<double>::basis(1, 1);
  excited.apply(Gate::rz(2 * gamma, 0));
  EXPECT_NEAR(std::abs(excited[1] - std::polar(1.0, gamma)), 0, 1e-15);

  auto x = Statevector<double>(1);
  x.apply(Gate::rx(kPi, 0));
  EXPECT_NEAR(std::abs(x[1] - cd(0, -1)), 0, 1e-15);

  EXPECT_THROW(Statevector<double>(kMaxSimQubits + 1), Error);
}

TEST(SimulatorTest, NormPreservedAfterEveryGate) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(-7, 7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 7;
    std::uniform_int_distribution<int> q(0, n - 1), k(0, 3);
    Statevector<double> s(n);
    for (int i = 0; i < 60; ++i) {
      const int a = q(rng);
      int b = q(rng);
      if (b == a) b = (a + 1) % n;
      const int kind = k(rng);
      s.apply(kind == 0 ? Gate::h(a) : kind == 1 ? Gate::rx(angle(rng), a) : kind == 2 ? Gate::rz(angle(rng), a) : Gate::cnot(a, b));
      ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
  }
}

TEST(SimulatorTest, Fidelity) {
  const auto v = uniform_state(4);
  EXPECT_NEAR(fidelity(v, v), 1.0, 1e-12);
  EXPECT_EQ(fidelity(Statevector<double>::basis(1, 0), Statevector<double>::basis(1, 1)), 0.0);
  try {
    fidelity(Statevector<double>(2), Statevector<double>(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(SimulatorTest, SinglePrecisionInstantiation) {
  auto s = run<float>(build_traditional(cycle_graph(4), AnsatzParams::uniform(1, 0.3, 0.2)));
  const auto d = run<double>(build_traditional(cycle_graph(4), AnsatzParams::uniform(1, 0.3, 0.2)));
  EXPECT_NEAR(s.norm_squared(), 1.0f, 1e-5f);
  for (Eigen::Index i = 0; i < s.dim(); ++i) EXPECT_NEAR(std::abs(cd(s[i]) - d[i]), 0, 1e-5);
}

TEST(EquivalenceTest, OptimizedVariantsMatchTraditional) {
  const double ps[] = {0.4, 0.6, 0.8, 1.0};
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0, kPi);
  for (int i = 0; i < 16; ++i) {
    const auto g = erdos_renyi(3 + i % 8, ps[i % 4], 40 + static_cast<std::uint64_t>(i));
    for (int j = 0; j < 4; ++j) {
      const AnsatzParams params{{angle(rng)}, {angle(rng)}};
      const auto ideal = run(build_traditional(g, params));
      EXPECT_NEAR(fidelity(ideal, run(build_traditional(g, params, EdgeOrder::Input))), 1.0, 1e-10);
      EXPECT_GE(fidelity(ideal, run(build_edge_coloring(g, params).first)), 1.0 - 1e-10);
      EXPECT_GE(fidelity(ideal, run(build_dfs(g, params).first)), 1.0 - 1e-10);
      EXPECT_GE(fidelity(ideal, run(build_dfs(g, params, g.num_vertices() - 1).first)), 1.0 - 1e-10);
    }
  }
}

TEST(EquivalenceTest, ExactAmplitudesNotJustFidelity) {
  const auto g = complete_graph(5);
  const AnsatzParams params{{0.9, 0.4}, {0.3, 1.1}};
  const auto a = run(build_traditional(g, params));
  const auto b = run(build_dfs(g, params).first);
  EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-12);
}

TEST(EquivalenceTest, FlaggingACycleEdgeBreaksEquality) {
  const auto g = cycle_graph(4);
  const AnsatzParams params{{0.7}, {0.4}};
  auto plan = dfs_ansatz_plan(g);
  plan.schedule.back().optimized = true;
  EXPECT_FALSE(verify_schedule(g, plan.schedule));
  EXPECT_LT(fidelity(run(build_traditional(g, params)), run(lower_plan(g, plan, params))), 0.999);
}

TEST(MaxCutTest, Expectation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = erdos_renyi(2 + static_cast<int>(seed % 9), 0.5, seed);
    EXPECT_NEAR(maxcut_expectation(g, uniform_state(g.num_vertices())), g.num_edges() / 2.0, 1e-12);
    EXPECT_EQ(maxcut_expectation(g, Statevector<double>(g.num_vertices())), 0.0);
  }
  EXPECT_THROW(maxcut_expectation(cycle_graph(4), Statevector<double>(3)), Error);
}

TEST(MaxCutTest, BruteForce) {
  EXPECT_EQ(maxcut_bruteforce(cycle_graph(4)), 4.0);
  EXPECT_EQ(maxcut_bruteforce(cycle_graph(5)), 4.0);
  EXPECT_EQ(maxcut_bruteforce(complete_graph(4)), 4.0);
  Graph heavy(3);
  heavy.add_edge(0, 1, 5.0);
  heavy.add_edge(1, 2, 1.0);
  heavy.add_edge(0, 2, 1.0);
  EXPECT_EQ(maxcut_bruteforce(heavy), 6.0);
  EXPECT_THROW(maxcut_bruteforce(path_graph(25)), Error);
}

TEST(MaxCutTest, ExpectationNeverExceedsOptimum) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0, kPi);
  for (int i = 0; i < 30; ++i) {
    const auto g = erdos_renyi(3 + i % 6, 0.6, 300 + static_cast<std::uint64_t>(i));
    const AnsatzParams params{{angle(rng), angle(rng)}, {angle(rng), angle(rng)}};
    EXPECT_LE(maxcut_expectation(g, run(build_traditional(g, params))), maxcut_bruteforce(g) + 1e-9);
  }
}

TEST(GridSearchTest, FastPathMatchesGateSimulation) {
  const auto g = erdos_renyi(6, 0.6, 8);
  for (double gamma : {0.0, 0.3, 1.7, 3.0})
    for (double beta : {0.0, 0.45, 2.2}) {
      const auto state = run(build_traditional(g, AnsatzParams{{gamma}, {beta}}));
      EXPECT_NEAR(p1_expectation(g, gamma, beta), maxcut_expectation(g, state), 1e-12);
    }
}

TEST(GridSearchTest, SingleEdge) {
  const Graph edge(2, {{0, 1}});
  const auto best = grid_search_p1(edge, 200);
  EXPECT_NEAR(best.expectation, 1.0, 1e-3);
  // The grid locates the optimum; the exact point is the nearest multiple of pi/8.
  const auto snap = [](double x) { return std::round(x / (kPi / 8)) * (kPi / 8); };
  const auto state = run(build_traditional(edge, AnsatzParams{{snap(best.gamma)}, {snap(best.beta)}}));
  EXPECT_NEAR(maxcut_expectation(edge, state), 1.0, 1e-6);
}

TEST(GridSearchTest, CycleAndCorner) {
  const auto c4 = grid_search_p1(cycle_graph(4), 200);
  EXPECT_GE(c4.expectation, 3.0);
  const auto corner = grid_search_p1(cycle_graph(4), 1);
  EXPECT_EQ(corner.gamma, 0.0);
  EXPECT_EQ(corner.beta, 0.0);
  EXPECT_NEAR(corner.expectation, 2.0, 1e-12);
  EXPECT_THROW(grid_search_p1(complete_graph(13), 2), Error);
}

TEST(NoiseTest, NoiselessTrialsAreExact) {
  const auto g = complete_graph(5);
  const auto c = build_dfs(g, AnsatzParams::uniform(1, 0.4, 0.8)).first;
  const auto ideal = run(c);
  EXPECT_NEAR(run_noisy_trials(c, {0.0, 9}, 10, ideal), 1.0, 1e-12);
  EXPECT_THROW(run_noisy_trials(c, {0.0, 9}, 0, ideal), Error);
  EXPECT_THROW(run_noisy_trials(c, {1.5, 9}, 3, ideal), Error);
}

TEST(NoiseTest, SeedDeterministic) {
  const auto g = complete_graph(5);
  const auto c = build_traditional(g, AnsatzParams::uniform(1, 0.4, 0.8));
  const auto ideal = run(c);
  const NoiseSpec noise{0.05, 1234};
  const double mean = run_noisy_trials(c, noise, 40, ideal);
  EXPECT_EQ(mean, run_noisy_trials(c, noise, 40, ideal));
  EXPECT_NE(run_noisy_trials(c, {0.05, 4321}, 40, ideal), mean);
  EXPECT_EQ(run_noisy_trial(c, 0.05, 99, ideal), run_noisy_trial(c, 0.05, 99, ideal));
}

TEST(NoiseTest, FaultConditionedEstimatorByHand) {
  const auto g = cycle_graph(4);
  const auto c = build_dfs(g, AnsatzParams::uniform(1, 0.4, 0.8)).first;
  const auto ideal = run(build_traditional(g, AnsatzParams::uniform(1, 0.4, 0.8)));
  const NoiseSpec noise{0.03, 555};
  const int trials = 25;

  // Faulty seeds are the ones whose trajectory differs from the clean run.
  const double clean_fid = fidelity(ideal, run(c));
  double faulty = 0;
  int accepted = 0;
  for (std::uint64_t a = 0; accepted < trials; ++a) {
    const double f = run_noisy_trial(c, noise.p_cx, trial_seed(noise.seed, a), ideal);
    const double f_clean = run_noisy_trial(c, 0.0, trial_seed(noise.seed, a), ideal);
    ASSERT_EQ(f_clean, clean_fid);
    if (f == clean_fid) continue;  // no fault drawn (a fault that cancels exactly does not occur here)
    faulty += f;
    ++accepted;
  }
  const double clean = std::pow(1.0 - noise.p_cx, static_cast<double>(cnot_count(c)));
  EXPECT_NEAR(run_noisy_trials(c, noise, trials, ideal), clean * clean_fid + (1 - clean) * faulty / trials, 1e-12);
}

TEST(NoiseTest, FaultConditionedEstimatorIsUnbiased) {
  const auto g = complete_graph(5);
  const auto c = build_edge_coloring(g, AnsatzParams::uniform(1, 0.4, 0.8)).first;
  const auto ideal = run(c);
  const double p = 0.02;
  double plain = 0;
  constexpr int kPlain = 20'000;
  for (int t = 0; t < kPlain; ++t) plain += run_noisy_trial(c, p, trial_seed(77, t), ideal);
  plain /= kPlain;
  // Plain standard error is about 0.002 here.
  EXPECT_NEAR(run_noisy_trials(c, {p, 78}, 2'000, ideal), plain, 0.01);
}

TEST(NoiseTest, AlwaysFailingCnotMatchesPauliAverage) {
  Circuit c(2);
  c.append(Gate::h(0)).append(Gate::rx(0.7, 1)).append(Gate::cnot(0, 1));
  const auto ideal = run(c);

  // Oracle: average of |<psi|P|psi>|^2 over the 15 non-identity Paulis, with
  // explicit matrices (qubit 1 is the high factor of the Kronecker product).
  std::array<Eigen::Matrix2cd, 4> pauli;
  pauli[0] << 1, 0, 0, 1;
  pauli[1] << 0, 1, 1, 0;
  pauli[2] << 0, cd(0, -1), cd(0, 1), 0;
  pauli[3] << 1, 0, 0, -1;
  double expected = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      const Eigen::Matrix4cd p = Eigen::kroneckerProduct(pauli[b], pauli[a]);
      expected += std::norm(ideal.amplitudes().dot(p * ideal.amplitudes()));
    }
  expected /= 15;

  const double mean = run_noisy_trials(c, {1.0, 77}, 20'000, ideal);
  EXPECT_NEAR(mean, expected, 0.01);
}

TEST(NoiseTest, DfsNoWorseThanTraditionalOnK6) {
  double dfs = 0, trad = 0;
  const auto params = AnsatzParams::uniform(1, 0.4, 0.8);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto g = complete_graph(6);
    const auto t = build_traditional(g, params);
    const auto d = build_dfs(g, params, static_cast<Vertex>(i % 6)).first;
    const auto ideal = run(t);
    const NoiseSpec noise{0.01, 1000 + i};
    trad += run_noisy_trials(t, noise, 100, ideal);
    dfs += run_noisy_trials(d, noise, 100, ideal);
  }
  EXPECT_GE(dfs, trad);
}

TEST(SimulatorTest, JsonExport) {
  const auto doc = nlohmann::json::parse(statevector_to_json(Statevector<double>::basis(1, 1)));
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[1][0], 1.0);
  EXPECT_EQ(doc[1][1], 0.0);
}

}  // namespace
}  // namespace qaoa
