#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "qaoa/circuit.hpp"
#include "qaoa/error.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/simulator.hpp"
#include "qaoa/text.hpp"

namespace qaoa::cli {

namespace {

constexpr std::array<Variant, 3> kAllVariants{Variant::Traditional, Variant::EdgeColoring, Variant::Dfs};

std::string fmt(double x, int precision = 10) {
  std::ostringstream ss;
  ss << std::setprecision(precision) << x;
  return ss.str();
}

struct GenSpec {
  int n;
  double p_edge;
  std::uint64_t seed;
};

GenSpec parse_gen(const std::string& spec) {
  std::vector<std::string_view> parts;
  std::string_view rest = spec;
  for (auto comma = rest.find(','); comma != std::string_view::npos; comma = rest.find(',')) {
    parts.push_back(rest.substr(0, comma));
    rest = rest.substr(comma + 1);
  }
  parts.push_back(rest);
  if (parts.size() != 3) throw Error(Errc::InvalidParams, "--gen expects n,p_edge,seed");
  const auto n = text::parse_int(text::trim(parts[0]));
  const auto p = text::parse_double(text::trim(parts[1]));
  const auto seed = text::parse_int(text::trim(parts[2]));
  if (!n || !p || !seed || *seed < 0) throw Error(Errc::InvalidParams, "--gen expects n,p_edge,seed");
  return {static_cast<int>(*n), *p, static_cast<std::uint64_t>(*seed)};
}

/// CSV schema line shared by all tabular outputs.
void schema_line(std::ostream& out, std::string_view name, int version) {
  out << "# qaoa-cnot " << name << " v" << version << "\n";
}

std::uint64_t cell_seed(std::uint64_t base, double p_edge, int n) {
  const auto key = static_cast<std::uint64_t>(n) * 1009u + static_cast<std::uint64_t>(std::llround(p_edge * 1000.0));
  return trial_seed(base, key);
}

}  // namespace

std::vector<NamedGraph> collect_graphs(const RunConfig& cfg) {
  std::vector<NamedGraph> graphs;
  for (const auto& path : cfg.graph_files) graphs.push_back({"file:" + path, read_graph_file(path)});
  for (const auto& spec : cfg.gen_specs) {
    const auto gen = parse_gen(spec);
    graphs.push_back({"erdos_renyi:p=" + fmt(gen.p_edge) + ":seed=" + std::to_string(gen.seed),
                      erdos_renyi(gen.n, gen.p_edge, gen.seed)});
  }
  for (int n : cfg.complete) {
    if (n < 2) throw Error(Errc::InvalidParams, "--complete needs n >= 2");
    graphs.push_back({"complete", complete_graph(n)});
  }
  for (int n : cfg.cycle) graphs.push_back({"cycle", cycle_graph(n)});
  return graphs;
}

std::vector<Variant> selected_variants(const RunConfig& cfg) {
  if (cfg.variants.empty() || (cfg.variants.size() == 1 && cfg.variants[0] == "all")) {
    return {kAllVariants.begin(), kAllVariants.end()};
  }
  std::vector<Variant> out;
  for (const auto& name : cfg.variants) out.push_back(parse_variant(name));
  return out;
}

AnsatzParams resolve_params(const RunConfig& cfg, const Graph& g) {
  if (cfg.p < 1) throw Error(Errc::InvalidParams, "--p must be >= 1");
  if (!cfg.gamma.empty() || !cfg.beta.empty()) {
    AnsatzParams params{cfg.gamma, cfg.beta};
    if (params.gamma.size() != static_cast<std::size_t>(cfg.p) ||
        params.beta.size() != static_cast<std::size_t>(cfg.p)) {
      throw Error(Errc::InvalidParams, "--gamma and --beta need exactly p values each");
    }
    validate(params);
    return params;
  }
  if (cfg.grid) {
    if (cfg.p != 1) throw Error(Errc::InvalidParams, "--grid supports p = 1 only");
    const auto best = grid_search_p1(g, *cfg.grid);
    return {{best.gamma}, {best.beta}};
  }
  if (cfg.param_seed) {
    std::mt19937_64 rng(*cfg.param_seed);
    std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
    AnsatzParams params;
    for (int l = 0; l < cfg.p; ++l) {
      params.gamma.push_back(angle(rng));
      params.beta.push_back(angle(rng));
    }
    return params;
  }
  return AnsatzParams::uniform(cfg.p, kDefaultGamma, kDefaultBeta);
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto graphs = collect_graphs(cfg);
  if (graphs.empty()) {
    for (int n = 10; n <= 60; n += 10) graphs.push_back({"complete", complete_graph(n)});
  }
  const auto params = AnsatzParams::uniform(cfg.p, kDefaultGamma, kDefaultBeta);

  schema_line(out, "compare", 1);
  out << "family,n,m,p,traditional,edge_coloring,dfs,s_max,cnot_depth_traditional,"
         "cnot_depth_edge_coloring,cnot_depth_dfs\n";
  int status = kExitOk;
  for (const auto& [family, g] : graphs) {
    const int n = g.num_vertices();
    const long long m = g.num_edges();
    const auto trad = build_traditional(g, params);
    const auto [ec, ec_plan] = build_edge_coloring(g, params);
    const auto [dfs, dfs_plan_] = build_dfs(g, params, cfg.root);
    const auto s_max = static_cast<long long>(optimized_count(ec_plan));
    const long long k = 2 * m * cfg.p;
    const auto c_trad = static_cast<long long>(cnot_count(trad));
    const auto c_ec = static_cast<long long>(cnot_count(ec));
    const auto c_dfs = static_cast<long long>(cnot_count(dfs));
    if (c_trad != k || c_ec != k - s_max || c_dfs != k - (n - 1)) {
      err << "count identity violated for " << family << " n=" << n << "\n";
      status = kExitVerifyFailed;
    }
    out << family << ',' << n << ',' << m << ',' << cfg.p << ',' << c_trad << ',' << c_ec << ','
        << c_dfs << ',' << s_max << ',' << depth_profile(trad).cnot_depth << ','
        << depth_profile(ec).cnot_depth << ',' << depth_profile(dfs).cnot_depth << "\n";
  }
  return status;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<NamedGraph> graphs = collect_graphs(cfg);
  std::vector<std::uint64_t> graph_seeds;
  if (graphs.empty()) {
    constexpr std::array<double, 4> p_edges{0.4, 0.6, 0.8, 1.0};
    const int suite = cfg.instances.value_or(kVerifyInstances);
    for (int i = 0; i < suite; ++i) {
      const int n = 3 + i % 8;
      const double p_edge = p_edges[i % p_edges.size()];
      const auto seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(i));
      graphs.push_back({"erdos_renyi(n=" + std::to_string(n) + ",p=" + fmt(p_edge) +
                            ",seed=" + std::to_string(seed) + ")",
                        erdos_renyi(n, p_edge, seed)});
    }
  }
  const bool explicit_params = !cfg.gamma.empty() || !cfg.beta.empty() || cfg.grid.has_value();
  const auto param_base = cfg.param_seed.value_or(cfg.seed);

  long long checks = 0;
  long long failures = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [family, g] = graphs[gi];
    if (g.num_vertices() > kMaxSimQubits) {
      throw Error(Errc::TooManyQubits, family + " exceeds the simulator cap");
    }
    auto ec_plan = edge_coloring_plan(g);
    auto dfs_plan_ = dfs_ansatz_plan(g, cfg.root);
    if (cfg.corrupt) {
      // Flag the first non-tree edge: both its endpoints are already touched.
      for (auto& s : dfs_plan_.schedule)
        if (!s.optimized) {
          s.optimized = true;
          break;
        }
    }
    const bool schedules_ok = verify_schedule(g, ec_plan.schedule) && verify_schedule(g, dfs_plan_.schedule);

    std::vector<AnsatzParams> param_sets;
    if (explicit_params) {
      param_sets.push_back(resolve_params(cfg, g));
    } else {
      std::mt19937_64 rng(trial_seed(param_base, gi));
      std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
      for (int j = 0; j < cfg.params; ++j) {
        AnsatzParams params;
        for (int l = 0; l < cfg.p; ++l) {
          params.gamma.push_back(angle(rng));
          params.beta.push_back(angle(rng));
        }
        param_sets.push_back(std::move(params));
      }
    }

    double worst = 1.0;
    for (const auto& params : param_sets) {
      const auto ideal = run(build_traditional(g, params));
      for (const auto* plan : {&ec_plan, &dfs_plan_}) {
        const double f = fidelity(ideal, run(lower_plan(g, *plan, params)));
        worst = std::min(worst, f);
        ++checks;
        if (!(f >= 1.0 - kEquivalenceTolerance)) ++failures;
      }
    }
    const bool ok = worst >= 1.0 - kEquivalenceTolerance;
    out << (ok ? "PASS " : "FAIL ") << family << " n=" << g.num_vertices() << " m=" << g.num_edges()
        << " min_fidelity=" << fmt(worst, 17) << (schedules_ok ? "" : " schedule=invalid") << "\n";
    if (!ok) err << "equivalence failure: " << family << "\n" << serialize_graph(g);
  }
  out << "verify: " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

SweepCell run_sweep_cell(double p_edge, int n, int instances, int trials, double p_cx,
                         const AnsatzParams& params, std::uint64_t seed) {
  SweepCell cell;
  cell.p_edge = p_edge;
  cell.n = n;
  const auto base = cell_seed(seed, p_edge, n);
  for (int i = 0; i < instances; ++i) {
    const auto graph_seed = trial_seed(base, static_cast<std::uint64_t>(i));
    const Graph g = erdos_renyi(n, p_edge, graph_seed);
    // Every variant sees the same trajectory seeds (common random numbers).
    const NoiseSpec noise{p_cx, trial_seed(graph_seed, 0xC0FFEEu)};
    const auto ideal = run(build_traditional(g, params));
    std::array<long long, 3> counts{};
    std::array<long long, 3> layers{};
    std::array<double, 3> fid{};
    for (std::size_t v = 0; v < kAllVariants.size(); ++v) {
      const auto circuit = build(g, kAllVariants[v], params).first;
      counts[v] = static_cast<long long>(cnot_count(circuit));
      layers[v] = depth_profile(circuit).cnot_depth;
      fid[v] = run_noisy_trials(circuit, noise, trials, ideal);
    }
    cell.cnots.push_back(counts);
    cell.cnot_layers.push_back(layers);
    cell.fidelity.push_back(fid);
  }
  return cell;
}

int cmd_noise_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.trials <= 0) throw Error(Errc::InvalidTrials, "--trials must be positive");
  const int instances = cfg.instances.value_or(kSweepInstances);
  if (instances <= 0) throw Error(Errc::InvalidParams, "--instances must be positive");
  std::optional<DeviceParams> device;
  if (cfg.device_path) device = read_device_file(*cfg.device_path);
  const double p_cx = cfg.p_cx ? *cfg.p_cx : device ? device->p_cx : 0.01;
  if (!(p_cx >= 0.0 && p_cx <= 1.0)) throw Error(Errc::InvalidProbability, "--p-cx must lie in [0,1]");

  std::vector<int> sizes = cfg.sizes;
  if (sizes.empty())
    for (int n = 4; n <= 10; ++n) sizes.push_back(n);
  std::vector<double> p_edges = cfg.p_edges;
  if (p_edges.empty()) p_edges = {0.4, 0.6, 0.8, 1.0};
  const auto params = [&] {
    RunConfig c = cfg;
    c.grid.reset();
    return resolve_params(c, Graph(1));
  }();

  schema_line(out, "noise-sweep", 1);
  out << "family,p_edge,n,variant,instances,trials,p_cx,mean_cnots,mean_cnot_layers,"
         "mean_pauli_fidelity,mean_fidelity\n";
  for (double p_edge : p_edges)
    for (int n : sizes) {
      const auto cell = run_sweep_cell(p_edge, n, instances, cfg.trials, p_cx, params, cfg.seed);
      for (std::size_t v = 0; v < kAllVariants.size(); ++v) {
        double cnots = 0, layers = 0, pauli = 0, total = 0;
        for (std::size_t i = 0; i < cell.fidelity.size(); ++i) {
          const double relax = device ? std::exp(-static_cast<double>(cell.cnot_layers[i][v]) *
                                                 device->t_cx_ns / device->t1_ns)
                                      : 1.0;
          cnots += static_cast<double>(cell.cnots[i][v]);
          layers += static_cast<double>(cell.cnot_layers[i][v]);
          pauli += cell.fidelity[i][v];
          total += cell.fidelity[i][v] * relax;
        }
        const double k = static_cast<double>(cell.fidelity.size());
        out << (p_edge == 1.0 ? "complete" : "erdos_renyi") << ',' << fmt(p_edge) << ',' << n << ','
            << to_string(kAllVariants[v]) << ',' << instances << ',' << cfg.trials << ','
            << fmt(p_cx) << ',' << fmt(cnots / k) << ',' << fmt(layers / k) << ','
            << fmt(pauli / k) << ',' << fmt(total / k) << "\n";
      }
    }
  return kExitOk;
}

int cmd_emit(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto graphs = collect_graphs(cfg);
  if (graphs.size() != 1) throw Error(Errc::InvalidParams, "emit needs exactly one graph source");
  const Graph& g = graphs.front().graph;
  if (cfg.out_dir.empty()) throw Error(Errc::InvalidParams, "emit needs --out DIR");
  if (!std::filesystem::is_directory(cfg.out_dir)) {
    throw Error(Errc::Io, "output directory '" + cfg.out_dir + "' does not exist");
  }
  const DeviceParams device = cfg.device_path ? read_device_file(*cfg.device_path) : DeviceParams{};
  const auto params = resolve_params(cfg, g);
  const auto baseline = build_traditional(g, params);
  const auto dir = std::filesystem::path(cfg.out_dir);

  for (const auto v : selected_variants(cfg)) {
    const auto [circuit, plan] = build(g, v, params, cfg.root);
    const std::string name(to_string(v));
    const auto write = [&](const std::string& file, const std::string& body) {
      const auto path = (dir / file).string();
      text::write_file(path, body);
      out << "wrote " << path << "\n";
    };
    write("circuit_" + name + ".qasm", emit_qasm(circuit));
    write("plan_" + name + ".json",
          v == Variant::Dfs ? dfs_plan_to_json(dfs_plan(g, cfg.root)) : coloring_to_json(g, misra_gries_color(g)));
    write("schedule_" + name + ".json", plan_to_json(plan));
    write("error_report_" + name + ".json", report_to_json(report(baseline, circuit, device)));
  }
  return kExitOk;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "compare") return cmd_compare(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "noise-sweep") return cmd_noise_sweep(cfg, out, err);
    if (cfg.command == "emit") return cmd_emit(cfg, out, err);
    err << "unknown command '" << cfg.command << "'\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qaoa::cli
