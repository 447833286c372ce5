#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qaoa/ansatz.hpp"
#include "qaoa/error_model.hpp"
#include "qaoa/graph.hpp"

namespace qaoa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kDefaultGamma = 0.4;
inline constexpr double kDefaultBeta = 0.8;
inline constexpr double kEquivalenceTolerance = 1e-10;
inline constexpr int kSweepInstances = 20;
inline constexpr int kVerifyInstances = 50;

struct RunConfig {
  std::string command;

  std::vector<std::string> graph_files;
  /// "n,p_edge,seed" generator specs.
  std::vector<std::string> gen_specs;
  std::vector<int> complete;
  std::vector<int> cycle;

  std::vector<std::string> variants;
  int p = 1;

  std::vector<double> gamma;
  std::vector<double> beta;
  std::optional<std::uint64_t> param_seed;
  std::optional<int> grid;

  std::optional<std::string> device_path;
  std::optional<double> p_cx;
  int trials = 100;
  /// Graphs per sweep cell (default 20) or verify suite size (default 50).
  std::optional<int> instances;
  int params = 20;
  std::vector<int> sizes;
  std::vector<double> p_edges;
  std::uint64_t seed = 2021;

  std::string out_dir;
  int root = 0;
  bool corrupt = false;
};

struct NamedGraph {
  std::string family;
  Graph graph;
};

/// Graphs named by --graph, --gen, --complete and --cycle, in that order.
std::vector<NamedGraph> collect_graphs(const RunConfig& cfg);

std::vector<Variant> selected_variants(const RunConfig& cfg);

/// Explicit angles, grid search (p = 1), seeded random angles, or the fixed
/// default pair, in that order of precedence.
AnsatzParams resolve_params(const RunConfig& cfg, const Graph& g);

/// One noisy-sweep configuration cell: per-instance CNOT counts and mean
/// trajectory fidelities for the three variants, indexed [instance][variant].
struct SweepCell {
  double p_edge = 0.0;
  int n = 0;
  std::vector<std::array<long long, 3>> cnots;
  std::vector<std::array<long long, 3>> cnot_layers;
  std::vector<std::array<double, 3>> fidelity;
};

SweepCell run_sweep_cell(double p_edge, int n, int instances, int trials, double p_cx,
                         const AnsatzParams& params, std::uint64_t seed);

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_noise_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_emit(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command; library errors map to kExitUsage.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qaoa::cli
