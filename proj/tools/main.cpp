#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using qaoa::cli::RunConfig;
  RunConfig cfg;

  CLI::App app{"Max-Cut QAOA ansatz builder with CNOT-reduction passes"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--graph", cfg.graph_files, "Edge-list file (repeatable)");
  app.add_option("--gen", cfg.gen_specs, "Erdos-Renyi spec n,p_edge,seed (repeatable)");
  app.add_option("--complete", cfg.complete, "Complete graph sizes")->delimiter(',');
  app.add_option("--cycle", cfg.cycle, "Cycle graph sizes")->delimiter(',');
  app.add_option("--variant", cfg.variants, "traditional|edge_coloring|dfs|all")->delimiter(',');
  app.add_option("--p", cfg.p, "QAOA depth")->capture_default_str();
  app.add_option("--gamma", cfg.gamma, "Problem angles, one per layer")->delimiter(',');
  app.add_option("--beta", cfg.beta, "Mixer angles, one per layer")->delimiter(',');
  app.add_option("--param-seed", cfg.param_seed, "Seed for random angles");
  app.add_option("--grid", cfg.grid, "Grid-search resolution for p=1 angles");
  app.add_option("--device", cfg.device_path, "Device profile JSON");
  app.add_option("--p-cx", cfg.p_cx, "Depolarizing probability per CNOT");
  app.add_option("--trials", cfg.trials, "Noisy trajectories per instance")->capture_default_str();
  app.add_option("--instances", cfg.instances, "Random graphs per sweep cell (20) or verify suite (50)");
  app.add_option("--params", cfg.params, "Random angle sets per graph (verify)")->capture_default_str();
  app.add_option("--sizes", cfg.sizes, "Vertex counts for noise-sweep")->delimiter(',');
  app.add_option("--p-edge", cfg.p_edges, "Edge probabilities for noise-sweep")->delimiter(',');
  app.add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  app.add_option("--out", cfg.out_dir, "Output directory (emit)");
  app.add_option("--root", cfg.root, "DFS root vertex")->capture_default_str();
  app.add_flag("--corrupt", cfg.corrupt, "Flag a non-tree edge as optimized (verify)");

  app.add_subcommand("compare", "CNOT counts and depths per variant (CSV)");
  app.add_subcommand("verify", "Statevector equivalence of the optimized ansatze");
  app.add_subcommand("noise-sweep", "Mean noisy fidelity per family, size and variant (CSV)");
  app.add_subcommand("emit", "Write QASM, plan JSON and error reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qaoa::cli::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return qaoa::cli::run_command(cfg, std::cout, std::cerr);
}
