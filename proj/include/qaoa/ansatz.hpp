#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/optimizer.hpp"

namespace qaoa {

/// QAOA angles; gamma[l] drives problem layer l, beta[l] the mixer after it.
struct AnsatzParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  int depth() const noexcept { return static_cast<int>(gamma.size()); }

  static AnsatzParams uniform(int p, double gamma, double beta);
};

/// Throws InvalidParams unless p >= 1, |gamma| == |beta| and all angles are
/// finite.
void validate(const AnsatzParams& params);

enum class Variant { Traditional, EdgeColoring, Dfs };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

/// Edge order used by traditional (unoptimized) problem layers.
enum class EdgeOrder {
  /// Graph input order.
  Input,
  /// Misra-Gries color classes, largest first; each class is vertex-disjoint
  /// and so occupies a single edge-operator layer.
  ColorClasses,
};

/// Edge-operator schedule for the first problem layer. Later layers always
/// use the traditional schedule.
struct AnsatzPlan {
  Variant variant = Variant::Traditional;
  Schedule schedule;
  /// Unoptimized edges that nevertheless had a fresh endpoint. Reported only;
  /// the circuit does not exploit them.
  int opportunistic = 0;
};

int optimized_count(const AnsatzPlan& plan);

Schedule traditional_schedule(const Graph& g, EdgeOrder order = EdgeOrder::ColorClasses);

AnsatzPlan traditional_plan(const Graph& g, EdgeOrder order = EdgeOrder::ColorClasses);
/// S_max first, every edge of it optimized; remaining classes by size.
AnsatzPlan edge_coloring_plan(const Graph& g);
/// DFS tree edges first (parent controls, child is the target), then the
/// residual matchings. Throws Disconnected.
AnsatzPlan dfs_ansatz_plan(const Graph& g, Vertex root = 0);
AnsatzPlan make_plan(const Graph& g, Variant v, Vertex root = 0);

/// Lowers a plan to gates: H on every qubit, then per layer the edge
/// gadgets followed by RX(2 beta) on every qubit. An unoptimized edge emits
/// CX, RZ(2 gamma w) on the target, CX; an optimized one drops the first CX.
Circuit lower_plan(const Graph& g, const AnsatzPlan& plan, const AnsatzParams& params,
                   EdgeOrder later_layers = EdgeOrder::ColorClasses);

Circuit build_traditional(const Graph& g, const AnsatzParams& params,
                          EdgeOrder order = EdgeOrder::ColorClasses);
std::pair<Circuit, AnsatzPlan> build_edge_coloring(const Graph& g, const AnsatzParams& params);
std::pair<Circuit, AnsatzPlan> build_dfs(const Graph& g, const AnsatzParams& params, Vertex root = 0);
std::pair<Circuit, AnsatzPlan> build(const Graph& g, Variant v, const AnsatzParams& params,
                                     Vertex root = 0);

/// The first problem layer alone, without H and mixers. Used for depth
/// accounting.
Circuit problem_layer(const Graph& g, const AnsatzPlan& plan, double gamma);

std::string plan_to_json(const AnsatzPlan& plan);

}  // namespace qaoa
