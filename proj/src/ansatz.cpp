#include "qaoa/ansatz.hpp"

#include <cmath>

#include <json.hpp>

#include "qaoa/error.hpp"

namespace qaoa {

AnsatzParams AnsatzParams::uniform(int p, double gamma, double beta) {
  return {std::vector<double>(p, gamma), std::vector<double>(p, beta)};
}

void validate(const AnsatzParams& params) {
  if (params.gamma.empty()) throw Error(Errc::InvalidParams, "QAOA depth p must be >= 1");
  if (params.gamma.size() != params.beta.size()) {
    throw Error(Errc::InvalidParams, "gamma and beta must both have p entries");
  }
  for (double a : params.gamma)
    if (!std::isfinite(a)) throw Error(Errc::InvalidParams, "non-finite gamma");
  for (double a : params.beta)
    if (!std::isfinite(a)) throw Error(Errc::InvalidParams, "non-finite beta");
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Traditional: return "traditional";
    case Variant::EdgeColoring: return "edge_coloring";
    case Variant::Dfs: return "dfs";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "traditional" || name == "trad") return Variant::Traditional;
  if (name == "edge_coloring" || name == "edge-coloring" || name == "ec") return Variant::EdgeColoring;
  if (name == "dfs") return Variant::Dfs;
  throw Error(Errc::InvalidParams, "unknown variant '" + std::string(name) + "'");
}

int optimized_count(const AnsatzPlan& plan) {
  int k = 0;
  for (const auto& s : plan.schedule) k += s.optimized ? 1 : 0;
  return k;
}

namespace {

ScheduledEdge plain(const Edge& e) { return {e.u, e.v, false}; }

}  // namespace

Schedule traditional_schedule(const Graph& g, EdgeOrder order) {
  Schedule s;
  s.reserve(g.edges().size());
  if (order == EdgeOrder::Input) {
    for (const auto& e : g.edges()) s.push_back(plain(e));
    return s;
  }
  const auto classes = color_classes(g, misra_gries_color(g));
  for (const auto& cls : classes.classes)
    for (int i : cls) s.push_back(plain(g.edges()[i]));
  return s;
}

AnsatzPlan traditional_plan(const Graph& g, EdgeOrder order) {
  return {Variant::Traditional, traditional_schedule(g, order), 0};
}

AnsatzPlan edge_coloring_plan(const Graph& g) {
  AnsatzPlan plan{Variant::EdgeColoring, {}, 0};
  const auto classes = color_classes(g, misra_gries_color(g));
  for (std::size_t k = 0; k < classes.classes.size(); ++k)
    for (int i : classes.classes[k]) {
      auto entry = plain(g.edges()[i]);
      entry.optimized = (k == 0);
      plan.schedule.push_back(entry);
    }
  plan.opportunistic = count_opportunistic(g, plan.schedule);
  return plan;
}

AnsatzPlan dfs_ansatz_plan(const Graph& g, Vertex root) {
  AnsatzPlan plan{Variant::Dfs, {}, 0};
  const auto dfs = dfs_plan(g, root);
  for (const auto& t : dfs.tree_edges) plan.schedule.push_back({t.u, t.v, true});
  for (const auto& layer : dfs.residual_layers)
    for (const auto& e : layer) plan.schedule.push_back(plain(e));
  plan.opportunistic = count_opportunistic(g, plan.schedule);
  return plan;
}

AnsatzPlan make_plan(const Graph& g, Variant v, Vertex root) {
  switch (v) {
    case Variant::Traditional: return traditional_plan(g);
    case Variant::EdgeColoring: return edge_coloring_plan(g);
    case Variant::Dfs: return dfs_ansatz_plan(g, root);
  }
  throw Error(Errc::InvalidParams, "unknown variant");
}

namespace {

void emit_layer(Circuit& c, const Graph& g, const Schedule& schedule, double gamma) {
  for (const auto& s : schedule) {
    const int idx = g.edge_index(s.control, s.target);
    if (idx < 0) throw Error(Errc::EdgeMismatch, "schedule edge missing from graph");
    const double angle = 2.0 * gamma * g.weight(idx);
    if (!s.optimized) c.append(Gate::cnot(s.control, s.target));
    c.append(Gate::rz(angle, s.target));
    c.append(Gate::cnot(s.control, s.target));
  }
}

}  // namespace

Circuit lower_plan(const Graph& g, const AnsatzPlan& plan, const AnsatzParams& params,
                   EdgeOrder later_layers) {
  validate(params);
  const int n = g.num_vertices();
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.append(Gate::h(q));
  const Schedule later = params.depth() > 1 ? traditional_schedule(g, later_layers) : Schedule{};
  for (int l = 0; l < params.depth(); ++l) {
    emit_layer(c, g, l == 0 ? plan.schedule : later, params.gamma[l]);
    for (int q = 0; q < n; ++q) c.append(Gate::rx(2.0 * params.beta[l], q));
  }
  return c;
}

Circuit build_traditional(const Graph& g, const AnsatzParams& params, EdgeOrder order) {
  return lower_plan(g, traditional_plan(g, order), params, order);
}

std::pair<Circuit, AnsatzPlan> build_edge_coloring(const Graph& g, const AnsatzParams& params) {
  auto plan = edge_coloring_plan(g);
  auto circuit = lower_plan(g, plan, params);
  return {std::move(circuit), std::move(plan)};
}

std::pair<Circuit, AnsatzPlan> build_dfs(const Graph& g, const AnsatzParams& params, Vertex root) {
  auto plan = dfs_ansatz_plan(g, root);
  auto circuit = lower_plan(g, plan, params);
  return {std::move(circuit), std::move(plan)};
}

std::pair<Circuit, AnsatzPlan> build(const Graph& g, Variant v, const AnsatzParams& params,
                                     Vertex root) {
  auto plan = make_plan(g, v, root);
  auto circuit = lower_plan(g, plan, params);
  return {std::move(circuit), std::move(plan)};
}

Circuit problem_layer(const Graph& g, const AnsatzPlan& plan, double gamma) {
  Circuit c(g.num_vertices());
  emit_layer(c, g, plan.schedule, gamma);
  return c;
}

std::string plan_to_json(const AnsatzPlan& plan) {
  nlohmann::json doc;
  doc["variant"] = std::string(to_string(plan.variant));
  doc["schedule"] = nlohmann::json::array();
  for (const auto& s : plan.schedule)
    doc["schedule"].push_back({{"control", s.control}, {"target", s.target}, {"optimized", s.optimized}});
  doc["optimized"] = optimized_count(plan);
  doc["opportunistic"] = plan.opportunistic;
  return doc.dump(2) + "\n";
}

}  // namespace qaoa
