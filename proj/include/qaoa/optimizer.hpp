#pragma once

#include <string>
#include <vector>

#include "qaoa/graph.hpp"

namespace qaoa {

/// Proper edge coloring; color_of is indexed like Graph::edges().
struct EdgeColoring {
  std::vector<int> color_of;
  int num_colors = 0;
};

/// Color classes ordered by descending size, ties by lowest color index.
/// Each class lists edge indices in ascending order.
struct ColorClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_color;

  const std::vector<int>& s_max() const;
  std::size_t s_max_size() const { return classes.empty() ? 0 : classes.front().size(); }
};

/// Oriented edge (control -> target) in an edge-operator schedule.
struct ScheduledEdge {
  Vertex control = 0;
  Vertex target = 0;
  bool optimized = false;

  friend bool operator==(const ScheduledEdge&, const ScheduledEdge&) = default;
};

using Schedule = std::vector<ScheduledEdge>;

struct DfsPlan {
  Vertex root = 0;
  /// Parent -> child in discovery order.
  std::vector<Edge> tree_edges;
  /// Matchings covering the non-tree edges, largest first. Edges are stored
  /// with u < v.
  std::vector<std::vector<Edge>> residual_layers;
};

/// Misra-Gries constructive coloring with at most max_degree + 1 colors.
///
/// Edges are colored in input order. Fans grow through the lowest-index
/// eligible neighbor and free colors are always the lowest free index, so the
/// result is a pure function of the edge order.
EdgeColoring misra_gries_color(const Graph& g);

/// Tries to empty whole color classes, smallest first, by recoloring their
/// edges with at most one Kempe-chain swap each. The result stays proper,
/// never uses more colors than col and never goes below max_degree.
EdgeColoring reduce_colors(const Graph& g, EdgeColoring col);

bool is_proper_coloring(const Graph& g, const EdgeColoring& col);

ColorClasses color_classes(const Graph& g, const EdgeColoring& col);

/// Throws Disconnected or VertexOutOfRange. Neighbors are explored in
/// ascending index order. Non-tree edges are colored with misra_gries_color
/// followed by reduce_colors.
DfsPlan dfs_plan(const Graph& g, Vertex root = 0);

/// Phase-support simulation of an edge schedule: an optimized edge is valid
/// only if its target has not been touched by any earlier edge. Throws
/// EdgeMismatch unless the schedule covers every edge of g exactly once.
bool verify_schedule(const Graph& g, const Schedule& schedule);

/// Number of unoptimized edges in the schedule that could still have been
/// optimized because one endpoint was untouched at its turn.
int count_opportunistic(const Graph& g, const Schedule& schedule);

/// Largest number of optimizable edges over every edge order and
/// orientation. Exhaustive; throws TooLarge outside n <= 8, m <= 8.
int max_optimizable_bruteforce(const Graph& g);

/// ASAP depth of a schedule counted in edge-operator layers.
int schedule_edge_depth(int num_vertices, const Schedule& schedule);

/// JSON documents for plans.
std::string coloring_to_json(const Graph& g, const EdgeColoring& col);
std::string dfs_plan_to_json(const DfsPlan& plan);
DfsPlan dfs_plan_from_json(const std::string& doc);

}  // namespace qaoa
