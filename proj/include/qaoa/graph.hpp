#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges keep their insertion order; that order drives every deterministic
/// choice made by the passes downstream. Weights default to 1 and only scale
/// rotation angles.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from unweighted pairs; pairs may be given in either
  /// orientation and are normalized to u < v.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

  /// Adds {a, b} with weight w. Throws SelfLoop, DuplicateEdge,
  /// VertexOutOfRange.
  void add_edge(Vertex a, Vertex b, double w = 1.0);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(int edge_index) const { return weights_.at(edge_index); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a, b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  /// Neighbors of every vertex in ascending order.
  std::vector<std::vector<Vertex>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
};

struct GraphStats {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  std::vector<int> degrees;
};

GraphStats stats(const Graph& g);

/// True iff a traversal from vertex 0 reaches every vertex. The graphs on 0
/// or 1 vertices count as connected.
bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);

/// Seeded G(n, p) sampler conditioned on connectivity.
///
/// Pairs (u, v), u < v, are visited in lexicographic order and each is kept
/// when the next draw of a std::mt19937_64 seeded with `seed`, mapped to
/// [0, 1) via its top 53 bits, is below p_edge. Disconnected samples are
/// discarded and the generator continues from its current state.
Graph erdos_renyi(int n, double p_edge, std::uint64_t seed, int max_attempts = 10'000);

/// Edge-list text: first line n, then "u v [w]" per edge; '#' starts a
/// comment line.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

}  // namespace qaoa
