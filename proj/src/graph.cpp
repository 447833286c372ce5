#include "qaoa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qaoa/error.hpp"
#include "qaoa/text.hpp"

namespace qaoa {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) : Graph(n) {
  for (const auto& [a, b] : pairs) add_edge(a, b);
}

void Graph::add_edge(Vertex a, Vertex b, double w) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") outside 0.." + std::to_string(n_ - 1));
  }
  if (a == b) throw Error(Errc::SelfLoop, "self-loop on vertex " + std::to_string(a));
  if (!std::isfinite(w)) throw Error(Errc::InvalidParams, "non-finite edge weight");
  if (has_edge(a, b)) {
    throw Error(Errc::DuplicateEdge,
                "edge (" + std::to_string(a) + "," + std::to_string(b) + ") repeated");
  }
  edges_.push_back({std::min(a, b), std::max(a, b)});
  weights_.push_back(w);
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  const auto it = std::find(edges_.begin(), edges_.end(), key);
  return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin());
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.degrees.assign(s.n, 0);
  for (const auto& e : g.edges()) {
    ++s.degrees[e.u];
    ++s.degrees[e.v];
  }
  if (!s.degrees.empty()) s.max_degree = *std::max_element(s.degrees.begin(), s.degrees.end());
  return s;
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InvalidParams, "a cycle needs at least 3 vertices");
  Graph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph erdos_renyi(int n, double p_edge, std::uint64_t seed, int max_attempts) {
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw Error(Errc::InvalidProbability, "p_edge must lie in [0,1]");
  }
  if (n < 2) throw Error(Errc::InvalidParams, "erdos_renyi needs n >= 2");
  std::mt19937_64 rng(seed);
  const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit() < p_edge) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
  throw Error(Errc::AttemptsExhausted, "no connected sample in " + std::to_string(max_attempts) +
                                           " attempts (n=" + std::to_string(n) + ")");
}

Graph parse_graph(std::string_view doc) {
  const auto lines = text::split_lines(doc);
  Graph g;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = text::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = text::split_ws(line);
    if (!have_header) {
      const auto n = tok.size() == 1 ? text::parse_int(tok[0]) : std::nullopt;
      if (!n || *n < 0) throw ParseError(Errc::ParseError, lineno, "expected vertex count");
      g = Graph(static_cast<int>(*n));
      have_header = true;
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) {
      throw ParseError(Errc::ParseError, lineno, "expected 'u v [w]'");
    }
    const auto a = text::parse_int(tok[0]);
    const auto b = text::parse_int(tok[1]);
    if (!a || !b) throw ParseError(Errc::ParseError, lineno, "vertex is not an integer");
    double w = 1.0;
    if (tok.size() == 3) {
      const auto parsed = text::parse_double(tok[2]);
      if (!parsed || !std::isfinite(*parsed)) {
        throw ParseError(Errc::ParseError, lineno, "weight is not a finite number");
      }
      w = *parsed;
    }
    try {
      g.add_edge(static_cast<Vertex>(*a), static_cast<Vertex>(*b), w);
    } catch (const Error& e) {
      throw ParseError(e.code(), lineno, e.what());
    }
  }
  if (!have_header) throw ParseError(Errc::ParseError, 0, "missing vertex count");
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    out += std::to_string(e.u) + " " + std::to_string(e.v);
    if (g.weight(i) != 1.0) out += " " + text::format_double(g.weight(i));
    out += "\n";
  }
  return out;
}

Graph read_graph_file(const std::string& path) { return parse_graph(text::read_file(path)); }

}  // namespace qaoa
