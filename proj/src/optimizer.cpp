#include "qaoa/optimizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <json.hpp>

#include "qaoa/error.hpp"

namespace qaoa {

namespace {

// Dense bookkeeping for one Misra-Gries run: the color of every vertex pair
// and, per vertex and color, the neighbor reached through that color.
class ColoringState {
 public:
  ColoringState(int n, int palette)
      : n_(n), palette_(palette), color_(static_cast<std::size_t>(n) * n, -1),
        via_(static_cast<std::size_t>(n) * palette, -1) {}

  int palette() const { return palette_; }
  int color(Vertex a, Vertex b) const { return color_[idx(a, b)]; }
  bool is_free(Vertex v, int c) const { return via_[static_cast<std::size_t>(v) * palette_ + c] < 0; }
  Vertex via(Vertex v, int c) const { return via_[static_cast<std::size_t>(v) * palette_ + c]; }

  int lowest_free(Vertex v) const {
    for (int c = 0; c < palette_; ++c)
      if (is_free(v, c)) return c;
    throw std::logic_error("misra-gries: palette exhausted");
  }

  void uncolor(Vertex a, Vertex b) {
    const int c = color(a, b);
    if (c < 0) return;
    slot(a, c) = -1;
    slot(b, c) = -1;
    color_[idx(a, b)] = color_[idx(b, a)] = -1;
  }

  void set(Vertex a, Vertex b, int c) {
    uncolor(a, b);
    color_[idx(a, b)] = color_[idx(b, a)] = c;
    slot(a, c) = b;
    slot(b, c) = a;
  }

 private:
  std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }
  Vertex& slot(Vertex v, int c) { return via_[static_cast<std::size_t>(v) * palette_ + c]; }

  int n_;
  int palette_;
  std::vector<int> color_;
  std::vector<Vertex> via_;
};

struct PathEdge {
  Vertex a;
  Vertex b;
  int color;
};

// Swaps colors first and other along the alternating path that leaves start
// through first. Returns the path with its original colors.
std::vector<PathEdge> invert_path(ColoringState& st, Vertex start, int first, int other) {
  std::vector<PathEdge> path;
  Vertex cur = start;
  int want = first;
  while (!st.is_free(cur, want)) {
    const Vertex next = st.via(cur, want);
    path.push_back({cur, next, want});
    cur = next;
    want = (want == first) ? other : first;
  }
  for (const auto& e : path) st.uncolor(e.a, e.b);
  for (const auto& e : path) st.set(e.a, e.b, e.color == first ? other : first);
  return path;
}

void restore_path(ColoringState& st, const std::vector<PathEdge>& path) {
  for (const auto& e : path) st.uncolor(e.a, e.b);
  for (const auto& e : path) st.set(e.a, e.b, e.color);
}

void color_edge(ColoringState& st, const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
  // A color free at both endpoints is a one-vertex fan with c == d.
  for (int c = 0; c < st.palette(); ++c) {
    if (st.is_free(u, c) && st.is_free(v, c)) {
      st.set(u, v, c);
      return;
    }
  }

  // Maximal fan of u starting at v.
  std::vector<Vertex> fan{v};
  std::vector<char> in_fan(adj.size(), 0);
  in_fan[v] = 1;
  for (bool grown = true; grown;) {
    grown = false;
    for (Vertex x : adj[u]) {
      if (in_fan[x]) continue;
      const int cx = st.color(u, x);
      if (cx >= 0 && st.is_free(fan.back(), cx)) {
        fan.push_back(x);
        in_fan[x] = 1;
        grown = true;
        break;
      }
    }
  }

  const int c = st.lowest_free(u);
  const int d = st.lowest_free(fan.back());

  // Swap c and d along the alternating path leaving u through d.
  if (c != d) invert_path(st, u, d, c);

  // First fan prefix ending at a vertex where d is free.
  std::size_t w = fan.size();
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (i > 0) {
      const int ci = st.color(u, fan[i]);
      if (ci < 0 || !st.is_free(fan[i - 1], ci)) break;
    }
    if (st.is_free(fan[i], d)) {
      w = i;
      break;
    }
  }
  if (w == fan.size()) throw std::logic_error("misra-gries: no rotatable fan prefix");

  for (std::size_t j = 0; j < w; ++j) {
    const int shifted = st.color(u, fan[j + 1]);
    st.uncolor(u, fan[j + 1]);
    st.set(u, fan[j], shifted);
  }
  st.set(u, fan[w], d);
}

// Colors edge (u, v) without using color skip, possibly after one Kempe swap.
bool recolor_without(ColoringState& st, Vertex u, Vertex v, int skip) {
  const int k = st.palette();
  for (int c = 0; c < k; ++c)
    if (c != skip && st.is_free(u, c) && st.is_free(v, c)) {
      st.set(u, v, c);
      return true;
    }
  for (int a = 0; a < k; ++a) {
    if (a == skip || !st.is_free(u, a)) continue;
    for (int b = 0; b < k; ++b) {
      if (b == skip || b == a || !st.is_free(v, b)) continue;
      // Either flip the path that makes a free at v, or the one that makes b free at u.
      for (const auto& [start, first, other] : {std::tuple{v, a, b}, std::tuple{u, b, a}}) {
        const auto path = invert_path(st, start, first, other);
        for (int c : {a, b})
          if (st.is_free(u, c) && st.is_free(v, c)) {
            st.set(u, v, c);
            return true;
          }
        restore_path(st, path);
      }
    }
  }
  return false;
}

EdgeColoring renumber(const Graph& g, const ColoringState& st) {
  EdgeColoring col;
  for (const auto& e : g.edges()) col.color_of.push_back(st.color(e.u, e.v));
  std::vector<int> remap(st.palette(), -1);
  for (int c : col.color_of) remap[c] = 0;
  for (int c = 0; c < st.palette(); ++c)
    if (remap[c] == 0) remap[c] = col.num_colors++;
  for (int& c : col.color_of) c = remap[c];
  return col;
}

std::uint64_t pair_key(Vertex a, Vertex b) {
  return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | static_cast<std::uint32_t>(std::max(a, b));
}

std::map<std::uint64_t, int> edge_lookup(const Graph& g) {
  std::map<std::uint64_t, int> lookup;
  for (int i = 0; i < g.num_edges(); ++i) lookup[pair_key(g.edges()[i].u, g.edges()[i].v)] = i;
  return lookup;
}

}  // namespace

EdgeColoring misra_gries_color(const Graph& g) {
  const int n = g.num_vertices();
  const auto adj = g.adjacency();
  const int palette = stats(g).max_degree + 1;
  ColoringState st(n, palette);
  for (const auto& e : g.edges()) color_edge(st, adj, e.u, e.v);

  return renumber(g, st);
}

EdgeColoring reduce_colors(const Graph& g, EdgeColoring col) {
  const int floor = stats(g).max_degree;
  while (col.num_colors > floor) {
    const auto classes = color_classes(g, col);
    bool dropped = false;
    for (std::size_t i = classes.classes.size(); i-- > 0 && !dropped;) {
      const int victim = classes.class_color[i];
      ColoringState st(g.num_vertices(), col.num_colors);
      for (int e = 0; e < g.num_edges(); ++e)
        if (col.color_of[e] != victim) st.set(g.edges()[e].u, g.edges()[e].v, col.color_of[e]);
      dropped = std::all_of(classes.classes[i].begin(), classes.classes[i].end(), [&](int e) {
        return recolor_without(st, g.edges()[e].u, g.edges()[e].v, victim);
      });
      if (dropped) col = renumber(g, st);
    }
    if (!dropped) break;
  }
  return col;
}

bool is_proper_coloring(const Graph& g, const EdgeColoring& col) {
  if (col.color_of.size() != g.edges().size()) return false;
  std::map<std::pair<Vertex, int>, int> seen;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const int c = col.color_of[i];
    if (c < 0 || c >= col.num_colors) return false;
    const auto& e = g.edges()[i];
    if (seen[{e.u, c}]++ || seen[{e.v, c}]++) return false;
  }
  return true;
}

const std::vector<int>& ColorClasses::s_max() const {
  static const std::vector<int> empty;
  return classes.empty() ? empty : classes.front();
}

ColorClasses color_classes(const Graph& g, const EdgeColoring& col) {
  std::vector<std::vector<int>> buckets(col.num_colors);
  for (int i = 0; i < g.num_edges(); ++i) buckets.at(col.color_of.at(i)).push_back(i);

  std::vector<int> order(col.num_colors);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return buckets[a].size() > buckets[b].size(); });

  ColorClasses out;
  for (int c : order) {
    if (buckets[c].empty()) continue;
    out.classes.push_back(std::move(buckets[c]));
    out.class_color.push_back(c);
  }
  return out;
}

DfsPlan dfs_plan(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw Error(Errc::VertexOutOfRange, "root " + std::to_string(root));
  const auto adj = g.adjacency();

  DfsPlan plan;
  plan.root = root;
  std::vector<char> seen(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    if (next == adj[x].size()) {
      stack.pop_back();
      continue;
    }
    const Vertex y = adj[x][next++];
    if (seen[y]) continue;
    seen[y] = 1;
    plan.tree_edges.push_back({x, y});
    stack.emplace_back(y, 0);
  }
  if (static_cast<int>(plan.tree_edges.size()) != n - 1) {
    throw Error(Errc::Disconnected, "graph is not connected; dfs tree reached " +
                                        std::to_string(plan.tree_edges.size() + 1) + " of " +
                                        std::to_string(n) + " vertices");
  }

  std::vector<char> in_tree(g.num_edges(), 0);
  for (const auto& t : plan.tree_edges) in_tree[g.edge_index(t.u, t.v)] = 1;
  Graph residual(n);
  for (int i = 0; i < g.num_edges(); ++i)
    if (!in_tree[i]) residual.add_edge(g.edges()[i].u, g.edges()[i].v, g.weight(i));

  const auto classes = color_classes(residual, reduce_colors(residual, misra_gries_color(residual)));
  for (const auto& cls : classes.classes) {
    std::vector<Edge> layer;
    for (int i : cls) layer.push_back(residual.edges()[i]);
    plan.residual_layers.push_back(std::move(layer));
  }
  return plan;
}

bool verify_schedule(const Graph& g, const Schedule& schedule) {
  const auto lookup = edge_lookup(g);
  std::vector<int> hits(g.num_edges(), 0);
  for (const auto& s : schedule) {
    const auto it = s.control == s.target ? lookup.end() : lookup.find(pair_key(s.control, s.target));
    if (it == lookup.end() || hits[it->second]++ > 0) {
      throw Error(Errc::EdgeMismatch, "schedule entry (" + std::to_string(s.control) + "," +
                                          std::to_string(s.target) + ") is not a fresh graph edge");
    }
  }
  if (schedule.size() != g.edges().size()) {
    throw Error(Errc::EdgeMismatch, "schedule covers " + std::to_string(schedule.size()) + " of " +
                                        std::to_string(g.num_edges()) + " edges");
  }

  std::vector<char> phase_support(g.num_vertices(), 0);
  bool ok = true;
  for (const auto& s : schedule) {
    if (s.optimized && phase_support[s.target]) ok = false;
    phase_support[s.control] = phase_support[s.target] = 1;
  }
  return ok;
}

int count_opportunistic(const Graph& g, const Schedule& schedule) {
  std::vector<char> phase_support(g.num_vertices(), 0);
  int extra = 0;
  for (const auto& s : schedule) {
    if (!s.optimized && (!phase_support[s.control] || !phase_support[s.target])) ++extra;
    phase_support[s.control] = phase_support[s.target] = 1;
  }
  return extra;
}

int max_optimizable_bruteforce(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n > 8 || m > 8) throw Error(Errc::TooLarge, "exhaustive search limited to n <= 8, m <= 8");

  // The touched set after a prefix depends only on which edges ran, and an
  // edge can be optimized iff some endpoint is untouched (that endpoint becomes
  // the target). Maximizing over subsets therefore covers every order and
  // orientation.
  const std::size_t full = std::size_t{1} << m;
  std::vector<int> best(full, -1);
  std::vector<unsigned> touched(full, 0);
  best[0] = 0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (best[mask] < 0) continue;
    for (int e = 0; e < m; ++e) {
      if (mask & (std::size_t{1} << e)) continue;
      const auto& edge = g.edges()[e];
      const unsigned ends = (1u << edge.u) | (1u << edge.v);
      const bool fresh = (touched[mask] & ends) != ends;
      const std::size_t next = mask | (std::size_t{1} << e);
      touched[next] = touched[mask] | ends;
      best[next] = std::max(best[next], best[mask] + (fresh ? 1 : 0));
    }
  }
  return best[full - 1];
}

int schedule_edge_depth(int num_vertices, const Schedule& schedule) {
  std::vector<int> frontier(num_vertices, 0);
  int depth = 0;
  for (const auto& s : schedule) {
    const int layer = std::max(frontier.at(s.control), frontier.at(s.target)) + 1;
    frontier[s.control] = frontier[s.target] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

std::string coloring_to_json(const Graph& g, const EdgeColoring& col) {
  nlohmann::json doc;
  doc["colors"] = nlohmann::json::object();
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    doc["colors"][std::to_string(e.u) + "-" + std::to_string(e.v)] = col.color_of.at(i);
  }
  doc["num_colors"] = col.num_colors;
  return doc.dump(2) + "\n";
}

std::string dfs_plan_to_json(const DfsPlan& plan) {
  nlohmann::json doc;
  doc["root"] = plan.root;
  doc["tree"] = nlohmann::json::array();
  for (const auto& e : plan.tree_edges) doc["tree"].push_back({e.u, e.v});
  doc["residual_layers"] = nlohmann::json::array();
  for (const auto& layer : plan.residual_layers) {
    auto arr = nlohmann::json::array();
    for (const auto& e : layer) arr.push_back({e.u, e.v});
    doc["residual_layers"].push_back(std::move(arr));
  }
  return doc.dump(2) + "\n";
}

DfsPlan dfs_plan_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    DfsPlan plan;
    plan.root = doc.at("root").get<Vertex>();
    for (const auto& e : doc.at("tree")) plan.tree_edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    for (const auto& layer : doc.at("residual_layers")) {
      std::vector<Edge> edges;
      for (const auto& e : layer) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
      plan.residual_layers.push_back(std::move(edges));
    }
    return plan;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(Errc::ParseError, 0, e.what());
  }
}

}  // namespace qaoa
