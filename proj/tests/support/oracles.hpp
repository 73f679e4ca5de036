#pragma once

// Brute-force reference implementations used only by tests. Each one takes a
// route independent of the library code it checks: subset enumeration instead
// of branch and bound, per-edge-removal BFS instead of per-root BFS, and
// explicit Kuratowski subdivision search instead of the left-right criterion.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/graph.hpp"

namespace testsupport {

using mapgirth::BipartiteGraph;
using mapgirth::Graph;

// All maximal cliques by filtering every vertex subset; n <= ~16.
inline std::vector<std::vector<int>> naive_maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> cliques;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    if (members.empty()) continue;
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i)
      for (std::size_t j = i + 1; j < members.size() && clique; ++j)
        if (!g.has_edge(members[i], members[j])) clique = false;
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask & (1u << v)) continue;
      bool dominates = true;
      for (int u : members)
        if (!g.has_edge(u, v)) {
          dominates = false;
          break;
        }
      if (dominates) maximal = false;
    }
    if (maximal) cliques.push_back(members);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

// Exact girth: min over edges (u,v) of dist(u,v) in G - uv, plus one.
inline std::optional<int> brute_girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int y : g.neighbors(x)) {
        if (x == u && y == v) continue;
        if (x == v && y == u) continue;
        if (dist[y] != -1) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[v] == -1) continue;
    if (best == -1 || dist[v] + 1 < best) best = dist[v] + 1;
  }
  if (best == -1) return std::nullopt;
  return best;
}

inline std::optional<int> brute_girth(const BipartiteGraph& b) {
  return brute_girth(b.as_graph());
}

// Does some subset of size >= 4 induce a single chordless cycle of length
// within [lo, hi]?
inline bool brute_has_induced_cycle(const Graph& g, int lo, int hi) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute_has_induced_cycle: graph too large");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    const int k = static_cast<int>(members.size());
    if (k < lo || k > hi || k < 3) continue;
    Graph sub = mapgirth::induced_subgraph(g, members);
    if (sub.edge_count() != static_cast<std::size_t>(k)) continue;
    bool all_degree_two = true;
    for (int v = 0; v < k; ++v)
      if (sub.degree(v) != 2) all_degree_two = false;
    if (all_degree_two && mapgirth::is_connected(sub)) return true;
  }
  return false;
}

inline bool brute_chordal(const Graph& g) {
  return !brute_has_induced_cycle(g, 4, g.vertex_count());
}

namespace detail {

// Tries to route vertex-disjoint paths for each required branch-vertex pair,
// using only `allowed` interior vertices. Path enumeration is DFS over
// subsets of the free interior vertices.
struct SubdivisionRouter {
  const Graph& g;
  const std::vector<std::pair<int, int>>& pairs;
  std::vector<char> used;  // interior vertices consumed by earlier paths
  std::vector<char> branch;

  bool route(std::size_t pair_index) {
    if (pair_index == pairs.size()) return true;
    auto [s, t] = pairs[pair_index];
    return extend(s, t, pair_index);
  }

  // Grow a path from current toward t; interior vertices must be unused,
  // non-branch vertices.
  bool extend(int current, int t, std::size_t pair_index) {
    for (int next : g.neighbors(current)) {
      if (next == t) {
        if (route(pair_index + 1)) return true;
        continue;
      }
      if (branch[next] || used[next]) continue;
      used[next] = 1;
      if (extend(next, t, pair_index)) {
        used[next] = 0;  // unwound only on global failure
        return true;
      }
      used[next] = 0;
    }
    return false;
  }
};

inline bool has_subdivision(const Graph& g, const std::vector<int>& branch_vertices,
                            const std::vector<std::pair<int, int>>& pairs) {
  std::vector<char> branch(g.vertex_count(), 0);
  for (int v : branch_vertices) branch[v] = 1;
  SubdivisionRouter router{g, pairs, std::vector<char>(g.vertex_count(), 0), branch};
  return router.route(0);
}

inline void choose(int n, int k, std::vector<int>& current,
                   const std::function<bool(const std::vector<int>&)>& visit, int from,
                   bool& stop) {
  if (stop) return;
  if (static_cast<int>(current.size()) == k) {
    if (visit(current)) stop = true;
    return;
  }
  for (int v = from; v < n; ++v) {
    current.push_back(v);
    choose(n, k, current, visit, v + 1, stop);
    current.pop_back();
    if (stop) return;
  }
}

}  // namespace detail

// Exhaustive K5 / K3,3 subdivision search; exact planarity for small graphs.
inline bool brute_planar(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("brute_planar: graph too large");
  if (n >= 3 && g.edge_count() > static_cast<std::size_t>(3 * n - 6)) return false;

  bool found = false;
  std::vector<int> current;

  // K5 subdivisions: 5 branch vertices, all 10 pairs routed disjointly.
  if (n >= 5) {
    bool stop = false;
    detail::choose(
        n, 5, current,
        [&](const std::vector<int>& b) {
          std::vector<std::pair<int, int>> pairs;
          for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) pairs.emplace_back(b[i], b[j]);
          return detail::has_subdivision(g, b, pairs);
        },
        0, stop);
    found = stop;
  }
  // K3,3 subdivisions: 6 branch vertices split 3+3, 9 cross pairs.
  if (!found && n >= 6) {
    bool stop = false;
    detail::choose(
        n, 6, current,
        [&](const std::vector<int>& b) {
          // Partitions of b into two triples; fix b[0] on the left.
          for (int i = 1; i < 5 && !stop; ++i)
            for (int j = i + 1; j < 6; ++j) {
              std::vector<int> left{b[0], b[i], b[j]}, right;
              for (int k = 1; k < 6; ++k)
                if (k != i && k != j) right.push_back(b[k]);
              std::vector<std::pair<int, int>> pairs;
              for (int l : left)
                for (int r : right) pairs.emplace_back(l, r);
              if (detail::has_subdivision(g, b, pairs)) return true;
            }
          return false;
        },
        0, stop);
    found = stop;
  }
  return !found;
}

inline bool brute_planar(const BipartiteGraph& b) { return brute_planar(b.as_graph()); }

// Independent graph6 encoder for orders up to 62: builds the bit string as
// text, then packs six characters at a time.
inline std::string reference_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("reference_graph6: order above 62");
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t c = 0; c < bits.size(); c += 6) {
    int value = 0;
    for (std::size_t k = 0; k < 6; ++k) value = value * 2 + (bits[c + k] == '1');
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

// Induced six-cycle detection on the combined bipartite view.
inline bool has_induced_c6(const BipartiteGraph& b) {
  return brute_has_induced_cycle(b.as_graph(), 6, 6);
}

}  // namespace testsupport
