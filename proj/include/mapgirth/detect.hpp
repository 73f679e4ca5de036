#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/graph.hpp"
#include "mapgirth/planarity.hpp"

namespace mapgirth {

enum class ObstructionKind {
  Diamond,            // 4 vertices inducing exactly 5 edges
  InducedCycle,       // chordless cycle of length >= 4 in the input graph
  WitnessShortCycle,  // cycle in the incidence graph shorter than the bound
  WitnessNonplanar,   // incidence graph fails the planarity test
  CliqueCapExceeded,  // more maximal cliques than any accepted input allows
};

inline std::string to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::Diamond: return "diamond";
    case ObstructionKind::InducedCycle: return "induced-cycle";
    case ObstructionKind::WitnessShortCycle: return "witness-short-cycle";
    case ObstructionKind::WitnessNonplanar: return "witness-nonplanar";
    case ObstructionKind::CliqueCapExceeded: return "clique-cap-exceeded";
  }
  return "unknown";
}

/// Certificate of rejection. `vertices` lists ids in the input graph for
/// Diamond / InducedCycle, and combined incidence-graph ids (vertex side
/// first, then points) for WitnessShortCycle. It may be empty for
/// WitnessNonplanar and CliqueCapExceeded.
struct Obstruction {
  ObstructionKind kind;
  std::vector<int> vertices;
  int cycle_length = 0;  // cycle kinds only

  /// Re-checks the certificate against the graph it was issued for.
  bool validate(const Graph& g) const {
    switch (kind) {
      case ObstructionKind::Diamond: {
        if (vertices.size() != 4) return false;
        Graph sub = induced_subgraph(g, vertices);
        return sub.edge_count() == 5;
      }
      case ObstructionKind::InducedCycle: {
        const std::size_t k = vertices.size();
        if (k < 4 || static_cast<std::size_t>(cycle_length) != k) return false;
        Graph sub = induced_subgraph(g, vertices);
        if (sub.edge_count() != k) return false;
        for (std::size_t i = 0; i < k; ++i)
          if (!g.has_edge(vertices[i], vertices[(i + 1) % k])) return false;
        return true;
      }
      default:
        return false;  // needs the incidence graph; see the overload below
    }
  }

  /// Validates the incidence-graph kinds against the constructed witness
  /// candidate; `girth_bound` is the requested minimum witness girth.
  bool validate(const BipartiteGraph& bg, int girth_bound) const {
    switch (kind) {
      case ObstructionKind::WitnessShortCycle: {
        const std::size_t k = vertices.size();
        if (k < 4 || static_cast<std::size_t>(cycle_length) != k) return false;
        if (cycle_length >= girth_bound) return false;
        Graph view = bg.as_graph();
        std::vector<int> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (std::size_t i = 0; i < k; ++i)
          if (!view.has_edge(vertices[i], vertices[(i + 1) % k])) return false;
        return true;
      }
      case ObstructionKind::WitnessNonplanar:
        return !is_planar(bg).planar;
      default:
        return false;
    }
  }
};

/// Finds an induced diamond (K4 minus an edge) if one exists. Scans each
/// edge's common neighborhood for a nonadjacent pair; first hit in
/// lexicographic edge order wins, so reports are deterministic.
inline std::optional<Obstruction> find_diamond(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> common;
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (int v : nu) {
      if (v < u) continue;
      const auto& nv = g.neighbors(v);
      common.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common));
      if (common.size() < 2) continue;
      for (std::size_t a = 0; a + 1 < common.size(); ++a)
        for (std::size_t b = a + 1; b < common.size(); ++b)
          if (!g.has_edge(common[a], common[b]))
            return Obstruction{ObstructionKind::Diamond, {u, common[a], v, common[b]}, 0};
    }
  }
  return std::nullopt;
}

/// Finds an induced cycle C_l with 4 <= l <= max_len if one exists (any
/// qualifying length). For each edge (u, v) in lexicographic order it takes
/// a shortest u-v path that avoids the closed common neighborhood of u and
/// v; shortest paths are chordless, and excluding common neighbors rules
/// out triangles and chords at the endpoints, so path + edge is an induced
/// cycle. Minimized over edges this finds the shortest induced cycle of
/// length >= 4, hence misses nothing in range.
inline std::optional<Obstruction> find_short_induced_cycle(const Graph& g, int max_len) {
  if (max_len < 4) throw std::invalid_argument("max_len must be at least 4");
  const int n = g.vertex_count();
  std::vector<char> blocked(static_cast<std::size_t>(n), 0);
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue;
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (int v : nu) {
      if (v < u) continue;
      // Block N(u) n N(v); the path may use at most max_len - 1 edges.
      const auto& nv = g.neighbors(v);
      std::vector<int> common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common));
      for (int x : common) blocked[static_cast<std::size_t>(x)] = 1;
      std::fill(dist.begin(), dist.end(), -1);
      queue.clear();
      dist[static_cast<std::size_t>(u)] = 0;
      parent[static_cast<std::size_t>(u)] = -1;
      queue.push_back(u);
      for (std::size_t head = 0; head < queue.size() && dist[static_cast<std::size_t>(v)] == -1;
           ++head) {
        const int x = queue[head];
        if (dist[static_cast<std::size_t>(x)] >= max_len - 1) break;
        for (int y : g.neighbors(x)) {
          if (blocked[static_cast<std::size_t>(y)]) continue;
          if (x == u && y == v) continue;  // the edge itself is not a path
          if (dist[static_cast<std::size_t>(y)] != -1) continue;
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
      for (int x : common) blocked[static_cast<std::size_t>(x)] = 0;
      const int dv = dist[static_cast<std::size_t>(v)];
      if (dv == -1 || dv + 1 > max_len) continue;
      std::vector<int> cycle;
      for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
      std::reverse(cycle.begin(), cycle.end());  // u ... v; closed by edge vu
      return Obstruction{ObstructionKind::InducedCycle, cycle, static_cast<int>(cycle.size())};
    }
  }
  return std::nullopt;
}

/// True iff every biconnected component induces a complete graph.
/// Iterative Hopcroft-Tarjan; a component with k vertices must carry exactly
/// k(k-1)/2 stacked edges to be a clique.
inline bool is_block_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, int>> edge_stack;
  struct Frame {
    int v;
    std::size_t i;
    std::size_t edge_base;  // index of the tree edge into v, unused at roots
  };
  std::vector<Frame> st;

  auto component_is_clique = [&](std::size_t first_edge) {
    std::vector<int> members;
    for (std::size_t k = first_edge; k < edge_stack.size(); ++k) {
      members.push_back(edge_stack[k].first);
      members.push_back(edge_stack[k].second);
    }
    const std::size_t edge_count = edge_stack.size() - first_edge;
    edge_stack.resize(first_edge);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const std::size_t k = members.size();
    return edge_count == k * (k - 1) / 2;
  };

  for (int root = 0; root < n; ++root) {
    if (depth[static_cast<std::size_t>(root)] != -1) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    low[static_cast<std::size_t>(root)] = 0;
    st.push_back({root, 0, 0});
    while (!st.empty()) {
      Frame& f = st.back();
      const int v = f.v;
      const auto& nbrs = g.neighbors(v);
      if (f.i >= nbrs.size()) {
        const std::size_t base = f.edge_base;
        st.pop_back();
        const int p = parent[static_cast<std::size_t>(v)];
        if (p != -1) {
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] >= depth[static_cast<std::size_t>(p)] &&
              !component_is_clique(base))
            return false;
        }
        continue;
      }
      const int w = nbrs[f.i++];
      if (depth[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
        low[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(w)];
        edge_stack.emplace_back(v, w);
        st.push_back({w, 0, edge_stack.size() - 1});
      } else if (w != parent[static_cast<std::size_t>(v)] &&
                 depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(v)]) {
        edge_stack.emplace_back(v, w);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], depth[static_cast<std::size_t>(w)]);
      }
    }
  }
  return true;
}

}  // namespace mapgirth
