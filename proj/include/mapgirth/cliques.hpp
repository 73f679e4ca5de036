#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "mapgirth/errors.hpp"
#include "mapgirth/graph.hpp"

namespace mapgirth {

/// The family of all maximal cliques of a graph. Each clique is a sorted
/// vertex list; the family is sorted lexicographically, so two runs over the
/// same graph produce identical output.
struct CliqueSet {
  std::vector<std::vector<int>> cliques;
  int source_vertex_count = 0;
};

namespace detail {

struct BronKerbosch {
  const Graph& g;
  std::optional<std::size_t> cap;
  std::vector<std::vector<int>>& out;
  std::vector<int> current;

  bool adjacent(int u, int v) const {
    const auto& nb = g.neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Pivot rule: highest graph degree among candidates and excluded, ties to
  // the lowest id.
  int pick_pivot(const std::vector<int>& cand, const std::vector<int>& excluded) const {
    int pivot = -1, best_deg = -1;
    for (const auto* set : {&cand, &excluded})
      for (int v : *set)
        if (g.degree(v) > best_deg) {
          best_deg = g.degree(v);
          pivot = v;
        }
    return pivot;
  }

  void expand(std::vector<int> cand, std::vector<int> excluded) {
    if (cand.empty() && excluded.empty()) {
      if (cap && out.size() >= *cap) throw CapExceeded(*cap);
      out.push_back(current);
      return;
    }
    const int pivot = pick_pivot(cand, excluded);
    std::vector<int> branch;
    for (int v : cand)
      if (!adjacent(pivot, v)) branch.push_back(v);
    // Intersections iterate the smaller sorted side and probe the larger.
    auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
      const auto& small = a.size() <= b.size() ? a : b;
      const auto& large = a.size() <= b.size() ? b : a;
      std::vector<int> out;
      for (int u : small)
        if (std::binary_search(large.begin(), large.end(), u)) out.push_back(u);
      return out;
    };
    for (int v : branch) {
      const auto& nb = g.neighbors(v);
      std::vector<int> next_cand = intersect(cand, nb);
      std::vector<int> next_excluded = intersect(excluded, nb);
      current.push_back(v);
      expand(std::move(next_cand), std::move(next_excluded));
      current.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }
};

}  // namespace detail

/// Lists all maximal cliques (isolated vertices count as one-vertex cliques).
/// Throws CapExceeded as soon as more than `cap` cliques have been produced,
/// so hopeless inputs abort early instead of enumerating an exponential
/// family to completion.
inline CliqueSet maximal_cliques(const Graph& g, std::optional<std::size_t> cap = std::nullopt) {
  CliqueSet result;
  result.source_vertex_count = g.vertex_count();
  if (g.vertex_count() == 0) return result;
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  detail::BronKerbosch bk{g, cap, result.cliques, {}};
  bk.expand(std::move(all), {});
  for (auto& q : result.cliques) std::sort(q.begin(), q.end());
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

/// Accepted inputs of the map recognizer satisfy |cliques| <= 27 * n.
inline bool clique_count_bound_check(const Graph& g, const CliqueSet& cs) {
  return cs.cliques.size() <= 27 * static_cast<std::size_t>(g.vertex_count());
}

/// Maximal cliques of a graph already known to be diamond-free: every edge
/// lies in exactly one maximal clique, namely the edge plus the common
/// neighborhood of its endpoints, so one sweep over the edges suffices.
/// Near-linear on sparse inputs, which keeps the recognizers fast where
/// branch-and-bound enumeration would dominate.
inline CliqueSet maximal_cliques_diamond_free(const Graph& g,
                                              std::optional<std::size_t> cap = std::nullopt) {
  CliqueSet result;
  result.source_vertex_count = g.vertex_count();
  const int n = g.vertex_count();
  std::vector<std::vector<int>> covered_edges(static_cast<std::size_t>(n));
  auto edge_covered = [&](int u, int v) {
    const auto& list = covered_edges[static_cast<std::size_t>(u)];
    return std::find(list.begin(), list.end(), v) != list.end();
  };
  auto emit = [&](std::vector<int> clique) {
    if (cap && result.cliques.size() >= *cap) throw CapExceeded(*cap);
    result.cliques.push_back(std::move(clique));
  };
  std::vector<int> common;
  for (int u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    if (nu.empty()) {
      emit({u});
      continue;
    }
    for (int v : nu) {
      if (v < u || edge_covered(u, v)) continue;
      const auto& nv = g.neighbors(v);
      common.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                            std::back_inserter(common));
      std::vector<int> clique;
      clique.reserve(common.size() + 2);
      clique.push_back(u);
      clique.push_back(v);
      clique.insert(clique.end(), common.begin(), common.end());
      std::sort(clique.begin(), clique.end());
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          covered_edges[static_cast<std::size_t>(clique[i])].push_back(clique[j]);
          covered_edges[static_cast<std::size_t>(clique[j])].push_back(clique[i]);
        }
      emit(std::move(clique));
    }
  }
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

}  // namespace mapgirth
