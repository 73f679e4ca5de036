#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/cliques.hpp"
#include "mapgirth/graph.hpp"

namespace mapgirth {

/// Vertex-edge incidence bipartite graph: one point per edge, adjacent to
/// the edge's endpoints. Points follow lexicographic edge order and are
/// labeled with their edge index.
inline BipartiteGraph build_subdivision(const Graph& g) {
  BipartiteGraph b(g.vertex_count());
  int index = 0;
  for (auto [u, v] : g.edges()) b.add_point({u, v}, index++);
  return b;
}

/// Vertex-clique incidence bipartite graph over a precomputed clique family:
/// one point per maximal clique, adjacent to its members. Point order follows
/// the CliqueSet's deterministic order, so serialized witnesses are
/// reproducible byte for byte.
inline BipartiteGraph build_vertex_clique_incidence(const Graph& g, const CliqueSet& cliques) {
  if (cliques.source_vertex_count != g.vertex_count())
    throw std::invalid_argument("clique set was computed for a different graph");
  BipartiteGraph b(g.vertex_count());
  int index = 0;
  for (const auto& q : cliques.cliques) b.add_point(q, index++);
  return b;
}

/// Convenience overload that enumerates the maximal cliques itself;
/// propagates CapExceeded when a cap is given.
inline BipartiteGraph build_vertex_clique_incidence(
    const Graph& g, std::optional<std::size_t> cap = std::nullopt) {
  return build_vertex_clique_incidence(g, maximal_cliques(g, cap));
}

enum class HalfSquareSide { Vertex, Point };

/// Graph on one side of a bipartite graph; two nodes are adjacent iff they
/// share a neighbor on the other side. Each point neighborhood expands into
/// a clique, so the cost is the sum of squared degrees of the far side.
inline Graph half_square(const BipartiteGraph& b, HalfSquareSide side) {
  std::vector<std::pair<int, int>> edges;
  if (side == HalfSquareSide::Vertex) {
    for (int p = 0; p < b.point_side_count(); ++p) {
      const auto& nb = b.point_neighbors(p);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) edges.emplace_back(nb[i], nb[j]);
    }
    return Graph::from_edges(b.vertex_side_count(), edges);
  }
  const auto incident = b.vertex_to_points();
  for (const auto& points : incident)
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        edges.emplace_back(points[i], points[j]);
  return Graph::from_edges(b.point_side_count(), edges);
}

/// DOT rendering with circles for vertices and boxes for points. Optional
/// display labels for the vertex side; points are named w0, w1, ...
inline std::string to_dot(const BipartiteGraph& b,
                          const std::vector<std::string>* vertex_labels = nullptr) {
  std::string out = "graph witness {\n";
  out += "  node [shape=circle];\n";
  for (int v = 0; v < b.vertex_side_count(); ++v) {
    out += "  v" + std::to_string(v);
    if (vertex_labels) out += " [label=\"" + (*vertex_labels)[static_cast<std::size_t>(v)] + "\"]";
    out += ";\n";
  }
  out += "  node [shape=box];\n";
  for (int p = 0; p < b.point_side_count(); ++p) out += "  w" + std::to_string(p) + ";\n";
  for (int p = 0; p < b.point_side_count(); ++p)
    for (int v : b.point_neighbors(p))
      out += "  v" + std::to_string(v) + " -- w" + std::to_string(p) + ";\n";
  out += "}\n";
  return out;
}

/// Two-section text form: a header section declaring the side sizes, then
/// one incidence edge per line as "<vertex> w<point>".
inline std::string to_edge_list_text(const BipartiteGraph& b,
                                     const std::vector<std::string>* vertex_labels = nullptr) {
  std::string out = "vertices " + std::to_string(b.vertex_side_count()) + "\n" +
                    "points " + std::to_string(b.point_side_count()) + "\n";
  for (int p = 0; p < b.point_side_count(); ++p)
    for (int v : b.point_neighbors(p)) {
      out += vertex_labels ? (*vertex_labels)[static_cast<std::size_t>(v)] : std::to_string(v);
      out += " w" + std::to_string(p) + "\n";
    }
  return out;
}

}  // namespace mapgirth
