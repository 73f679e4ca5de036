#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapgirth/graph.hpp"

namespace mapgirth {

/// Bipartite graph with a vertex side (ids 0..vertex_side_count-1) and a
/// point side. Stored as one neighbor list per point, so edges run between
/// the sides by construction and cannot be parallel.
///
/// Point labels are optional annotations (clique index for vertex-clique
/// incidence graphs, edge index for subdivisions); they do not take part in
/// structural equality.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  explicit BipartiteGraph(int vertex_side) {
    if (vertex_side < 0) throw std::invalid_argument("negative vertex count");
    vertex_count_ = vertex_side;
  }

  int vertex_side_count() const { return vertex_count_; }
  int point_side_count() const { return static_cast<int>(point_adj_.size()); }
  int node_count() const { return vertex_count_ + point_side_count(); }

  std::size_t edge_count() const { return edge_count_; }

  /// Adds a point adjacent to the given vertex-side ids; returns its index.
  int add_point(std::vector<int> vertex_neighbors, int label = -1) {
    for (int v : vertex_neighbors)
      if (v < 0 || v >= vertex_count_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    std::sort(vertex_neighbors.begin(), vertex_neighbors.end());
    vertex_neighbors.erase(std::unique(vertex_neighbors.begin(), vertex_neighbors.end()),
                           vertex_neighbors.end());
    edge_count_ += vertex_neighbors.size();
    point_adj_.push_back(std::move(vertex_neighbors));
    point_labels_.push_back(label);
    return point_side_count() - 1;
  }

  const std::vector<int>& point_neighbors(int p) const {
    check_point(p);
    return point_adj_[static_cast<std::size_t>(p)];
  }

  int point_label(int p) const {
    check_point(p);
    return point_labels_[static_cast<std::size_t>(p)];
  }

  /// Per-vertex list of incident points (the transposed incidence).
  std::vector<std::vector<int>> vertex_to_points() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count_));
    for (int p = 0; p < point_side_count(); ++p)
      for (int v : point_adj_[static_cast<std::size_t>(p)])
        out[static_cast<std::size_t>(v)].push_back(p);
    return out;
  }

  /// View as a plain graph: vertex-side ids first, point p becomes
  /// vertex_side_count() + p.
  Graph as_graph() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_count_);
    for (int p = 0; p < point_side_count(); ++p)
      for (int v : point_adj_[static_cast<std::size_t>(p)]) es.emplace_back(v, vertex_count_ + p);
    return Graph::from_edges(node_count(), es);
  }

  /// Structural equality; labels are ignored.
  bool operator==(const BipartiteGraph& other) const {
    return vertex_count_ == other.vertex_count_ && point_adj_ == other.point_adj_;
  }
  bool operator!=(const BipartiteGraph& other) const { return !(*this == other); }

 private:
  void check_point(int p) const {
    if (p < 0 || p >= point_side_count())
      throw std::out_of_range("point id " + std::to_string(p) + " out of range");
  }

  int vertex_count_ = 0;
  std::vector<std::vector<int>> point_adj_;
  std::vector<int> point_labels_;
  std::size_t edge_count_ = 0;
};

inline GirthValue girth(const BipartiteGraph& b) { return girth(b.as_graph()); }

inline std::optional<std::vector<int>> find_short_cycle(const BipartiteGraph& b, int bound) {
  return find_short_cycle(b.as_graph(), bound);
}

inline bool girth_at_least(const BipartiteGraph& b, int bound) {
  return girth_at_least(b.as_graph(), bound);
}

inline std::optional<std::vector<int>> find_any_cycle(const BipartiteGraph& b) {
  return find_any_cycle(b.as_graph());
}

}  // namespace mapgirth
