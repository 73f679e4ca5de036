#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mapgirth {

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Neighbor lists are sorted and duplicate-free; self-loops are rejected.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
  }

  /// Bulk constructor; sorts and deduplicates neighbor lists once.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      g.check_vertex(u);
      g.check_vertex(v);
      if (u == v) throw std::invalid_argument("self-loop rejected");
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t total = 0;
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      total += nb.size();
    }
    g.edge_count_ = total / 2;
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  /// Inserts an edge, keeping neighbor lists sorted. Duplicates are ignored.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v) return;
    nu.insert(pos, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }
  bool operator!=(const Graph& other) const { return !(*this == other); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(vertex_count()) + ")");
  }

  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Length of a shortest cycle; infinite on forests. Finite values are >= 3.
class GirthValue {
 public:
  GirthValue() : value_(kInfinite) {}
  explicit GirthValue(int v) : value_(v) {
    if (v < 3) throw std::invalid_argument("finite girth must be at least 3");
  }
  static GirthValue infinite() { return GirthValue(); }

  bool is_infinite() const { return value_ == kInfinite; }
  int value() const {
    if (is_infinite()) throw std::logic_error("girth is infinite");
    return value_;
  }
  /// True when the girth is >= bound (infinite satisfies every bound).
  bool at_least(int bound) const { return is_infinite() || value_ >= bound; }

  bool operator==(const GirthValue& o) const { return value_ == o.value_; }
  bool operator!=(const GirthValue& o) const { return value_ != o.value_; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

 private:
  static constexpr int kInfinite = -1;
  int value_;
};

namespace detail {

/// BFS workspace reused across roots so repeated scans stay linear.
struct BfsScratch {
  std::vector<int> dist;
  std::vector<int> parent;
  std::vector<int> queue;
  std::vector<int> touched;

  void init(int n) {
    dist.assign(static_cast<std::size_t>(n), -1);
    parent.assign(static_cast<std::size_t>(n), -1);
    queue.clear();
    touched.clear();
  }

  void reset_touched() {
    for (int v : touched) {
      dist[static_cast<std::size_t>(v)] = -1;
      parent[static_cast<std::size_t>(v)] = -1;
    }
    touched.clear();
    queue.clear();
  }
};

/// Root-to-vertex path from BFS parent pointers, listed root first.
inline std::vector<int> path_from_root(const std::vector<int>& parent, int v) {
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Splices the two BFS tree paths meeting at non-tree edge (u, w) into a
/// simple cycle. The paths share a prefix from the root; past the last
/// common vertex they are disjoint, so cutting there yields a cycle no
/// longer than dist(u) + dist(w) + 1.
inline std::vector<int> splice_cycle(const std::vector<int>& parent, int u, int w) {
  std::vector<int> pu = path_from_root(parent, u);
  std::vector<int> pw = path_from_root(parent, w);
  std::size_t k = 0;
  while (k + 1 < pu.size() && k + 1 < pw.size() && pu[k + 1] == pw[k + 1]) ++k;
  std::vector<int> cycle(pu.begin() + static_cast<std::ptrdiff_t>(k), pu.end());
  for (std::size_t i = pw.size(); i-- > k + 1;) cycle.push_back(pw[i]);
  return cycle;
}

}  // namespace detail

/// Finds some simple cycle of length < bound, or nullopt when girth(g) >= bound.
/// BFS from every vertex, truncated to depth floor((bound-1)/2); a non-tree
/// edge seen at depths d(u), d(w) witnesses a closed walk of length
/// d(u)+d(w)+1, which always contains a simple cycle at most that long.
inline std::optional<std::vector<int>> find_short_cycle(const Graph& g, int bound) {
  if (bound <= 3) return std::nullopt;
  const int n = g.vertex_count();
  const int depth_limit = (bound - 1) / 2;
  detail::BfsScratch bfs;
  bfs.init(n);
  for (int root = 0; root < n; ++root) {
    bfs.reset_touched();
    bfs.dist[static_cast<std::size_t>(root)] = 0;
    bfs.touched.push_back(root);
    bfs.queue.push_back(root);
    for (std::size_t head = 0; head < bfs.queue.size(); ++head) {
      const int u = bfs.queue[head];
      const int du = bfs.dist[static_cast<std::size_t>(u)];
      for (int w : g.neighbors(u)) {
        if (w == bfs.parent[static_cast<std::size_t>(u)]) continue;
        int& dw = bfs.dist[static_cast<std::size_t>(w)];
        if (dw == -1) {
          if (du + 1 > depth_limit) continue;
          dw = du + 1;
          bfs.parent[static_cast<std::size_t>(w)] = u;
          bfs.touched.push_back(w);
          bfs.queue.push_back(w);
        } else if (du + dw + 1 < bound) {
          return detail::splice_cycle(bfs.parent, u, w);
        }
      }
    }
  }
  return std::nullopt;
}

/// True iff the graph has no cycle shorter than bound.
inline bool girth_at_least(const Graph& g, int bound) {
  return !find_short_cycle(g, bound).has_value();
}

/// Some cycle if the graph has one (DFS back edge), else nullopt.
inline std::optional<std::vector<int>> find_any_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < n; ++root) {
    if (depth[static_cast<std::size_t>(root)] != -1) continue;
    depth[static_cast<std::size_t>(root)] = 0;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      const auto& nbrs = g.neighbors(u);
      if (idx >= nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const int w = nbrs[idx++];
      if (w == parent[static_cast<std::size_t>(u)]) continue;
      if (depth[static_cast<std::size_t>(w)] == -1) {
        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        stack.emplace_back(w, 0);
      } else if (depth[static_cast<std::size_t>(w)] < depth[static_cast<std::size_t>(u)]) {
        // w is an ancestor of u on the DFS path; walk up to close the cycle.
        std::vector<int> cycle;
        for (int x = u; x != w; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
    }
  }
  return std::nullopt;
}

/// Exact girth: BFS from every vertex; the minimum closed-walk witness
/// d(u)+d(w)+1 over non-tree edges, minimized over roots, is the girth.
inline GirthValue girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  detail::BfsScratch bfs;
  bfs.init(n);
  for (int root = 0; root < n; ++root) {
    bfs.reset_touched();
    bfs.dist[static_cast<std::size_t>(root)] = 0;
    bfs.touched.push_back(root);
    bfs.queue.push_back(root);
    for (std::size_t head = 0; head < bfs.queue.size(); ++head) {
      const int u = bfs.queue[head];
      const int du = bfs.dist[static_cast<std::size_t>(u)];
      if (best != -1 && 2 * du >= best) break;
      for (int w : g.neighbors(u)) {
        if (w == bfs.parent[static_cast<std::size_t>(u)]) continue;
        int& dw = bfs.dist[static_cast<std::size_t>(w)];
        if (dw == -1) {
          dw = du + 1;
          bfs.parent[static_cast<std::size_t>(w)] = u;
          bfs.touched.push_back(w);
          bfs.queue.push_back(w);
        } else {
          const int candidate = du + dw + 1;
          if (best == -1 || candidate < best) best = candidate;
        }
      }
    }
    if (best == 3) break;
  }
  return best == -1 ? GirthValue::infinite() : GirthValue(best);
}

inline int connected_component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    ++components;
    seen[static_cast<std::size_t>(root)] = 1;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int w : g.neighbors(queue[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
  }
  return components;
}

inline bool is_connected(const Graph& g) { return connected_component_count(g) <= 1; }

/// Subgraph induced by s, relabeled to 0..|s|-1 in the order given.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int v = s[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
    if (index[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("duplicate vertex id in selection");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  Graph sub(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int w : g.neighbors(s[i])) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
    }
  return sub;
}

}  // namespace mapgirth
