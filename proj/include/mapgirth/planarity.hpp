#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/graph.hpp"

namespace mapgirth {

/// Planarity verdict. The obstruction slot is best-effort and may stay empty
/// even for nonplanar inputs; when present it lists the vertices of a
/// K5 or K3,3 subdivision.
struct PlanarityResult {
  bool planar = false;
  std::optional<std::vector<int>> obstruction;
};

namespace detail {

// Left-right planarity criterion over a DFS orientation. Both passes are
// iterative so that path-like inputs with 10^5+ vertices stay within stack
// limits. Only the boolean test is performed; no embedding is produced.
class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g) {}

  bool run() {
    const int n = g_.vertex_count();
    const std::size_t m = g_.edge_count();
    if (n >= 3 && m > 3 * static_cast<std::size_t>(n) - 6) return false;
    if (m < 9 || n < 5) return true;  // below both Kuratowski graphs

    build_edges();
    for (int r = 0; r < n; ++r)
      if (height_[static_cast<std::size_t>(r)] == -1) {
        height_[static_cast<std::size_t>(r)] = 0;
        orient_from(r);
      }
    build_ordered_adjacency();
    for (int r = 0; r < n; ++r)
      if (parent_edge_[static_cast<std::size_t>(r)] == -1)
        if (!test_from(r)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone, high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval left, right;
    void swap_sides() { std::swap(left, right); }
  };

  void build_edges() {
    const int n = g_.vertex_count();
    const auto edge_list = g_.edges();
    const std::size_t m = edge_list.size();
    head_.resize(2 * m);
    for (std::size_t e = 0; e < m; ++e) {
      head_[2 * e] = edge_list[e].second;      // u -> v
      head_[2 * e + 1] = edge_list[e].first;   // v -> u
    }
    incidence_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t e = 0; e < m; ++e) {
      incidence_[static_cast<std::size_t>(edge_list[e].first)].push_back(static_cast<int>(2 * e));
      incidence_[static_cast<std::size_t>(edge_list[e].second)].push_back(
          static_cast<int>(2 * e + 1));
    }
    oriented_.assign(m, kNone);
    lowpt_.assign(2 * m, 0);
    lowpt2_.assign(2 * m, 0);
    nesting_depth_.assign(2 * m, 0);
    ref_.assign(2 * m, kNone);
    lowpt_edge_.assign(2 * m, kNone);
    stack_bottom_.assign(2 * m, 0);
    height_.assign(static_cast<std::size_t>(n), -1);
    parent_edge_.assign(static_cast<std::size_t>(n), kNone);
  }

  int tail(int did) const { return head_[static_cast<std::size_t>(did ^ 1)]; }

  // DFS pass one: orient edges, compute lowpt/lowpt2 and nesting depth.
  void orient_from(int root) {
    struct Frame {
      int v;
      std::size_t i = 0;
      int resume = kNone;  // tree edge whose subtree just finished
    };
    std::vector<Frame> st{{root}};
    while (!st.empty()) {
      Frame& f = st.back();
      const int v = f.v;
      if (f.resume != kNone) {
        finish_oriented_edge(v, f.resume);
        f.resume = kNone;
      }
      if (f.i >= incidence_[static_cast<std::size_t>(v)].size()) {
        st.pop_back();
        continue;
      }
      const int did = incidence_[static_cast<std::size_t>(v)][f.i++];
      const std::size_t eid = static_cast<std::size_t>(did) >> 1;
      if (oriented_[eid] != kNone) continue;
      oriented_[eid] = did;
      lowpt_[static_cast<std::size_t>(did)] = height_[static_cast<std::size_t>(v)];
      lowpt2_[static_cast<std::size_t>(did)] = height_[static_cast<std::size_t>(v)];
      const int w = head_[static_cast<std::size_t>(did)];
      if (height_[static_cast<std::size_t>(w)] == -1) {
        parent_edge_[static_cast<std::size_t>(w)] = did;
        height_[static_cast<std::size_t>(w)] = height_[static_cast<std::size_t>(v)] + 1;
        f.resume = did;
        st.push_back({w});
      } else {
        lowpt_[static_cast<std::size_t>(did)] = height_[static_cast<std::size_t>(w)];
        finish_oriented_edge(v, did);
      }
    }
  }

  void finish_oriented_edge(int v, int did) {
    const auto d = static_cast<std::size_t>(did);
    nesting_depth_[d] = 2 * lowpt_[d];
    if (lowpt2_[d] < height_[static_cast<std::size_t>(v)]) ++nesting_depth_[d];  // chordal
    const int pe = parent_edge_[static_cast<std::size_t>(v)];
    if (pe == kNone) return;
    const auto p = static_cast<std::size_t>(pe);
    if (lowpt_[d] < lowpt_[p]) {
      lowpt2_[p] = std::min(lowpt_[p], lowpt2_[d]);
      lowpt_[p] = lowpt_[d];
    } else if (lowpt_[d] > lowpt_[p]) {
      lowpt2_[p] = std::min(lowpt2_[p], lowpt_[d]);
    } else {
      lowpt2_[p] = std::min(lowpt2_[p], lowpt2_[d]);
    }
  }

  void build_ordered_adjacency() {
    const int n = g_.vertex_count();
    ordered_out_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t eid = 0; eid < oriented_.size(); ++eid) {
      const int did = oriented_[eid];
      if (did != kNone) ordered_out_[static_cast<std::size_t>(tail(did))].push_back(did);
    }
    for (auto& out : ordered_out_)
      std::sort(out.begin(), out.end(), [&](int a, int b) {
        const int na = nesting_depth_[static_cast<std::size_t>(a)];
        const int nb = nesting_depth_[static_cast<std::size_t>(b)];
        return na != nb ? na < nb : a < b;
      });
  }

  bool interval_conflicts(const Interval& i, int b) const {
    return !i.empty() && lowpt_[static_cast<std::size_t>(i.high)] > lowpt_[static_cast<std::size_t>(b)];
  }

  int pair_lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[static_cast<std::size_t>(p.right.low)];
    if (p.right.empty()) return lowpt_[static_cast<std::size_t>(p.left.low)];
    return std::min(lowpt_[static_cast<std::size_t>(p.left.low)],
                    lowpt_[static_cast<std::size_t>(p.right.low)]);
  }

  // DFS pass two: maintain the conflict-pair stack; fail on an unresolvable
  // same-side constraint.
  bool test_from(int root) {
    struct Frame {
      int v;
      std::size_t i = 0;
      int resume = kNone;
    };
    std::vector<Frame> st{{root}};
    while (!st.empty()) {
      Frame& f = st.back();
      const int v = f.v;
      if (f.resume != kNone) {
        const int done = f.resume;
        f.resume = kNone;
        if (!integrate_return_edges(v, done)) return false;
      }
      if (f.i >= ordered_out_[static_cast<std::size_t>(v)].size()) {
        const int pe = parent_edge_[static_cast<std::size_t>(v)];
        st.pop_back();
        if (pe != kNone) remove_back_edges(pe);
        continue;
      }
      const int ei = ordered_out_[static_cast<std::size_t>(v)][f.i++];
      stack_bottom_[static_cast<std::size_t>(ei)] = stack_.size();
      const int w = head_[static_cast<std::size_t>(ei)];
      if (ei == parent_edge_[static_cast<std::size_t>(w)]) {
        f.resume = ei;
        st.push_back({w});
      } else {
        lowpt_edge_[static_cast<std::size_t>(ei)] = ei;
        stack_.push_back(ConflictPair{{}, {ei, ei}});
        if (!integrate_return_edges(v, ei)) return false;
      }
    }
    return true;
  }

  bool integrate_return_edges(int v, int ei) {
    if (lowpt_[static_cast<std::size_t>(ei)] >= height_[static_cast<std::size_t>(v)]) return true;
    const int e = parent_edge_[static_cast<std::size_t>(v)];
    if (ei == ordered_out_[static_cast<std::size_t>(v)][0]) {
      if (e != kNone)
        lowpt_edge_[static_cast<std::size_t>(e)] = lowpt_edge_[static_cast<std::size_t>(ei)];
      return true;
    }
    return add_constraints(ei, e);
  }

  bool add_constraints(int ei, int e) {
    ConflictPair merged;
    // Merge the return edges of ei into the right interval.
    do {
      if (stack_.empty()) return false;
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) q.swap_sides();
      if (!q.left.empty()) return false;  // not planar
      if (lowpt_[static_cast<std::size_t>(q.right.low)] > lowpt_[static_cast<std::size_t>(e)]) {
        if (merged.right.empty())
          merged.right.high = q.right.high;
        else
          ref_[static_cast<std::size_t>(merged.right.low)] = q.right.high;
        merged.right.low = q.right.low;
      } else {
        ref_[static_cast<std::size_t>(q.right.low)] = lowpt_edge_[static_cast<std::size_t>(e)];
      }
    } while (stack_.size() > stack_bottom_[static_cast<std::size_t>(ei)]);
    // Merge the conflicting return edges of earlier siblings into the left.
    while (!stack_.empty() && (interval_conflicts(stack_.back().left, ei) ||
                               interval_conflicts(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (interval_conflicts(q.right, ei)) q.swap_sides();
      if (interval_conflicts(q.right, ei)) return false;  // not planar
      if (merged.right.low != kNone)
        ref_[static_cast<std::size_t>(merged.right.low)] = q.right.high;
      if (q.right.low != kNone) merged.right.low = q.right.low;
      if (merged.left.empty())
        merged.left.high = q.left.high;
      else
        ref_[static_cast<std::size_t>(merged.left.low)] = q.left.high;
      merged.left.low = q.left.low;
    }
    if (!(merged.left.empty() && merged.right.empty())) stack_.push_back(merged);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = tail(e);
    const int hu = height_[static_cast<std::size_t>(u)];
    // Drop conflict pairs whose lowest return point is u itself.
    while (!stack_.empty() && pair_lowest(stack_.back()) == hu) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != kNone && head_[static_cast<std::size_t>(p.left.high)] == u)
        p.left.high = ref_[static_cast<std::size_t>(p.left.high)];
      if (p.left.high == kNone && p.left.low != kNone) {
        ref_[static_cast<std::size_t>(p.left.low)] = p.right.low;
        p.left.low = kNone;
      }
      while (p.right.high != kNone && head_[static_cast<std::size_t>(p.right.high)] == u)
        p.right.high = ref_[static_cast<std::size_t>(p.right.high)];
      if (p.right.high == kNone && p.right.low != kNone) {
        ref_[static_cast<std::size_t>(p.right.low)] = p.left.low;
        p.right.low = kNone;
      }
      stack_.push_back(p);
    }
    // The parent edge inherits the side of a highest surviving return edge.
    if (lowpt_[static_cast<std::size_t>(e)] < hu && !stack_.empty()) {
      const int hl = stack_.back().left.high;
      const int hr = stack_.back().right.high;
      if (hl != kNone && (hr == kNone || lowpt_[static_cast<std::size_t>(hl)] >
                                             lowpt_[static_cast<std::size_t>(hr)]))
        ref_[static_cast<std::size_t>(e)] = hl;
      else
        ref_[static_cast<std::size_t>(e)] = hr;
    }
  }

  const Graph& g_;
  std::vector<int> head_;                       // per directed edge id
  std::vector<std::vector<int>> incidence_;     // outgoing directed edge ids
  std::vector<int> oriented_;                   // chosen direction per edge
  std::vector<int> lowpt_, lowpt2_, nesting_depth_, ref_, lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<int> height_, parent_edge_;
  std::vector<std::vector<int>> ordered_out_;
  std::vector<ConflictPair> stack_;
};

}  // namespace detail

/// Exact planarity via the left-right criterion; linear apart from sorting
/// adjacency by nesting depth. No certificate is extracted.
inline PlanarityResult is_planar(const Graph& g) {
  detail::LeftRightTest test(g);
  return PlanarityResult{test.run(), std::nullopt};
}

inline PlanarityResult is_planar(const BipartiteGraph& b) { return is_planar(b.as_graph()); }

}  // namespace mapgirth
