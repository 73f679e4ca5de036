#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/cliques.hpp"
#include "mapgirth/detect.hpp"
#include "mapgirth/errors.hpp"
#include "mapgirth/graph.hpp"
#include "mapgirth/graph_io.hpp"
#include "mapgirth/incidence.hpp"
#include "mapgirth/planarity.hpp"
#include "mapgirth/recognizer.hpp"

namespace mapgirth {

namespace detail {

constexpr int kEnumerationLimit = 8;
constexpr int kWitnessSearchLimit = 9;  // admits the nine-vertex regression fixture

// Small graphs live in one word: bit j(j-1)/2 + i holds pair (i, j), i < j.
inline std::size_t pair_index(int i, int j) {
  return static_cast<std::size_t>(j) * (static_cast<std::size_t>(j) - 1) / 2 +
         static_cast<std::size_t>(i);
}

inline std::array<std::uint8_t, 8> mask_rows(int n, std::uint32_t mask) {
  std::array<std::uint8_t, 8> rows{};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> pair_index(i, j)) & 1u) {
        rows[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1u << j);
        rows[static_cast<std::size_t>(j)] |= static_cast<std::uint8_t>(1u << i);
      }
  return rows;
}

inline bool mask_connected(int n, std::uint32_t mask) {
  if (n <= 1) return true;
  const auto rows = mask_rows(n, mask);
  std::uint8_t seen = 1;
  std::uint8_t frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier & (1u << v)) next |= rows[static_cast<std::size_t>(v)];
    frontier = static_cast<std::uint8_t>(next & ~seen);
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

/// True iff no relabeling produces a lexicographically smaller adjacency
/// bit string (bits in pair_index order). The backtracking only descends
/// while the partial code equals the identity prefix, so it effectively
/// walks the partial-automorphism tree and is cheap in practice.
inline bool mask_is_canonical(int n, std::uint32_t mask) {
  const auto rows = mask_rows(n, mask);
  std::array<int, 8> image{};
  std::array<bool, 8> used{};

  // found_smaller is the search result; returns true to abort early.
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == n) return false;  // full image equals identity: an automorphism
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      int cmp = 0;  // -1: new block smaller, +1: larger, 0: equal so far
      for (int i = 0; i < k && cmp == 0; ++i) {
        const int original =
            (mask >> pair_index(i, k)) & 1u;
        const int relabeled =
            (rows[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] >> c) & 1u;
        cmp = relabeled - original;
      }
      if (cmp < 0) return true;  // strictly smaller code exists
      if (cmp > 0) continue;     // prefix already larger; prune
      image[static_cast<std::size_t>(k)] = c;
      used[static_cast<std::size_t>(c)] = true;
      const bool smaller = place(k + 1);
      used[static_cast<std::size_t>(c)] = false;
      if (smaller) return true;
    }
    return false;
  };
  return !place(0);
}

inline Graph mask_to_graph(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((mask >> pair_index(i, j)) & 1u) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline void check_enumeration_size(int n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > kEnumerationLimit)
    throw LimitExceeded("exhaustive enumeration is limited to " +
                        std::to_string(kEnumerationLimit) + " vertices");
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/// Splits [0, count) into chunks, runs the worker on each chunk in its own
/// thread, and rethrows the first worker exception.
inline void parallel_chunks(std::size_t count, unsigned threads,
                            const std::function<void(std::size_t, std::size_t)>& work) {
  threads = resolve_threads(threads);
  if (threads <= 1 || count < 2) {
    work(0, count);
    return;
  }
  const std::size_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = std::min(count, w * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, w] {
      try {
        work(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

/// All connected masks on n labeled vertices, optionally reduced to
/// lexicographic-minimum representatives, in ascending mask order.
inline std::vector<std::uint32_t> collect_connected_masks(int n, bool canonical,
                                                          unsigned threads) {
  check_enumeration_size(n);
  const std::uint32_t total = n < 2 ? 1u : (1u << pair_index(0, n));
  std::vector<std::vector<std::uint32_t>> parts;
  threads = resolve_threads(threads);
  const std::uint32_t chunk = (total + threads - 1) / threads;
  parts.resize(threads);
  parallel_chunks(threads, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t w = lo; w < hi; ++w) {
      const std::uint32_t from = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(w) * chunk);
      const std::uint32_t to = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(from) + chunk);
      for (std::uint32_t mask = from; mask < to; ++mask) {
        if (!mask_connected(n, mask)) continue;
        if (canonical && !mask_is_canonical(n, mask)) continue;
        parts[w].push_back(mask);
      }
    }
  });
  std::vector<std::uint32_t> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace detail

/// Streams every connected simple graph on n labeled vertices (n <= 8).
/// With the canonical filter only the lexicographic-minimum representative
/// of each isomorphism class is produced.
inline void enumerate_connected_graphs(int n, bool canonical,
                                       const std::function<void(const Graph&)>& yield) {
  detail::check_enumeration_size(n);
  const std::uint32_t total = n < 2 ? 1u : (1u << detail::pair_index(0, n));
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    if (!detail::mask_connected(n, mask)) continue;
    if (canonical && !detail::mask_is_canonical(n, mask)) continue;
    yield(detail::mask_to_graph(n, mask));
  }
}

inline std::vector<Graph> connected_graphs(int n, bool canonical, unsigned threads = 0) {
  std::vector<Graph> out;
  for (std::uint32_t mask : detail::collect_connected_masks(n, canonical, threads))
    out.push_back(detail::mask_to_graph(n, mask));
  return out;
}

namespace detail {

/// State for the exhaustive witness search over edge clique partitions.
///
/// Reduction: in any bipartite graph whose half-square is g, each point's
/// neighborhood is a clique of g. A witness of girth >= 6 has no 4-cycle,
/// so two point neighborhoods share at most one vertex, which means the
/// neighborhoods of the points of degree >= 2 partition the edge set of g
/// into cliques; points of degree <= 1 add no half-square edges and can be
/// dropped. Searching all edge clique partitions is therefore exhaustive
/// for girth bounds of 6 and up. Partitions are enumerated by always
/// covering the lexicographically smallest uncovered edge, which visits
/// each partition exactly once.
struct WitnessSearch {
  const Graph& g;
  int girth_min;
  bool require_planar;
  std::vector<std::pair<int, int>> edges;
  std::vector<char> covered;
  std::size_t covered_count = 0;
  std::vector<std::vector<int>> parts;

  bool edge_covered(int u, int v) const {
    return covered[pair_index(std::min(u, v), std::max(u, v))] != 0;
  }

  void set_edge(int u, int v, char value) {
    covered[pair_index(std::min(u, v), std::max(u, v))] = value;
  }

  // Cliques through (u, v) whose edges are all uncovered, largest first so
  // single-clique witnesses (stars) come out of compact partitions.
  std::vector<std::vector<int>> candidate_cliques(int u, int v) const {
    std::vector<int> extension;
    const auto& nu = g.neighbors(u);
    for (int x : nu)
      if (g.has_edge(x, v) && !edge_covered(x, u) && !edge_covered(x, v)) extension.push_back(x);
    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
      if (i == extension.size()) {
        std::vector<int> clique{u, v};
        clique.insert(clique.end(), chosen.begin(), chosen.end());
        out.push_back(std::move(clique));
        return;
      }
      gen(i + 1);
      const int x = extension[i];
      for (int y : chosen)
        if (!g.has_edge(x, y) || edge_covered(x, y)) return;
      chosen.push_back(x);
      gen(i + 1);
      chosen.pop_back();
    };
    gen(0);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
  }

  BipartiteGraph assemble() const {
    BipartiteGraph b(g.vertex_count());
    int label = 0;
    for (const auto& part : parts) b.add_point(part, label++);
    return b;
  }

  bool partial_ok() const {
    BipartiteGraph b = assemble();
    if (find_short_cycle(b, girth_min)) return false;
    if (require_planar && !is_planar(b).planar) return false;
    return true;
  }

  std::optional<BipartiteGraph> search() {
    if (covered_count == edges.size()) {
      BipartiteGraph b = assemble();
      // Re-validate through the main library before handing it out.
      if (half_square(b, HalfSquareSide::Vertex) != g) return std::nullopt;
      if (!girth_at_least(b, girth_min)) return std::nullopt;
      if (require_planar) {
        if (!is_planar(b).planar) return std::nullopt;
        const int n = g.vertex_count();
        if (n >= 3 && b.point_side_count() > 3 * n - 6)
          throw std::logic_error("planar witness exceeded the 3n-6 point bound");
      }
      return b;
    }
    std::size_t next = 0;
    while (covered[pair_index(edges[next].first, edges[next].second)] != 0) ++next;
    const auto [u, v] = edges[next];
    for (auto& clique : candidate_cliques(u, v)) {
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) set_edge(clique[i], clique[j], 1);
      covered_count += clique.size() * (clique.size() - 1) / 2;
      parts.push_back(clique);
      if (partial_ok()) {
        if (auto found = search()) return found;
      }
      parts.pop_back();
      covered_count -= clique.size() * (clique.size() - 1) / 2;
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j) set_edge(clique[i], clique[j], 0);
    }
    return std::nullopt;
  }
};

}  // namespace detail

/// Exhaustive search for a bipartite graph B with half_square(B) = g and
/// girth(B) >= girth_min (>= 6, even), optionally planar. Returns the first
/// witness in a fixed search order, or nullopt when none exists. Connected
/// inputs with at most 8 vertices only.
inline std::optional<BipartiteGraph> brute_force_witness_search(const Graph& g, int girth_min,
                                                                bool require_planar) {
  if (girth_min % 2 != 0) throw OddGirthParameter(girth_min);
  if (girth_min < 6)
    throw std::invalid_argument("witness search needs a girth bound of at least 6");
  if (g.vertex_count() > detail::kWitnessSearchLimit)
    throw LimitExceeded("witness search is limited to " +
                        std::to_string(detail::kWitnessSearchLimit) + " vertices");
  if (!is_connected(g)) throw std::invalid_argument("witness search expects a connected graph");
  detail::WitnessSearch state{
      g, girth_min, require_planar, g.edges(),
      std::vector<char>(detail::pair_index(0, detail::kWitnessSearchLimit) +
                            detail::kWitnessSearchLimit,
                        0),
      0, {}};
  return state.search();
}

struct CensusCheck {
  std::string name;
  std::string bits;  // one character per computed route
  bool ok = true;    // all routes agree
};

struct CensusRow {
  std::string graph6;
  std::vector<CensusCheck> checks;
  bool ok = true;
};

struct CensusOptions {
  int n_max = 6;
  std::vector<int> t_values = {4, 5, 6};
  unsigned threads = 0;  // 0 = hardware concurrency
  // Test hook: negates the forbidden-subgraph route so the harness can show
  // that an injected fault produces counterexample rows.
  bool selftest_flip_forbidden_check = false;
};

/// Exhaustive cross-validation on all connected graphs up to n_max vertices
/// (canonical representatives): for each t, the forbidden-subgraph route
/// against the incidence-girth route; the three tree-witness routes; and,
/// up to 5 vertices, the girth-8 map recognizer against the exhaustive
/// witness search.
struct CensusReport {
  int n_max = 0;
  std::vector<int> t_values;
  std::size_t graph_count = 0;
  std::vector<CensusRow> rows;
  std::vector<std::string> counterexamples;  // "<graph6> <check name>"

  std::string to_text() const {
    std::string out;
    for (const auto& row : rows) {
      out += row.graph6;
      out += '\t';
      for (std::size_t i = 0; i < row.checks.size(); ++i) {
        if (i) out += ' ';
        out += row.checks[i].name + "=" + row.checks[i].bits;
      }
      out += '\n';
    }
    out += "# graphs: " + std::to_string(graph_count) + "\n";
    out += "# counterexamples: " + std::to_string(counterexamples.size()) + "\n";
    for (const auto& c : counterexamples) out += "# counterexample: " + c + "\n";
    return out;
  }
};

namespace detail {

inline CensusRow census_row(const Graph& g, const CensusOptions& options) {
  CensusRow row;
  row.graph6 = serialize_graph6(g);
  const int n = g.vertex_count();
  const CliqueSet cliques = maximal_cliques(g);
  const BipartiteGraph incidence = build_vertex_clique_incidence(g, cliques);
  const GirthValue incidence_girth = girth(incidence);
  const bool has_diamond = find_diamond(g).has_value();

  for (int t : options.t_values) {
    bool forbidden_free = !has_diamond;
    if (forbidden_free && t >= 5 && n >= 4)
      forbidden_free = !find_short_induced_cycle(g, t - 1).has_value();
    if (options.selftest_flip_forbidden_check) forbidden_free = !forbidden_free;
    const bool girth_ok = incidence_girth.at_least(2 * t);
    CensusCheck check;
    check.name = "g" + std::to_string(2 * t);
    check.bits = std::string(1, forbidden_free ? '1' : '0') + (girth_ok ? '1' : '0');
    check.ok = forbidden_free == girth_ok;
    row.checks.push_back(std::move(check));
  }
  {
    const bool recognized = recognize_tree_witness(g).yes();
    const bool block = is_block_graph(g);
    const bool forest = incidence_girth.is_infinite();
    CensusCheck check;
    check.name = "tree";
    check.bits = std::string(1, recognized ? '1' : '0');
    check.bits += block ? '1' : '0';
    check.bits += forest ? '1' : '0';
    check.ok = recognized == block && block == forest;
    row.checks.push_back(std::move(check));
  }
  if (n <= 5) {
    const bool recognized = recognize_map_witness_girth(g, 8).yes();
    const bool searched = brute_force_witness_search(g, 8, true).has_value();
    CensusCheck check;
    check.name = "map8";
    check.bits = std::string(1, recognized ? '1' : '0') + (searched ? '1' : '0');
    check.ok = recognized == searched;
    row.checks.push_back(std::move(check));
  }
  for (const auto& check : row.checks) row.ok = row.ok && check.ok;
  return row;
}

}  // namespace detail

inline CensusReport run_census(const CensusOptions& options) {
  if (options.n_max < 1 || options.n_max > 7)
    throw LimitExceeded("census supports 1 to 7 vertices");
  for (int t : options.t_values)
    if (t < 4) throw std::invalid_argument("census girth parameters start at t = 4");

  CensusReport report;
  report.n_max = options.n_max;
  report.t_values = options.t_values;
  for (int n = 1; n <= options.n_max; ++n) {
    std::vector<Graph> graphs = connected_graphs(n, true, options.threads);
    const std::size_t base = report.rows.size();
    report.rows.resize(base + graphs.size());
    detail::parallel_chunks(graphs.size(), options.threads, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i)
        report.rows[base + i] = detail::census_row(graphs[i], options);
    });
  }
  report.graph_count = report.rows.size();
  for (const auto& row : report.rows)
    for (const auto& check : row.checks)
      if (!check.ok) report.counterexamples.push_back(row.graph6 + " " + check.name);
  return report;
}

}  // namespace mapgirth
