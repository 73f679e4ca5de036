#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/cliques.hpp"
#include "mapgirth/detect.hpp"
#include "mapgirth/errors.hpp"
#include "mapgirth/graph.hpp"
#include "mapgirth/incidence.hpp"
#include "mapgirth/planarity.hpp"

namespace mapgirth {

enum class Verdict { Yes, No };

enum class RecognitionMode { HalfSquareGirth, MapWitnessGirth, TreeWitness };

inline std::string to_string(RecognitionMode mode) {
  switch (mode) {
    case RecognitionMode::HalfSquareGirth: return "halfsquare";
    case RecognitionMode::MapWitnessGirth: return "map";
    case RecognitionMode::TreeWitness: return "tree";
  }
  return "unknown";
}

struct RecognitionStats {
  std::size_t clique_count = 0;
  std::size_t witness_vertices = 0;
  std::size_t witness_points = 0;
  std::size_t witness_edges = 0;
  std::vector<std::pair<std::string, double>> phase_ms;
};

/// Outcome of one recognition run. A Yes verdict always carries a witness
/// that has been re-validated (half-square equality plus the claimed girth
/// and planarity); a No verdict always carries a checkable obstruction.
struct RecognitionReport {
  Verdict verdict = Verdict::No;
  RecognitionMode mode = RecognitionMode::HalfSquareGirth;
  GirthValue girth_parameter;  // infinite in tree mode
  std::optional<BipartiteGraph> witness;
  std::optional<Obstruction> obstruction;
  RecognitionStats stats;

  bool yes() const { return verdict == Verdict::Yes; }
};

namespace detail {

class PhaseClock {
 public:
  explicit PhaseClock(RecognitionStats& stats) : stats_(stats), last_(Clock::now()) {}

  void lap(const char* phase) {
    const auto now = Clock::now();
    stats_.phase_ms.emplace_back(phase, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  using Clock = std::chrono::steady_clock;
  RecognitionStats& stats_;
  Clock::time_point last_;
};

inline void check_girth_parameter(int girth_min) {
  if (girth_min % 2 != 0) throw OddGirthParameter(girth_min);
  if (girth_min < 8) throw GirthParameterTooSmall(girth_min);
}

inline std::size_t isolated_vertex_count(const Graph& g) {
  std::size_t count = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) ++count;
  return count;
}

/// Every Yes report must survive this; a failure is a library bug, not an
/// input property, hence logic_error.
inline void validate_witness(const Graph& g, const BipartiteGraph& witness, GirthValue bound,
                             bool require_planar) {
  if (half_square(witness, HalfSquareSide::Vertex) != g)
    throw std::logic_error("witness validation failed: half-square mismatch");
  if (bound.is_infinite()) {
    if (find_any_cycle(witness))
      throw std::logic_error("witness validation failed: cyclic tree witness");
  } else if (!girth_at_least(witness, bound.value())) {
    throw std::logic_error("witness validation failed: girth below bound");
  }
  if (require_planar && !is_planar(witness).planar)
    throw std::logic_error("witness validation failed: nonplanar witness");
}

inline RecognitionReport reject(RecognitionReport report, Obstruction obstruction) {
  report.verdict = Verdict::No;
  report.obstruction = std::move(obstruction);
  return report;
}

/// Shared pipeline for the girth-bounded modes: forbidden induced subgraphs,
/// capped clique enumeration, incidence construction, incidence girth, and
/// (map mode) planarity. Disconnected inputs need no special casing: cliques,
/// girth and planarity all decompose over components, so the conjunction of
/// per-component verdicts is exactly what the one-shot pipeline computes.
inline RecognitionReport recognize_girth_witness(const Graph& g, int girth_min,
                                                 bool require_planar) {
  check_girth_parameter(girth_min);
  const int t = girth_min / 2;

  RecognitionReport report;
  report.mode = require_planar ? RecognitionMode::MapWitnessGirth : RecognitionMode::HalfSquareGirth;
  report.girth_parameter = GirthValue(girth_min);
  PhaseClock clock(report.stats);

  if (auto diamond = find_diamond(g)) {
    clock.lap("diamond");
    return reject(std::move(report), *diamond);
  }
  clock.lap("diamond");

  if (t >= 5 && g.vertex_count() >= 4) {
    if (auto cycle = find_short_induced_cycle(g, t - 1)) {
      clock.lap("induced-cycle");
      return reject(std::move(report), *cycle);
    }
    clock.lap("induced-cycle");
  }

  // Accepted map graphs have at most 27n maximal cliques; diamond-free
  // graphs at most one per edge plus one per isolated vertex. Blowing the
  // applicable cap in map mode proves the input is no map graph; in
  // half-square mode the diamond check already rules it out.
  const std::size_t cap =
      require_planar ? 27 * static_cast<std::size_t>(g.vertex_count())
                     : g.edge_count() + isolated_vertex_count(g);
  CliqueSet cliques;
  try {
    cliques = maximal_cliques_diamond_free(g, cap);
  } catch (const CapExceeded&) {
    if (!require_planar)
      throw std::logic_error("diamond-free graph exceeded the per-edge clique bound");
    clock.lap("cliques");
    return reject(std::move(report), Obstruction{ObstructionKind::CliqueCapExceeded, {}, 0});
  }
  clock.lap("cliques");
  report.stats.clique_count = cliques.cliques.size();

  BipartiteGraph incidence = build_vertex_clique_incidence(g, cliques);
  report.stats.witness_vertices = static_cast<std::size_t>(incidence.vertex_side_count());
  report.stats.witness_points = static_cast<std::size_t>(incidence.point_side_count());
  report.stats.witness_edges = incidence.edge_count();
  clock.lap("incidence");

  if (auto cycle = find_short_cycle(incidence, girth_min)) {
    clock.lap("incidence-girth");
    return reject(std::move(report),
                  Obstruction{ObstructionKind::WitnessShortCycle, *cycle,
                              static_cast<int>(cycle->size())});
  }
  clock.lap("incidence-girth");

  if (require_planar) {
    PlanarityResult planarity = is_planar(incidence);
    clock.lap("planarity");
    if (!planarity.planar)
      return reject(std::move(report),
                    Obstruction{ObstructionKind::WitnessNonplanar,
                                planarity.obstruction.value_or(std::vector<int>{}), 0});
  }

  validate_witness(g, incidence, report.girth_parameter, require_planar);
  clock.lap("validate");
  report.verdict = Verdict::Yes;
  report.witness = std::move(incidence);
  return report;
}

}  // namespace detail

/// Is g the half-square of some bipartite graph of girth >= girth_min?
/// girth_min must be even and at least 8. Yes reports carry the vertex-clique
/// incidence graph as witness.
inline RecognitionReport recognize_half_square_girth(const Graph& g, int girth_min) {
  return detail::recognize_girth_witness(g, girth_min, false);
}

/// Is g a map graph with a witness of girth >= girth_min? As above plus a
/// planarity check on the incidence graph.
inline RecognitionReport recognize_map_witness_girth(const Graph& g, int girth_min) {
  return detail::recognize_girth_witness(g, girth_min, true);
}

/// Is g a map graph with an acyclic witness? Equivalent to g being a block
/// graph; the witness is the vertex-clique incidence graph, which must be a
/// forest. Rejections surface a diamond or an induced cycle of g, in that
/// order of preference.
inline RecognitionReport recognize_tree_witness(const Graph& g) {
  RecognitionReport report;
  report.mode = RecognitionMode::TreeWitness;
  report.girth_parameter = GirthValue::infinite();
  detail::PhaseClock clock(report.stats);

  if (auto diamond = find_diamond(g)) {
    clock.lap("diamond");
    return detail::reject(std::move(report), *diamond);
  }
  clock.lap("diamond");

  CliqueSet cliques =
      maximal_cliques_diamond_free(g, g.edge_count() + detail::isolated_vertex_count(g));
  clock.lap("cliques");
  report.stats.clique_count = cliques.cliques.size();

  BipartiteGraph incidence = build_vertex_clique_incidence(g, cliques);
  report.stats.witness_vertices = static_cast<std::size_t>(incidence.vertex_side_count());
  report.stats.witness_points = static_cast<std::size_t>(incidence.point_side_count());
  report.stats.witness_edges = incidence.edge_count();
  clock.lap("incidence");

  if (!find_any_cycle(incidence)) {
    detail::validate_witness(g, incidence, GirthValue::infinite(), true);
    clock.lap("validate");
    report.verdict = Verdict::Yes;
    report.witness = std::move(incidence);
    return report;
  }
  clock.lap("acyclicity");

  if (g.vertex_count() >= 4) {
    if (auto cycle = find_short_induced_cycle(g, g.vertex_count())) {
      clock.lap("induced-cycle");
      return detail::reject(std::move(report), *cycle);
    }
  }
  throw std::logic_error("cyclic incidence graph for a diamond-free chordal graph");
}

}  // namespace mapgirth
