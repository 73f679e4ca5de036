#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mapgirth/incidence.hpp"
#include "mapgirth/oracle.hpp"
#include "mapgirth/planarity.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mapgirth;
using testsupport::Rng;

TEST_CASE("named planar and nonplanar graphs") {
  CHECK(is_planar(testsupport::complete_graph(4)).planar);
  CHECK_FALSE(is_planar(testsupport::complete_graph(5)).planar);
  CHECK_FALSE(is_planar(testsupport::complete_bipartite_graph(3, 3)).planar);
  CHECK(is_planar(testsupport::complete_bipartite_graph(2, 3)).planar);
  CHECK_FALSE(is_planar(testsupport::petersen_graph()).planar);
  CHECK(is_planar(testsupport::cycle_graph(10)).planar);
  CHECK(is_planar(Graph(0)).planar);
  CHECK(is_planar(testsupport::chained_triangles_graph()).planar);
}

TEST_CASE("the incidence graph of the chained-triangles instance is nonplanar") {
  const auto b = build_vertex_clique_incidence(testsupport::chained_triangles_graph());
  CHECK_FALSE(is_planar(b).planar);
  // Its subdivision, by contrast, is planar since the graph is.
  CHECK(is_planar(build_subdivision(testsupport::chained_triangles_graph())).planar);
}

TEST_CASE("K5 and K3,3 stay nonplanar under subdividing edges") {
  // Subdivisions as bipartite incidence structures are planar iff the base
  // graph is; as plain graphs they are Kuratowski subdivisions themselves.
  for (const Graph& base :
       {testsupport::complete_graph(5), testsupport::complete_bipartite_graph(3, 3)}) {
    CHECK_FALSE(is_planar(build_subdivision(base).as_graph()).planar);
  }
}

TEST_CASE("agreement with the Kuratowski-subdivision oracle on small graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n, true))
      CHECK(is_planar(g).planar == testsupport::brute_planar(g));
}

TEST_CASE("agreement with the oracle on random graphs up to nine nodes") {
  Rng rng(314);
  for (int round = 0; round < 400; ++round) {
    std::uniform_int_distribution<int> size(1, 9);
    std::uniform_real_distribution<double> prob(0.2, 0.9);
    const Graph g = testsupport::random_graph(size(rng), prob(rng), rng);
    CHECK(is_planar(g).planar == testsupport::brute_planar(g));
  }
}

TEST_CASE("agreement with the oracle on incidence graphs of small graphs") {
  // Census-produced bipartite instances with at most nine nodes.
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n, true)) {
      const auto b = build_vertex_clique_incidence(g);
      if (b.node_count() > 9) continue;
      CHECK(is_planar(b).planar == testsupport::brute_planar(b));
    }
}

TEST_CASE("verdict is invariant under relabeling") {
  Rng rng(315);
  for (int round = 0; round < 100; ++round) {
    const Graph g = testsupport::random_graph(9, 0.4, rng);
    CHECK(is_planar(g).planar == is_planar(testsupport::permuted(g, rng)).planar);
  }
}

TEST_CASE("edge-count prefilter soundness") {
  // Connected graphs with girth g0 and more than g0/(g0-2) (n-2) edges must
  // be reported nonplanar.
  Rng rng(316);
  int dense_cases = 0;
  for (int round = 0; round < 3000; ++round) {
    std::uniform_int_distribution<int> size(3, 10);
    std::uniform_real_distribution<double> prob(0.2, 0.95);
    const Graph g = testsupport::random_graph(size(rng), prob(rng), rng);
    if (!is_connected(g)) continue;
    const GirthValue g0 = girth(g);
    if (g0.is_infinite()) continue;
    const double bound = static_cast<double>(g0.value()) / (g0.value() - 2) *
                         (g.vertex_count() - 2);
    if (static_cast<double>(g.edge_count()) > bound) {
      ++dense_cases;
      CHECK_FALSE(is_planar(g).planar);
    }
  }
  CHECK(dense_cases > 100);
}

TEST_CASE("random planar constructions are accepted") {
  Rng rng(317);
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> size(3, 40);
    const Graph tri = testsupport::random_planar_triangulation(size(rng), rng);
    CHECK(tri.edge_count() == static_cast<std::size_t>(3 * tri.vertex_count() - 6));
    CHECK(is_planar(tri).planar);
    CHECK(is_planar(testsupport::random_connected_planar(size(rng), 0.6, rng)).planar);
  }
}

TEST_CASE("adding a crossing edge to a large planar graph is caught") {
  Rng rng(318);
  Graph tri = testsupport::random_planar_triangulation(60, rng);
  // A triangulation is edge-maximal planar: any further edge breaks it.
  for (int u = 0; u < tri.vertex_count() && tri.edge_count() < 3u * 60 - 5; ++u)
    for (int v = u + 1; v < tri.vertex_count(); ++v)
      if (!tri.has_edge(u, v)) {
        tri.add_edge(u, v);
        CHECK_FALSE(is_planar(tri).planar);
        goto done;
      }
done:;
}

TEST_CASE("disconnected inputs are planar iff every component is") {
  Graph two(10);
  // K5 plus an isolated path.
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) two.add_edge(u, v);
  for (int v = 5; v < 9; ++v) two.add_edge(v, v + 1);
  CHECK_FALSE(is_planar(two).planar);

  Graph both_planar(8);
  for (int v = 0; v < 3; ++v) both_planar.add_edge(v, (v + 1) % 3);
  for (int v = 4; v < 7; ++v) both_planar.add_edge(v, v + 1);
  CHECK(is_planar(both_planar).planar);
}
