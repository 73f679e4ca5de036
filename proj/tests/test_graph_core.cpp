#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mapgirth/graph.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace mapgirth;
using testsupport::Rng;

TEST_CASE("girth of small graphs") {
  CHECK(girth(testsupport::path_graph(3)).is_infinite());
  CHECK(girth(testsupport::cycle_graph(6)).value() == 6);
  CHECK(girth(testsupport::cycle_graph(3)).value() == 3);
  CHECK(girth(Graph(0)).is_infinite());
  CHECK(girth(Graph(1)).is_infinite());
  CHECK(girth(testsupport::petersen_graph()).value() == 5);
}

TEST_CASE("girth of the small map graph's witness is four") {
  const auto witness = testsupport::small_map_graph_witness();
  // Exhaustive shortest-cycle oracle on the combined view.
  const auto brute = testsupport::brute_girth(witness);
  REQUIRE(brute.has_value());
  CHECK(*brute == 4);
  CHECK(girth(witness).value() == 4);
}

TEST_CASE("girth agrees with the per-edge-deletion oracle on random graphs") {
  Rng rng(20240901);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<int> size(1, 9);
    std::uniform_real_distribution<double> prob(0.05, 0.9);
    const Graph g = testsupport::random_graph(size(rng), prob(rng), rng);
    const auto expected = testsupport::brute_girth(g);
    const GirthValue got = girth(g);
    if (expected) {
      REQUIRE_FALSE(got.is_infinite());
      CHECK(got.value() == *expected);
    } else {
      CHECK(got.is_infinite());
    }
  }
}

TEST_CASE("girth is infinite exactly on forests") {
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> size(1, 10);
    std::uniform_real_distribution<double> prob(0.0, 0.5);
    const Graph g = testsupport::random_graph(size(rng), prob(rng), rng);
    const bool forest =
        g.edge_count() == static_cast<std::size_t>(g.vertex_count() - connected_component_count(g));
    CHECK(girth(g).is_infinite() == forest);
  }
}

TEST_CASE("girth is invariant under relabeling") {
  Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    const Graph g = testsupport::random_graph(8, 0.3, rng);
    CHECK(girth(g) == girth(testsupport::permuted(g, rng)));
  }
}

TEST_CASE("find_short_cycle certifies exactly the short cycles") {
  Rng rng(4242);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> size(2, 9);
    std::uniform_real_distribution<double> prob(0.1, 0.7);
    const Graph g = testsupport::random_graph(size(rng), prob(rng), rng);
    const auto actual = testsupport::brute_girth(g);
    for (int bound : {4, 6, 8, 10}) {
      const auto cycle = find_short_cycle(g, bound);
      const bool has_short = actual.has_value() && *actual < bound;
      CHECK(cycle.has_value() == has_short);
      if (cycle) {
        CHECK(static_cast<int>(cycle->size()) < bound);
        CHECK(cycle->size() >= 3);
        for (std::size_t i = 0; i < cycle->size(); ++i)
          CHECK(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
      }
    }
  }
}

TEST_CASE("find_any_cycle returns a real cycle or proves a forest") {
  Rng rng(1234);
  for (int round = 0; round < 200; ++round) {
    const Graph g = testsupport::random_graph(9, 0.2, rng);
    const auto cycle = find_any_cycle(g);
    CHECK(cycle.has_value() == testsupport::brute_girth(g).has_value());
    if (cycle) {
      CHECK(cycle->size() >= 3);
      for (std::size_t i = 0; i < cycle->size(); ++i)
        CHECK(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(testsupport::complete_graph(3)));
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  CHECK_FALSE(is_connected(two_edges));
  CHECK(connected_component_count(two_edges) == 2);
  CHECK(is_connected(testsupport::chained_triangles_graph()));
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("induced subgraphs") {
  const Graph k4 = testsupport::complete_graph(4);
  CHECK(induced_subgraph(k4, {0, 1, 3}) == testsupport::complete_graph(3));

  const Graph diamond = testsupport::diamond_graph();
  const Graph pair = induced_subgraph(diamond, {2, 3});  // the degree-2 tips
  CHECK(pair.vertex_count() == 2);
  CHECK(pair.edge_count() == 0);

  // {1, 3, a, b} induces a diamond in the small map graph.
  const Graph sub = induced_subgraph(testsupport::small_map_graph(), {0, 2, 4, 5});
  CHECK(sub.edge_count() == 5);

  CHECK_THROWS_AS(induced_subgraph(k4, {0, 7}), std::out_of_range);
  CHECK_THROWS_AS(induced_subgraph(k4, {0, 0}), std::invalid_argument);
}

TEST_CASE("graph invariants are enforced") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::out_of_range);
  g.add_edge(1, 0);
  g.add_edge(0, 1);  // duplicate ignored
  CHECK(g.edge_count() == 1);
  CHECK(g.neighbors(0) == std::vector<int>{1});
}

TEST_CASE("bipartite graph basics") {
  BipartiteGraph b(3);
  const int p = b.add_point({2, 0, 2});  // deduplicated, sorted
  CHECK(b.point_neighbors(p) == std::vector<int>{0, 2});
  CHECK(b.edge_count() == 2);
  CHECK_THROWS_AS(b.add_point({3}), std::out_of_range);
  const Graph view = b.as_graph();
  CHECK(view.vertex_count() == 4);
  CHECK(view.has_edge(0, 3));
  CHECK(view.has_edge(2, 3));
}
