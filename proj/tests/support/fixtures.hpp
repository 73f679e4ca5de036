#pragma once

// The two regression instances used throughout the suite, with the dense id
// assignment the fixture files produce (first-appearance order).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mapgirth/bipartite.hpp"
#include "mapgirth/graph.hpp"

namespace testsupport {

// 7 vertices: a four-cycle 1-2-3-4 plus a triangle {a, b, c} completely
// joined to it. Ids: 1,2,3,4 -> 0..3; a,b,c -> 4..6.
inline mapgirth::Graph small_map_graph() {
  mapgirth::Graph g(7);
  for (int i = 0; i < 4; ++i) g.add_edge(i, (i + 1) % 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  g.add_edge(4, 6);
  for (int i = 0; i < 4; ++i)
    for (int j = 4; j < 7; ++j) g.add_edge(i, j);
  return g;
}

// Its girth-4 witness: four points with neighborhoods {1,2,c}, {2,3,a,b,c},
// {3,4,c}, {1,4,a,b}.
inline mapgirth::BipartiteGraph small_map_graph_witness() {
  mapgirth::BipartiteGraph b(7);
  b.add_point({0, 1, 6});
  b.add_point({1, 2, 4, 5, 6});
  b.add_point({2, 3, 6});
  b.add_point({0, 3, 4, 5});
  return b;
}

// 9 vertices: three triangles {1,4,7}, {2,5,8}, {3,6,9} chained by the six
// edges 12, 23, 45, 56, 78, 89. Diamond-free and planar, but its
// vertex-clique incidence graph is not planar. Ids: label k -> k-1.
inline mapgirth::Graph chained_triangles_graph() {
  mapgirth::Graph g(9);
  auto edge = [&](int a, int b) { g.add_edge(a - 1, b - 1); };
  edge(1, 2); edge(2, 3); edge(3, 6); edge(6, 9); edge(8, 9); edge(7, 8);
  edge(1, 7); edge(1, 4); edge(4, 7); edge(4, 5); edge(5, 6); edge(2, 5);
  edge(5, 8); edge(2, 8); edge(3, 9);
  return g;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace testsupport
