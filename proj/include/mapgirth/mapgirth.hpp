#pragma once

// Recognition of half-squares of large-girth bipartite graphs and of map
// graphs with large-girth witnesses, plus the exhaustive small-graph
// machinery used to cross-validate the recognizers.

#include "mapgirth/bipartite.hpp"
#include "mapgirth/cliques.hpp"
#include "mapgirth/detect.hpp"
#include "mapgirth/errors.hpp"
#include "mapgirth/graph.hpp"
#include "mapgirth/graph_io.hpp"
#include "mapgirth/incidence.hpp"
#include "mapgirth/oracle.hpp"
#include "mapgirth/planarity.hpp"
#include "mapgirth/recognizer.hpp"
