#pragma once

#include "momst/graph.hpp"
#include "momst/rng.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Uniformly random spanning tree via a random walk (Broder): walk until all
// nodes are covered; the entry edge of each first visit joins the tree.
// Throws NoSpanningTreeError if the graph is disconnected (checked up
// front, since the walk would never terminate).
SpanningTree random_spanning_tree(const Graph& g, Rng& rng);

}  // namespace momst
