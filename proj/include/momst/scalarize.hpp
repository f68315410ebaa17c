#pragma once

#include <span>
#include <vector>

#include "momst/archive.hpp"
#include "momst/graph.hpp"
#include "momst/spanning_tree.hpp"
#include "momst/union_find.hpp"

namespace momst {

// Weighted-sum view of a graph: w(e) = lambda*c1 + (1-lambda)*c2.
// lambda must lie in [0, 1].
struct ScalarizedView {
  const Graph* host;
  double lambda;

  ScalarizedView(const Graph& g, double l);
  double weight(int edge_index) const {
    const CostVector& c = host->edge(edge_index).cost;
    return lambda * c.c1 + (1.0 - lambda) * c.c2;
  }
  // Complementary weight c_{1-lambda}; the secondary sort key of the MST
  // routines.
  double tie_weight(int edge_index) const {
    const CostVector& c = host->edge(edge_index).cost;
    return (1.0 - lambda) * c.c1 + lambda * c.c2;
  }
};

// All MST routines below order edges by the strict total key
// (weight, tie_weight, edge index). The complementary middle key matters at
// the boundary weights: at lambda = 1 it makes the result the minimum-c1
// tree with the smallest c2 among those (and symmetrically at lambda = 0),
// i.e. an efficient extreme rather than an arbitrary minimum-weight tree.
// The mutation operators' no-deterioration guarantee depends on exactly
// this. The trailing index key keeps every output a deterministic function
// of the input edge order.

// MST of the full host graph. Throws NoSpanningTreeError if disconnected.
SpanningTree kruskal(const ScalarizedView& view);

// MST of the sub-graph induced by `nodes` (distinct ids). Returns the chosen
// edge indices, |nodes| - 1 of them. Throws NoSpanningTreeError if the
// induced sub-graph is disconnected.
std::vector<int> kruskal_on_nodes(const ScalarizedView& view, std::span<const int> nodes);

// Same contract as kruskal_on_nodes but Prim's algorithm (dense, O(s^2)).
// Produces an MST of equal total weight; the edge set may differ from
// Kruskal's under ties.
std::vector<int> prim_on_nodes(const ScalarizedView& view, std::span<const int> nodes);

// Kruskal seeded with a partial forest: the forest edges are fixed in the
// output and the scan completes them to a spanning tree. `uf` must reflect
// exactly the components of `forest_edges` (verified; ContractError) and is
// advanced by the unions performed.
SpanningTree kruskal_seeded(const ScalarizedView& view,
                            std::span<const int> forest_edges, UnionFind& uf);

// Supported-front sweep: solve k evenly spaced weights lambda_idx =
// (k-1-idx)/(k-1), idx = 0..k-1 (endpoints included exactly), archive every
// tree. k >= 2.
ParetoArchive weighted_sum_sweep(const Graph& g, int k);

}  // namespace momst
