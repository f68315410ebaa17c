#pragma once

#include <functional>
#include <vector>

#include "momst/graph.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Exhaustive spanning-tree enumeration for oracle checks. Hard-capped at
// n <= 9 (complete graphs have n^(n-2) trees; 9^7 is the last sane size) --
// larger inputs throw ContractError rather than run away.
//
// Complete hosts are enumerated through Prufer codes; everything else via
// backtracking over acyclic edge subsets. Each tree is passed to fn exactly
// once. The visitation order is deterministic.
void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const SpanningTree&)>& fn);

// Materialized variant. Beware of memory at n = 9 on complete graphs.
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

}  // namespace momst
