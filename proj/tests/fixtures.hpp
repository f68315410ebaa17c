#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "momst/graph.hpp"
#include "momst/rng.hpp"
#include "momst/spanning_tree.hpp"

namespace fixtures {

// 9-node worked example used by the sub-graph operator goldens: a 3x3
// grid-ish graph with hand-picked costs whose mutation outcomes were
// verified by hand. Edge order matters (it is the tie-break order).
inline momst::Graph fig_graph() {
  momst::Graph g(9);
  g.add_edge(0, 1, {2, 2});    // e0
  g.add_edge(0, 3, {4, 1});    // e1
  g.add_edge(1, 2, {5, 3});    // e2
  g.add_edge(1, 4, {1, 1});    // e3
  g.add_edge(2, 4, {1, 1});    // e4
  g.add_edge(3, 4, {3, 1});    // e5
  g.add_edge(3, 6, {6, 8});    // e6
  g.add_edge(3, 7, {3, 1});    // e7
  g.add_edge(4, 5, {6, 8});    // e8
  g.add_edge(4, 7, {1, 9});    // e9
  g.add_edge(5, 7, {6, 6});    // e10
  g.add_edge(5, 8, {3, 1});    // e11
  g.add_edge(6, 7, {10, 2});   // e12
  g.add_edge(7, 8, {1, 5});    // e13
  return g;
}

// Parent tree shared by both golden scenarios.
inline std::vector<int> fig_parent_edges() { return {0, 2, 4, 6, 9, 11, 12, 13}; }

template <typename CostFn>
momst::Graph make_complete(int n, CostFn&& cost) {
  momst::Graph g(n, true);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, cost(u, v));
  return g;
}

// Complete graph with small integer costs; deliberately tie-heavy so the
// deterministic tie-breaks get exercised.
inline momst::Graph random_complete(int n, momst::Rng& rng, int max_cost = 30) {
  return make_complete(n, [&](int, int) {
    return momst::CostVector{static_cast<double>(rng.uniform_int(1, max_cost)),
                             static_cast<double>(rng.uniform_int(1, max_cost))};
  });
}

// Connected sparse graph: a random spanning tree plus `extra` distinct
// non-tree edges.
inline momst::Graph random_connected_sparse(int n, int extra, momst::Rng& rng,
                                            int max_cost = 30) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(rng.uniform_int(0, v - 1), v);
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool in_tree =
          std::find(pairs.begin(), pairs.end(), std::make_pair(std::min(u, v), v)) !=
          pairs.end();
      if (!in_tree) all.emplace_back(u, v);
    }
  for (int k = 0; k < extra && !all.empty(); ++k) {
    const std::size_t pick = rng.below(all.size());
    pairs.push_back(all[pick]);
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  momst::Graph g(n);
  for (auto [u, v] : pairs)
    g.add_edge(u, v,
               {static_cast<double>(rng.uniform_int(1, max_cost)),
                static_cast<double>(rng.uniform_int(1, max_cost))});
  return g;
}

inline momst::SpanningTree tree_of(const momst::Graph& g, std::vector<int> edges) {
  return momst::SpanningTree(g, std::move(edges));
}

}  // namespace fixtures
