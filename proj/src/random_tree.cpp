#include "momst/random_tree.hpp"

#include <vector>

#include "momst/errors.hpp"
#include "momst/union_find.hpp"

namespace momst {

namespace {

bool is_connected(const Graph& g) {
  UnionFind uf(g.node_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.components() == 1;
}

}  // namespace

SpanningTree random_spanning_tree(const Graph& g, Rng& rng) {
  const int n = g.node_count();
  if (!is_connected(g)) throw NoSpanningTreeError("random_spanning_tree: graph is disconnected");
  if (n == 1) return SpanningTree(g, {});

  std::vector<unsigned char> visited(n, 0);
  std::vector<int> tree;
  tree.reserve(n - 1);

  int current = rng.uniform_int(0, n - 1);
  visited[current] = 1;
  int covered = 1;
  while (covered < n) {
    const auto nbrs = g.neighbors(current);
    const AdjEntry& step = nbrs[rng.below(nbrs.size())];
    if (!visited[step.neighbor]) {
      visited[step.neighbor] = 1;
      ++covered;
      tree.push_back(step.edge);
    }
    current = step.neighbor;
  }
  return SpanningTree(g, std::move(tree));
}

}  // namespace momst
