#include "momst/scalarize.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

#include "momst/errors.hpp"

namespace momst {

ScalarizedView::ScalarizedView(const Graph& g, double l) : host(&g), lambda(l) {
  if (!(l >= 0.0 && l <= 1.0))
    throw ContractError("ScalarizedView: lambda must lie in [0, 1]");
}

namespace {

// (weight, complementary weight, edge index) triples in ascending order.
// The complementary key c_{1-lambda} settles weight ties before the index
// does: at the boundary weights (lambda 0 or 1) the greedy scan then yields
// the lexicographically optimal -- hence efficient -- tree, which the
// Pareto-beneficial operators require; at interior lambda any tie rule is
// safe and this one keeps determinism. Work stays proportional to the
// candidate count.
using OrderKey = std::tuple<double, double, int>;

std::vector<OrderKey> weight_order(const ScalarizedView& view, std::span<const int> indices) {
  std::vector<OrderKey> w;
  w.reserve(indices.size());
  for (int i : indices) w.emplace_back(view.weight(i), view.tie_weight(i), i);
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<OrderKey> weight_order_all(const ScalarizedView& view) {
  const int m = view.host->edge_count();
  std::vector<OrderKey> w;
  w.reserve(m);
  for (int i = 0; i < m; ++i) w.emplace_back(view.weight(i), view.tie_weight(i), i);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

SpanningTree kruskal(const ScalarizedView& view) {
  const Graph& g = *view.host;
  const int n = g.node_count();
  const auto order = weight_order_all(view);

  UnionFind uf(n);
  std::vector<int> chosen;
  chosen.reserve(n - 1);
  for (const auto& [w, w2, ei] : order) {
    const Edge& e = g.edge(ei);
    if (uf.unite(e.u, e.v)) {
      chosen.push_back(ei);
      if (static_cast<int>(chosen.size()) == n - 1) break;
    }
  }
  if (static_cast<int>(chosen.size()) != n - 1)
    throw NoSpanningTreeError("kruskal: graph is disconnected");
  return SpanningTree(g, std::move(chosen));
}

std::vector<int> kruskal_on_nodes(const ScalarizedView& view, std::span<const int> nodes) {
  const Graph& g = *view.host;
  const int s = static_cast<int>(nodes.size());
  if (s < 1) throw ContractError("kruskal_on_nodes: empty node set");

  std::vector<int> local(g.node_count(), -1);
  for (int i = 0; i < s; ++i) {
    if (local[nodes[i]] != -1) throw ContractError("kruskal_on_nodes: duplicate node");
    local[nodes[i]] = i;
  }

  // Candidate edges = both endpoints inside the set; v < w visits each once.
  std::vector<int> cand;
  for (int v : nodes)
    for (const AdjEntry& a : g.neighbors(v))
      if (v < a.neighbor && local[a.neighbor] != -1) cand.push_back(a.edge);
  const auto order = weight_order(view, cand);

  UnionFind uf(s);
  std::vector<int> chosen;
  chosen.reserve(s - 1);
  for (const auto& [w, w2, ei] : order) {
    const Edge& e = g.edge(ei);
    if (uf.unite(local[e.u], local[e.v])) {
      chosen.push_back(ei);
      if (static_cast<int>(chosen.size()) == s - 1) break;
    }
  }
  if (static_cast<int>(chosen.size()) != s - 1)
    throw NoSpanningTreeError("kruskal_on_nodes: induced sub-graph is disconnected");
  return chosen;
}

std::vector<int> prim_on_nodes(const ScalarizedView& view, std::span<const int> nodes) {
  const Graph& g = *view.host;
  const int s = static_cast<int>(nodes.size());
  if (s < 1) throw ContractError("prim_on_nodes: empty node set");

  std::vector<int> local(g.node_count(), -1);
  for (int i = 0; i < s; ++i) {
    if (local[nodes[i]] != -1) throw ContractError("prim_on_nodes: duplicate node");
    local[nodes[i]] = i;
  }

  // Dense Prim over local ids; frontier ties resolved by the same
  // (weight, complementary weight, edge index) key Kruskal sorts by, so both
  // algorithms realize the identical unique MST of the strict total order.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best_w(s, kInf);
  std::vector<double> best_w2(s, kInf);
  std::vector<int> best_e(s, -1);
  std::vector<unsigned char> in_tree(s, 0);
  best_w[0] = 0.0;
  best_w2[0] = 0.0;

  auto key_of = [&](int i) { return std::make_tuple(best_w[i], best_w2[i], best_e[i]); };

  std::vector<int> chosen;
  chosen.reserve(s - 1);
  for (int round = 0; round < s; ++round) {
    int pick = -1;
    for (int i = 0; i < s; ++i) {
      if (in_tree[i] || best_w[i] == kInf) continue;
      if (pick == -1 || key_of(i) < key_of(pick)) pick = i;
    }
    if (pick == -1) throw NoSpanningTreeError("prim_on_nodes: induced sub-graph is disconnected");
    in_tree[pick] = 1;
    if (best_e[pick] >= 0) chosen.push_back(best_e[pick]);
    for (const AdjEntry& a : g.neighbors(nodes[pick])) {
      const int j = local[a.neighbor];
      if (j == -1 || in_tree[j]) continue;
      const auto cand = std::make_tuple(view.weight(a.edge), view.tie_weight(a.edge), a.edge);
      if (cand < std::make_tuple(best_w[j], best_w2[j], best_e[j])) {
        best_w[j] = std::get<0>(cand);
        best_w2[j] = std::get<1>(cand);
        best_e[j] = std::get<2>(cand);
      }
    }
  }
  return chosen;
}

SpanningTree kruskal_seeded(const ScalarizedView& view,
                            std::span<const int> forest_edges, UnionFind& uf) {
  const Graph& g = *view.host;
  const int n = g.node_count();
  if (uf.element_count() != n)
    throw ContractError("kruskal_seeded: union-find size mismatch");

  // The caller-supplied union-find must describe exactly the forest's
  // components; a drifted structure would silently produce non-trees.
  UnionFind fresh(n);
  for (int ei : forest_edges) fresh.unite(g.edge(ei).u, g.edge(ei).v);
  if (fresh.components() != uf.components())
    throw ContractError("kruskal_seeded: union-find disagrees with forest");
  for (int v = 0; v < n; ++v)
    if (uf.find(v) != uf.find(fresh.find(v)))
      throw ContractError("kruskal_seeded: union-find disagrees with forest");

  std::vector<int> chosen(forest_edges.begin(), forest_edges.end());
  chosen.reserve(n - 1);
  const auto order = weight_order_all(view);
  for (const auto& [w, w2, ei] : order) {
    if (static_cast<int>(chosen.size()) == n - 1) break;
    const Edge& e = g.edge(ei);
    if (uf.unite(e.u, e.v)) chosen.push_back(ei);
  }
  if (static_cast<int>(chosen.size()) != n - 1)
    throw NoSpanningTreeError("kruskal_seeded: graph is disconnected");
  return SpanningTree(g, std::move(chosen));
}

ParetoArchive weighted_sum_sweep(const Graph& g, int k) {
  if (k < 2) throw ContractError("weighted_sum_sweep: need k >= 2");
  ParetoArchive archive;
  for (int idx = 0; idx < k; ++idx) {
    const double lambda = static_cast<double>(k - 1 - idx) / (k - 1);
    archive.insert(kruskal(ScalarizedView(g, lambda)));
  }
  return archive;
}

}  // namespace momst
