#include "momst/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace momst {

Graph::Graph(int n, bool complete) : n_(n), complete_(complete), adj_(std::max(n, 0)) {
  if (n < 1) throw ContractError("Graph: node count must be >= 1");
}

int Graph::add_edge(int u, int v, CostVector cost) {
  if (u == v) throw ContractError("Graph::add_edge: self-loop");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw ContractError("Graph::add_edge: node id out of range");
  if (!(cost.c1 > 0.0) || !(cost.c2 > 0.0))
    throw ContractError("Graph::add_edge: costs must be positive");
  if (u > v) std::swap(u, v);
  const int idx = static_cast<int>(edges_.size());
  edges_.push_back({u, v, cost});
  adj_[u].push_back({v, idx});
  adj_[v].push_back({u, idx});
  return idx;
}

int Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return static_cast<int>(d);
}

int Graph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  const auto& a = adj_[u];
  for (const AdjEntry& e : a)
    if (e.neighbor == v) return e.edge;
  return -1;
}

void Graph::check_invariants() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u >= e.v) throw ContractError("Graph invariant: endpoints not normalized");
    if (e.u < 0 || e.v >= n_) throw ContractError("Graph invariant: id out of range");
    if (!(e.cost.c1 > 0.0) || !(e.cost.c2 > 0.0))
      throw ContractError("Graph invariant: non-positive cost");
    if (!seen.insert({e.u, e.v}).second)
      throw ContractError("Graph invariant: duplicate edge {" + std::to_string(e.u + 1) +
                          "," + std::to_string(e.v + 1) + "}");
  }
  if (complete_) {
    const long long want = static_cast<long long>(n_) * (n_ - 1) / 2;
    if (static_cast<long long>(edges_.size()) != want)
      throw ContractError("Graph invariant: flagged complete but m != n(n-1)/2");
  }
}

}  // namespace momst
