#include "momst/spanning_tree.hpp"

#include <algorithm>
#include <utility>

#include "momst/errors.hpp"
#include "momst/union_find.hpp"

namespace momst {

SpanningTree::SpanningTree(const Graph& host, std::vector<int> edge_indices)
    : host_(&host), edges_(std::move(edge_indices)) {
  validate();
}

void SpanningTree::validate() const {
  const int n = host_->node_count();
  if (static_cast<int>(edges_.size()) != n - 1)
    throw ContractError("SpanningTree: expected n-1 edges");
  UnionFind uf(n);
  for (int ei : edges_) {
    if (ei < 0 || ei >= host_->edge_count())
      throw ContractError("SpanningTree: edge index out of range");
    const Edge& e = host_->edge(ei);
    if (!uf.unite(e.u, e.v)) throw ContractError("SpanningTree: edge set contains a cycle");
  }
  // n-1 acyclic edges on n nodes are necessarily connected.
}

const CostVector& SpanningTree::cost() const {
  if (!cost_valid_) {
    // Sum in ascending edge-index order so the result is a function of the
    // edge *set*, not of insertion order: trees with equal edge sets get
    // bit-identical cost vectors, which dominance checks rely on.
    std::vector<int> sorted(edges_);
    std::sort(sorted.begin(), sorted.end());
    CostVector sum{};
    for (int ei : sorted) sum += host_->edge(ei).cost;
    cost_ = sum;
    cost_valid_ = true;
  }
  return cost_;
}

bool SpanningTree::contains_edge(int edge_index) const {
  return std::find(edges_.begin(), edges_.end(), edge_index) != edges_.end();
}

void SpanningTree::assign(std::vector<int> edge_indices) {
  edges_ = std::move(edge_indices);
  cost_valid_ = false;
  validate();
}

std::vector<std::vector<AdjEntry>> SpanningTree::adjacency() const {
  std::vector<std::vector<AdjEntry>> adj(host_->node_count());
  for (int ei : edges_) {
    const Edge& e = host_->edge(ei);
    adj[e.u].push_back({e.v, ei});
    adj[e.v].push_back({e.u, ei});
  }
  return adj;
}

bool SpanningTree::same_edges(const SpanningTree& other) const {
  if (host_ != other.host_ || edges_.size() != other.edges_.size()) return false;
  std::vector<int> a = edges_, b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace momst
