#pragma once

#include <span>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"

namespace momst {

// A spanning tree of a host graph, stored as n-1 edge indices. The
// constructor verifies the acyclic+connected+cardinality property, so a
// SpanningTree that exists is valid by construction. Total cost is memoized
// and summed in ascending edge-index order regardless of storage order, so
// equal edge sets always yield bit-identical cost vectors (dominance checks
// between a tree and its rebuilt twin depend on this).
class SpanningTree {
 public:
  SpanningTree(const Graph& host, std::vector<int> edge_indices);

  const Graph& host() const { return *host_; }
  std::span<const int> edge_indices() const {
    return {edges_.data(), edges_.size()};
  }
  int edge_at(int position) const { return edges_[position]; }
  int size() const { return static_cast<int>(edges_.size()); }

  const CostVector& cost() const;

  // Linear scan; fine for the small positions lists operators work with.
  bool contains_edge(int edge_index) const;

  // Replaces the edge set (revalidates, invalidates the cost memo).
  void assign(std::vector<int> edge_indices);

  // Tree adjacency as vector-of-vectors, for callers without scratch space.
  std::vector<std::vector<AdjEntry>> adjacency() const;

  // Same edge set, independent of storage order.
  bool same_edges(const SpanningTree& other) const;

 private:
  void validate() const;

  const Graph* host_;
  std::vector<int> edges_;
  mutable CostVector cost_{};
  mutable bool cost_valid_ = false;
};

}  // namespace momst
