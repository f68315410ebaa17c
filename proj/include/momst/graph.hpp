#pragma once

#include <span>
#include <vector>

#include "momst/cost.hpp"
#include "momst/errors.hpp"

namespace momst {

// Node ids are 0-based internally; the 1-based convention exists only in
// file I/O and CLI output.
struct Edge {
  int u;  // smaller endpoint
  int v;  // larger endpoint
  CostVector cost;
};

struct AdjEntry {
  int neighbor;
  int edge;  // index into Graph::edges()
};

// Undirected simple graph with bi-objective edge costs. Edges keep their
// insertion order; that order is the global tie-break everywhere (sorting,
// sampling), so it is part of an instance's identity.
class Graph {
 public:
  explicit Graph(int n, bool complete = false);

  // Normalizes (u, v) so u < v; rejects self-loops, out-of-range ids and
  // non-positive costs. Duplicate detection is left to check_invariants()
  // so that bulk construction stays O(m).
  int add_edge(int u, int v, CostVector cost);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int i) const { return edges_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const AdjEntry> neighbors(int v) const {
    return {adj_[v].data(), adj_[v].size()};
  }
  bool is_complete() const { return complete_; }
  int max_degree() const;

  // Index of edge {u, v}, or -1. Linear in deg(u).
  int find_edge(int u, int v) const;

  // Full O(n + m) re-validation: id ranges, no self-loops or duplicates,
  // positive costs, and m == n(n-1)/2 when flagged complete.
  void check_invariants() const;

 private:
  int n_;
  bool complete_;
  std::vector<Edge> edges_;
  std::vector<std::vector<AdjEntry>> adj_;
};

}  // namespace momst
