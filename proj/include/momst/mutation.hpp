#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "momst/graph.hpp"
#include "momst/rng.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// UNIFORM   replace one random Prufer position with a random node
// EX1       insert one random non-tree edge, drop a random cycle edge
// BEX1      EX1 with edge sampling biased towards rarely dominated edges
// SG        sub-graph: BFS s nodes of the tree, rebuild G[V_s] by a
//           scalarized MST with lambda rounded to {0, 1}
// SGS       SG with lambda kept continuous in [0, 1]
// USG       unconnected sub-graph: drop s random tree edges, reconnect the
//           forest by a seeded scalarized MST, lambda rounded
// USGS      USG with continuous lambda
enum class MutationOp { Uniform, Ex1, Bex1, Sg, Sgs, Usg, Usgs };

std::string_view op_name(MutationOp op);
MutationOp parse_op(std::string_view name);  // throws ContractError

// SG/USG round lambda half-up (0.5 -> 1); the smooth variants keep it.
inline bool rounds_lambda(MutationOp op) {
  return op == MutationOp::Sg || op == MutationOp::Usg;
}
inline bool is_subgraph_op(MutationOp op) {
  return op == MutationOp::Sg || op == MutationOp::Sgs ||
         op == MutationOp::Usg || op == MutationOp::Usgs;
}

enum class SubgraphMst { Kruskal, Prim };  // SG/SGS inner solver
// USG/USGS sample the drop count s from {lo..sigma}; lo = 1 by default,
// lo = 3 selectable for parity with the connected variants.
enum class UsgSampleFloor { FromOne, FromThree };

struct MutationConfig {
  MutationOp op = MutationOp::Usgs;
  // Sub-graph size bound. SG/SGS: s ~ U{3..sigma}, needs 3 <= sigma <= n.
  // USG/USGS: s ~ U{lo..sigma}, needs lo <= sigma <= n-1. Ignored by
  // UNIFORM/EX1/BEX1. 0 means "class default" n/2 (resolved by the caller).
  int sigma = 0;
  SubgraphMst sg_mst = SubgraphMst::Kruskal;
  UsgSampleFloor usg_floor = UsgSampleFloor::FromOne;
};

// Per-edge sampling weights for BEX1. count(e) = number of edges whose cost
// strictly dominates e's cost; w(e) = 1 + max_count - count(e), normalized.
// Rarely dominated (near-optimal) edges are drawn more often.
class EdgeBias {
 public:
  static EdgeBias precompute(const Graph& g);  // O(m^2), once per graph
  std::span<const double> weights() const { return {weights_.data(), weights_.size()}; }
  int sample(Rng& rng) const;

 private:
  std::vector<double> weights_;  // normalized to sum 1
  std::vector<double> cumulative_;
};

// One mutation operator bound to a host graph, with reusable scratch so the
// per-call cost meets the expected bounds (visited marks are reset via the
// visit list, not wholesale). Not thread-safe; use one Mutator per worker.
//
// Every mutate() call performs exactly one tree evaluation downstream:
// operators never evaluate candidates internally.
class Mutator {
 public:
  Mutator(const Graph& g, MutationConfig cfg);

  const MutationConfig& config() const { return cfg_; }
  const Graph& host() const { return *g_; }

  SpanningTree mutate(const SpanningTree& parent, Rng& rng);

  // Deterministic cores with all sampling hoisted out; mutate() draws the
  // arguments and delegates here. Exposed for golden and property tests.

  // Replace Prufer position `position` (0-based, < n-2) with node `value`.
  SpanningTree apply_uniform(const SpanningTree& parent, int position, int value) const;

  // Insert host edge `edge_index` (must not be in the tree) and remove the
  // `drop_choice`-th edge (0-based) along the tree path between its
  // endpoints. tree_path() gives the path length.
  SpanningTree apply_ex1(const SpanningTree& parent, int edge_index, int drop_choice);

  // BFS from start_node over the parent tree until s nodes are collected,
  // then replace the induced piece by a scalarized MST of G[V_s].
  SpanningTree apply_sg(const SpanningTree& parent, int start_node, int s, double lambda);

  // Drop the tree edges at `positions` (distinct, 0-based positions into
  // parent.edge_indices()), reconnect by seeded scalarized Kruskal.
  SpanningTree apply_usg(const SpanningTree& parent, std::span<const int> positions,
                         double lambda);

  // Edge indices of the tree path between u and v (in order from u to v).
  std::vector<int> tree_path(const SpanningTree& tree, int u, int v);

  const EdgeBias* bias() const { return bias_.get(); }

 private:
  void build_tree_adjacency(const SpanningTree& tree);

  const Graph* g_;
  MutationConfig cfg_;
  std::shared_ptr<const EdgeBias> bias_;  // BEX1 only

  // scratch, sized to the host graph
  std::vector<int> adj_offset_;       // CSR offsets, n+1
  std::vector<AdjEntry> adj_data_;    // CSR entries, 2(n-1)
  std::vector<int> degree_;
  std::vector<unsigned char> visited_;
  std::vector<int> visit_list_;
  std::vector<int> queue_;
  std::vector<int> parent_node_;
  std::vector<int> parent_edge_;
  std::vector<unsigned char> drop_mark_;  // n-1 tree positions
};

}  // namespace momst
