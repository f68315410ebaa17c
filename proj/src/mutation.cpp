#include "momst/mutation.hpp"

#include <algorithm>
#include <string>

#include "momst/prufer.hpp"
#include "momst/scalarize.hpp"
#include "momst/union_find.hpp"

namespace momst {

std::string_view op_name(MutationOp op) {
  switch (op) {
    case MutationOp::Uniform: return "UNIFORM";
    case MutationOp::Ex1: return "1EX";
    case MutationOp::Bex1: return "1BEX";
    case MutationOp::Sg: return "SG";
    case MutationOp::Sgs: return "SGS";
    case MutationOp::Usg: return "USG";
    case MutationOp::Usgs: return "USGS";
  }
  throw ContractError("op_name: bad enum value");
}

MutationOp parse_op(std::string_view name) {
  if (name == "UNIFORM") return MutationOp::Uniform;
  if (name == "1EX") return MutationOp::Ex1;
  if (name == "1BEX") return MutationOp::Bex1;
  if (name == "SG") return MutationOp::Sg;
  if (name == "SGS") return MutationOp::Sgs;
  if (name == "USG") return MutationOp::Usg;
  if (name == "USGS") return MutationOp::Usgs;
  throw ContractError("unknown mutation operator: " + std::string(name));
}

EdgeBias EdgeBias::precompute(const Graph& g) {
  const int m = g.edge_count();
  std::vector<int> count(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (j != i && dominates(g.edge(j).cost, g.edge(i).cost)) ++count[i];
  const int max_count = *std::max_element(count.begin(), count.end());

  EdgeBias bias;
  bias.weights_.resize(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    bias.weights_[i] = 1.0 + max_count - count[i];
    total += bias.weights_[i];
  }
  bias.cumulative_.resize(m);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    bias.weights_[i] /= total;
    acc += bias.weights_[i];
    bias.cumulative_[i] = acc;
  }
  bias.cumulative_.back() = 1.0;  // guard against rounding drift
  return bias;
}

int EdgeBias::sample(Rng& rng) const {
  const double u = rng.uniform01();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto idx = it - cumulative_.begin();
  return static_cast<int>(std::min<std::ptrdiff_t>(idx, cumulative_.size() - 1));
}

Mutator::Mutator(const Graph& g, MutationConfig cfg) : g_(&g), cfg_(cfg) {
  const int n = g.node_count();
  switch (cfg_.op) {
    case MutationOp::Uniform:
      if (!g.is_complete())
        throw ContractError("Mutator: UNIFORM requires a complete host graph");
      if (n < 3) throw ContractError("Mutator: UNIFORM needs n >= 3");
      break;
    case MutationOp::Ex1:
      break;
    case MutationOp::Bex1:
      bias_ = std::make_shared<const EdgeBias>(EdgeBias::precompute(g));
      break;
    case MutationOp::Sg:
    case MutationOp::Sgs:
      if (cfg_.sigma < 3 || cfg_.sigma > n)
        throw ContractError("Mutator: SG/SGS needs sigma in {3..n}");
      break;
    case MutationOp::Usg:
    case MutationOp::Usgs: {
      const int lo = cfg_.usg_floor == UsgSampleFloor::FromOne ? 1 : 3;
      if (cfg_.sigma < lo || cfg_.sigma > n - 1)
        throw ContractError("Mutator: USG/USGS needs sigma in {" + std::to_string(lo) +
                            "..n-1}");
      break;
    }
  }
  adj_offset_.assign(n + 1, 0);
  adj_data_.resize(2 * std::max(0, n - 1));
  degree_.assign(n, 0);
  visited_.assign(n, 0);
  parent_node_.assign(n, -1);
  parent_edge_.assign(n, -1);
  drop_mark_.assign(std::max(0, n - 1), 0);
  visit_list_.reserve(n);
  queue_.reserve(n);
}

void Mutator::build_tree_adjacency(const SpanningTree& tree) {
  const int n = g_->node_count();
  std::fill(degree_.begin(), degree_.end(), 0);
  for (int ei : tree.edge_indices()) {
    const Edge& e = g_->edge(ei);
    ++degree_[e.u];
    ++degree_[e.v];
  }
  adj_offset_[0] = 0;
  for (int v = 0; v < n; ++v) adj_offset_[v + 1] = adj_offset_[v] + degree_[v];
  // degree_ doubles as a cursor while filling.
  std::fill(degree_.begin(), degree_.end(), 0);
  for (int ei : tree.edge_indices()) {
    const Edge& e = g_->edge(ei);
    adj_data_[adj_offset_[e.u] + degree_[e.u]++] = {e.v, ei};
    adj_data_[adj_offset_[e.v] + degree_[e.v]++] = {e.u, ei};
  }
}

std::vector<int> Mutator::tree_path(const SpanningTree& tree, int u, int v) {
  if (u == v) return {};
  build_tree_adjacency(tree);
  visit_list_.clear();
  queue_.clear();
  queue_.push_back(u);
  visited_[u] = 1;
  visit_list_.push_back(u);
  std::size_t head = 0;
  bool found = false;
  while (head < queue_.size() && !found) {
    const int x = queue_[head++];
    for (int k = adj_offset_[x]; k < adj_offset_[x + 1]; ++k) {
      const AdjEntry& a = adj_data_[k];
      if (visited_[a.neighbor]) continue;
      visited_[a.neighbor] = 1;
      visit_list_.push_back(a.neighbor);
      parent_node_[a.neighbor] = x;
      parent_edge_[a.neighbor] = a.edge;
      if (a.neighbor == v) {
        found = true;
        break;
      }
      queue_.push_back(a.neighbor);
    }
  }
  for (int x : visit_list_) visited_[x] = 0;
  if (!found) throw ContractError("tree_path: endpoints not connected in tree");
  std::vector<int> path;
  for (int x = v; x != u; x = parent_node_[x]) path.push_back(parent_edge_[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

SpanningTree Mutator::apply_uniform(const SpanningTree& parent, int position, int value) const {
  const int n = g_->node_count();
  if (position < 0 || position > n - 3)
    throw ContractError("apply_uniform: position out of range");
  if (value < 0 || value >= n) throw ContractError("apply_uniform: value out of range");
  std::vector<int> code = prufer_encode(parent);
  code[position] = value;
  return prufer_decode(*g_, code);
}

SpanningTree Mutator::apply_ex1(const SpanningTree& parent, int edge_index, int drop_choice) {
  if (edge_index < 0 || edge_index >= g_->edge_count())
    throw ContractError("apply_ex1: edge index out of range");
  if (parent.contains_edge(edge_index))
    throw ContractError("apply_ex1: edge already in tree");
  const Edge& e = g_->edge(edge_index);
  const std::vector<int> path = tree_path(parent, e.u, e.v);
  if (drop_choice < 0 || drop_choice >= static_cast<int>(path.size()))
    throw ContractError("apply_ex1: drop choice out of range");
  const int drop_edge = path[drop_choice];

  std::vector<int> edges(parent.edge_indices().begin(), parent.edge_indices().end());
  *std::find(edges.begin(), edges.end(), drop_edge) = edge_index;
  return SpanningTree(*g_, std::move(edges));
}

SpanningTree Mutator::apply_sg(const SpanningTree& parent, int start_node, int s,
                               double lambda) {
  const int n = g_->node_count();
  if (start_node < 0 || start_node >= n) throw ContractError("apply_sg: bad start node");
  if (s < 2 || s > n) throw ContractError("apply_sg: s out of range");

  build_tree_adjacency(parent);
  visit_list_.clear();
  queue_.clear();
  queue_.push_back(start_node);
  visited_[start_node] = 1;
  visit_list_.push_back(start_node);
  std::size_t head = 0;
  // BFS over the parent tree; stop as soon as s nodes are collected.
  while (static_cast<int>(visit_list_.size()) < s) {
    const int x = queue_[head++];
    for (int k = adj_offset_[x]; k < adj_offset_[x + 1]; ++k) {
      const AdjEntry& a = adj_data_[k];
      if (visited_[a.neighbor]) continue;
      visited_[a.neighbor] = 1;
      visit_list_.push_back(a.neighbor);
      if (static_cast<int>(visit_list_.size()) == s) break;
      queue_.push_back(a.neighbor);
    }
  }

  const ScalarizedView view(*g_, lambda);
  // Keep every parent edge with an endpoint outside V_s, replace the rest
  // by a scalarized MST of the induced sub-graph.
  std::vector<int> edges;
  edges.reserve(n - 1);
  for (int ei : parent.edge_indices()) {
    const Edge& e = g_->edge(ei);
    if (!(visited_[e.u] && visited_[e.v])) edges.push_back(ei);
  }
  std::vector<int> replacement = cfg_.sg_mst == SubgraphMst::Kruskal
                                     ? kruskal_on_nodes(view, visit_list_)
                                     : prim_on_nodes(view, visit_list_);
  edges.insert(edges.end(), replacement.begin(), replacement.end());
  for (int x : visit_list_) visited_[x] = 0;
  return SpanningTree(*g_, std::move(edges));
}

SpanningTree Mutator::apply_usg(const SpanningTree& parent, std::span<const int> positions,
                                double lambda) {
  const int n = g_->node_count();
  for (int p : positions) {
    if (p < 0 || p >= n - 1) throw ContractError("apply_usg: position out of range");
    if (drop_mark_[p]) {
      for (int q : positions)
        if (q >= 0 && q < n - 1) drop_mark_[q] = 0;
      throw ContractError("apply_usg: duplicate drop position");
    }
    drop_mark_[p] = 1;
  }

  std::vector<int> forest;
  forest.reserve(n - 1 - positions.size());
  UnionFind uf(n);
  for (int pos = 0; pos < n - 1; ++pos) {
    if (drop_mark_[pos]) continue;
    const int ei = parent.edge_at(pos);
    forest.push_back(ei);
    uf.unite(g_->edge(ei).u, g_->edge(ei).v);
  }
  for (int p : positions) drop_mark_[p] = 0;

  const ScalarizedView view(*g_, lambda);
  return kruskal_seeded(view, forest, uf);
}

SpanningTree Mutator::mutate(const SpanningTree& parent, Rng& rng) {
  const int n = g_->node_count();
  switch (cfg_.op) {
    case MutationOp::Uniform: {
      const int position = rng.uniform_int(0, n - 3);
      const int value = rng.uniform_int(0, n - 1);
      return apply_uniform(parent, position, value);
    }
    case MutationOp::Ex1:
    case MutationOp::Bex1: {
      const int edge_index = cfg_.op == MutationOp::Ex1
                                 ? static_cast<int>(rng.below(g_->edge_count()))
                                 : bias_->sample(rng);
      // Drawing a tree edge leaves the parent unchanged (it still costs the
      // caller one evaluation).
      if (parent.contains_edge(edge_index)) return parent;
      const Edge& e = g_->edge(edge_index);
      const int path_len = static_cast<int>(tree_path(parent, e.u, e.v).size());
      const int drop_choice = rng.uniform_int(0, path_len - 1);
      return apply_ex1(parent, edge_index, drop_choice);
    }
    case MutationOp::Sg:
    case MutationOp::Sgs: {
      const int start_node = rng.uniform_int(0, n - 1);
      const int s = rng.uniform_int(3, cfg_.sigma);
      double lambda = rng.uniform01();
      if (rounds_lambda(cfg_.op)) lambda = lambda < 0.5 ? 0.0 : 1.0;
      return apply_sg(parent, start_node, s, lambda);
    }
    case MutationOp::Usg:
    case MutationOp::Usgs: {
      const int lo = cfg_.usg_floor == UsgSampleFloor::FromOne ? 1 : 3;
      const int s = rng.uniform_int(lo, cfg_.sigma);
      const std::vector<int> positions = rng.sample_distinct(n - 1, s);
      double lambda = rng.uniform01();
      if (rounds_lambda(cfg_.op)) lambda = lambda < 0.5 ? 0.0 : 1.0;
      return apply_usg(parent, positions, lambda);
    }
  }
  throw ContractError("Mutator::mutate: bad operator enum");
}

}  // namespace momst
