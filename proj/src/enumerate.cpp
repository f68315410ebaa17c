#include "momst/enumerate.hpp"

#include <numeric>
#include <utility>

#include "momst/errors.hpp"
#include "momst/prufer.hpp"

namespace momst {

namespace {

// Union-find with undo (union by size, no path compression) so the
// backtracking enumeration stays O(log n) per step.
class RollbackUf {
 public:
  explicit RollbackUf(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    history_.emplace_back(y, x);
    return true;
  }
  void undo() {
    auto [child, parent] = history_.back();
    history_.pop_back();
    parent_[child] = child;
    size_[parent] -= size_[child];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> history_;
};

void enumerate_complete(const Graph& g, const std::function<void(const SpanningTree&)>& fn) {
  const int n = g.node_count();
  if (n == 2) {
    fn(SpanningTree(g, {0}));
    return;
  }
  // Odometer over all n^(n-2) Prufer codes.
  std::vector<int> code(n - 2, 0);
  for (;;) {
    fn(prufer_decode(g, code));
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
}

void enumerate_general(const Graph& g, const std::function<void(const SpanningTree&)>& fn) {
  const int n = g.node_count();
  const int m = g.edge_count();
  std::vector<int> chosen;
  chosen.reserve(n - 1);
  RollbackUf uf(n);

  // Every maximal acyclic selection of n-1 edges is a spanning tree, so the
  // cycle check during descent is the whole spanning test.
  auto recurse = [&](auto&& self, int next_edge) -> void {
    const int need = (n - 1) - static_cast<int>(chosen.size());
    if (need == 0) {
      fn(SpanningTree(g, chosen));
      return;
    }
    if (m - next_edge < need) return;
    if (uf.unite(g.edge(next_edge).u, g.edge(next_edge).v)) {
      chosen.push_back(next_edge);
      self(self, next_edge + 1);
      chosen.pop_back();
      uf.undo();
    }
    self(self, next_edge + 1);
  };
  recurse(recurse, 0);
}

}  // namespace

void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const SpanningTree&)>& fn) {
  const int n = g.node_count();
  if (n > 9)
    throw ContractError("for_each_spanning_tree: refused for n > 9 (combinatorial blow-up)");
  if (n == 1) {
    fn(SpanningTree(g, {}));
    return;
  }
  if (g.is_complete())
    enumerate_complete(g, fn);
  else
    enumerate_general(g, fn);
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

}  // namespace momst
