#include "momst/archive.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace momst {

bool ParetoArchive::insert(SpanningTree tree) {
  const CostVector c = tree.cost();
  for (const Entry& e : entries_) {
    if (dominates(e.cost, c)) return false;
    if (e.cost == c && e.tree.same_edges(tree)) return false;
  }
  std::erase_if(entries_, [&](const Entry& e) { return dominates(c, e.cost); });
  entries_.push_back({std::move(tree), c});
  return true;
}

std::vector<CostVector> ParetoArchive::cost_points() const {
  std::vector<CostVector> pts;
  pts.reserve(entries_.size());
  for (const Entry& e : entries_) pts.push_back(e.cost);
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<int> ParetoArchive::sorted_order() const {
  std::vector<int> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(entries_[a].cost, entries_[b].cost);
  });
  return order;
}

}  // namespace momst
