#pragma once

#include <vector>

#include "momst/cost.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Non-dominated archive of trees. Keeps every distinct tree whose cost
// vector is not strictly dominated; trees with equal cost but different
// edge sets are all retained (structural diversity matters downstream),
// exact duplicates are rejected.
class ParetoArchive {
 public:
  struct Entry {
    SpanningTree tree;
    CostVector cost;
  };

  // True if the tree was added. Removes entries the newcomer dominates.
  bool insert(SpanningTree tree);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int size() const { return static_cast<int>(entries_.size()); }

  // Distinct cost vectors, sorted ascending by c1 (ties by c2).
  std::vector<CostVector> cost_points() const;

  // Entry indices sorted by (c1, c2, insertion order); the row/column order
  // used for solution-level reports.
  std::vector<int> sorted_order() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace momst
