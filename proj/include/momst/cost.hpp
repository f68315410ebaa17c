#pragma once

namespace momst {

// Pair of objective values. Comparisons are exact: costs are either integral
// by construction or reproduced bit-identically from the same input file, so
// no epsilon is involved anywhere in dominance logic.
struct CostVector {
  double c1 = 0.0;
  double c2 = 0.0;

  CostVector& operator+=(const CostVector& o) {
    c1 += o.c1;
    c2 += o.c2;
    return *this;
  }
  friend CostVector operator+(CostVector a, const CostVector& b) { return a += b; }
  friend bool operator==(const CostVector&, const CostVector&) = default;
};

// Weak Pareto dominance for minimization: a is no worse in both components
// and strictly better in at least one.
inline bool dominates(const CostVector& a, const CostVector& b) {
  return a.c1 <= b.c1 && a.c2 <= b.c2 && (a.c1 < b.c1 || a.c2 < b.c2);
}

// Strict order used for sorting cost points: by c1, then c2.
inline bool lex_less(const CostVector& a, const CostVector& b) {
  return a.c1 < b.c1 || (a.c1 == b.c1 && a.c2 < b.c2);
}

}  // namespace momst
