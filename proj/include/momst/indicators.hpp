#pragma once

#include <array>
#include <span>
#include <vector>

#include "momst/archive.hpp"
#include "momst/cost.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Distinct non-dominated cost vectors, sorted ascending by c1 (so c2 is
// descending). Input may contain duplicates and dominated points.
std::vector<CostVector> pareto_filter(std::span<const CostVector> points);

// Reference data for normalized indicators: a non-dominated reference front
// plus its ideal/nadir corners. All indicator math runs in the normalized
// space ((x - ideal) / (nadir - ideal), degenerate ranges mapped with
// divisor 1), with reference point (1.1, 1.1) for hypervolume.
struct ReferenceSet {
  std::vector<CostVector> points;  // pareto-filtered, ascending c1
  CostVector ideal{};
  CostVector nadir{};

  static ReferenceSet build(std::span<const CostVector> raw_points);
  std::array<double, 2> normalize(const CostVector& p) const;
};

// Exact 2-D hypervolume of the region dominated by `points` and bounded by
// `ref_point`, by a single sweep over the sorted front. Points beyond the
// reference point contribute only their clipped part.
double hypervolume2d(std::span<const std::array<double, 2>> points,
                     std::array<double, 2> ref_point);

// Hypervolume deficit: HV(reference front) - HV(approximation), both in
// normalized space against (1.1, 1.1). >= 0 whenever the reference front is
// complete relative to the approximation; 0 iff the approximation covers
// the whole reference front's volume.
double hypervolume_indicator(std::span<const CostVector> approx, const ReferenceSet& ref);

// Additive epsilon: smallest eps such that every reference point is weakly
// covered by some approximation point shifted down by eps (normalized
// space), clipped at 0.
double epsilon_indicator(std::span<const CostVector> approx, const ReferenceSet& ref);

// Averaged Hausdorff: max(GD_p, IGD_p) on normalized Euclidean distances.
// Empty approximation -> +infinity.
double delta_p(std::span<const CostVector> approx, const ReferenceSet& ref, double p = 2.0);

// Normalized-space building blocks (exposed for oracle tests).
double gd_p(std::span<const std::array<double, 2>> approx,
            std::span<const std::array<double, 2>> ref, double p);
double igd_p(std::span<const std::array<double, 2>> approx,
             std::span<const std::array<double, 2>> ref, double p);

// Additive epsilon needed for a single point to weakly cover at least one
// reference-front point (normalized space, clipped at 0). Measures how far
// a lone solution sits from the front.
double epsilon_to_front(const CostVector& point, const ReferenceSet& ref);

// Fraction of shared edges, |E(a) ∩ E(b)| / (n - 1). Both trees must live
// on the same host graph (ContractError otherwise).
double nnce(const SpanningTree& a, const SpanningTree& b);

// Per-edge relative frequency over the archive's trees (host edge order).
// ContractError on an empty archive.
std::vector<double> edge_frequency(const ParetoArchive& archive);

}  // namespace momst
