#include "momst/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "momst/errors.hpp"

namespace momst {

std::vector<CostVector> pareto_filter(std::span<const CostVector> points) {
  std::vector<CostVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<CostVector> front;
  double best_c2 = std::numeric_limits<double>::infinity();
  // Sorted by (c1, c2) ascending, a point survives iff it strictly improves
  // c2; this drops dominated points and duplicates in one pass.
  for (const CostVector& p : pts) {
    if (p.c2 < best_c2) {
      front.push_back(p);
      best_c2 = p.c2;
    }
  }
  return front;
}

ReferenceSet ReferenceSet::build(std::span<const CostVector> raw_points) {
  ReferenceSet ref;
  ref.points = pareto_filter(raw_points);
  if (ref.points.empty()) throw ContractError("ReferenceSet: no points");
  // Sorted ascending in c1 and strictly descending in c2, so the corners
  // sit at the ends.
  ref.ideal = {ref.points.front().c1, ref.points.back().c2};
  ref.nadir = {ref.points.back().c1, ref.points.front().c2};
  return ref;
}

std::array<double, 2> ReferenceSet::normalize(const CostVector& p) const {
  const double dx = nadir.c1 - ideal.c1;
  const double dy = nadir.c2 - ideal.c2;
  return {(p.c1 - ideal.c1) / (dx > 0.0 ? dx : 1.0),
          (p.c2 - ideal.c2) / (dy > 0.0 ? dy : 1.0)};
}

double hypervolume2d(std::span<const std::array<double, 2>> points,
                     std::array<double, 2> ref_point) {
  std::vector<std::array<double, 2>> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  // Skyline: ascending x, strictly descending y, clipped to the box below
  // the reference point.
  std::vector<std::array<double, 2>> sky;
  double best_y = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    if (p[0] >= ref_point[0] || p[1] >= ref_point[1]) continue;
    if (p[1] < best_y) {
      sky.push_back(p);
      best_y = p[1];
    }
  }
  double hv = 0.0;
  for (std::size_t i = 0; i < sky.size(); ++i) {
    const double next_x = i + 1 < sky.size() ? sky[i + 1][0] : ref_point[0];
    hv += (next_x - sky[i][0]) * (ref_point[1] - sky[i][1]);
  }
  return hv;
}

namespace {

constexpr std::array<double, 2> kHvRef{1.1, 1.1};

std::vector<std::array<double, 2>> normalize_all(std::span<const CostVector> pts,
                                                 const ReferenceSet& ref) {
  std::vector<std::array<double, 2>> out;
  out.reserve(pts.size());
  for (const CostVector& p : pts) out.push_back(ref.normalize(p));
  return out;
}

double dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double min_dist_to(const std::array<double, 2>& p,
                   std::span<const std::array<double, 2>> set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : set) best = std::min(best, dist(p, q));
  return best;
}

double power_mean(std::span<const std::array<double, 2>> from,
                  std::span<const std::array<double, 2>> to, double p) {
  double acc = 0.0;
  for (const auto& a : from) acc += std::pow(min_dist_to(a, to), p);
  return std::pow(acc / static_cast<double>(from.size()), 1.0 / p);
}

}  // namespace

double hypervolume_indicator(std::span<const CostVector> approx, const ReferenceSet& ref) {
  const auto ref_pts = normalize_all(ref.points, ref);
  const auto app_pts = normalize_all(approx, ref);
  return hypervolume2d(ref_pts, kHvRef) - hypervolume2d(app_pts, kHvRef);
}

double epsilon_indicator(std::span<const CostVector> approx, const ReferenceSet& ref) {
  if (approx.empty()) throw ContractError("epsilon_indicator: empty approximation");
  const auto ref_pts = normalize_all(ref.points, ref);
  const auto app_pts = normalize_all(approx, ref);
  double eps = 0.0;  // negative shifts clipped: 0 already means "covers"
  for (const auto& r : ref_pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : app_pts)
      best = std::min(best, std::max(a[0] - r[0], a[1] - r[1]));
    eps = std::max(eps, best);
  }
  return eps;
}

double gd_p(std::span<const std::array<double, 2>> approx,
            std::span<const std::array<double, 2>> ref, double p) {
  if (approx.empty()) return std::numeric_limits<double>::infinity();
  return power_mean(approx, ref, p);
}

double igd_p(std::span<const std::array<double, 2>> approx,
             std::span<const std::array<double, 2>> ref, double p) {
  if (approx.empty()) return std::numeric_limits<double>::infinity();
  return power_mean(ref, approx, p);
}

double delta_p(std::span<const CostVector> approx, const ReferenceSet& ref, double p) {
  if (!(p >= 1.0)) throw ContractError("delta_p: need p >= 1");
  if (approx.empty()) return std::numeric_limits<double>::infinity();
  const auto ref_pts = normalize_all(ref.points, ref);
  const auto app_pts = normalize_all(approx, ref);
  return std::max(gd_p(app_pts, ref_pts, p), igd_p(app_pts, ref_pts, p));
}

double epsilon_to_front(const CostVector& point, const ReferenceSet& ref) {
  const auto p = ref.normalize(point);
  double best = std::numeric_limits<double>::infinity();
  for (const CostVector& f : ref.points) {
    const auto r = ref.normalize(f);
    best = std::min(best, std::max(p[0] - r[0], p[1] - r[1]));
  }
  return std::max(0.0, best);
}

double nnce(const SpanningTree& a, const SpanningTree& b) {
  if (&a.host() != &b.host()) throw ContractError("nnce: trees live on different graphs");
  std::vector<int> ea(a.edge_indices().begin(), a.edge_indices().end());
  std::vector<int> eb(b.edge_indices().begin(), b.edge_indices().end());
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  std::vector<int> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(ea.size());
}

std::vector<double> edge_frequency(const ParetoArchive& archive) {
  if (archive.empty()) throw ContractError("edge_frequency: empty archive");
  const Graph& g = archive.entries().front().tree.host();
  std::vector<double> freq(g.edge_count(), 0.0);
  for (const auto& entry : archive.entries())
    for (int ei : entry.tree.edge_indices()) freq[ei] += 1.0;
  for (double& f : freq) f /= static_cast<double>(archive.size());
  return freq;
}

}  // namespace momst
