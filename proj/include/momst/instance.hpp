#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>

#include "momst/graph.hpp"

namespace momst {

// Benchmark instance classes (complete graphs, n nodes):
//   C1  both costs independent uniforms, c1 ~ U(10,100), c2 ~ U(10,50)
//   C2  c1 = rounded planar Euclidean distances, c2 placed on a quarter
//       circle of radius max(c1) plus U(0,5) noise -> strongly concave
//       trade-off with many unsupported optima
//   C3  Euclidean c1, c2 anti-correlated with target rho = -0.95
//   C4  Euclidean c1, c2 positively correlated with target rho = +0.95
enum class InstanceClass { C1, C2, C3, C4 };

std::string_view class_name(InstanceClass c);
InstanceClass parse_class(std::string_view name);  // throws ContractError

struct InstanceSpec {
  InstanceClass cls;
  int n;
  std::uint64_t seed;
  // C3/C4 only; NaN means class default (-0.95 for C3, +0.95 for C4).
  double target_rho = std::numeric_limits<double>::quiet_NaN();
};

// Deterministic in (cls, n, seed): repeated calls yield identical graphs.
// C3/C4 calibrate their noise scale by bisection until the empirical
// correlation lands within +-0.03 of target (GenerationError if that fails,
// carrying the closest correlation achieved).
Graph generate_instance(const InstanceSpec& spec);

// Pearson correlation of the two cost components over all edges.
double cost_correlation(const Graph& g);

// Text format, 1-based node ids:
//   momst 1
//   <n> <m> 2 <complete|general>
//   <u> <v> <c1> <c2>     (m lines, insertion order)
// Costs are printed with "%.17g" so doubles round-trip exactly.
// write_instance is atomic (temp file + rename).
void write_instance(const Graph& g, const std::filesystem::path& path);
Graph read_instance(const std::filesystem::path& path);  // throws ParseError

}  // namespace momst
