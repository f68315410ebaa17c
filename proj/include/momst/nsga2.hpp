#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "momst/cost.hpp"
#include "momst/graph.hpp"
#include "momst/mutation.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Pareto rank (0 = non-dominated) per point; Deb's fast non-dominated sort.
std::vector<int> nondominated_sort(std::span<const CostVector> points);

// Crowding distance within one front. Boundary points get +infinity; each
// objective's contribution is normalized by that objective's range within
// the front (objectives with zero range contribute nothing).
std::vector<double> crowding_distance(std::span<const CostVector> front);

enum class ParentSelection { UniformRandom, BinaryTournament };

struct Nsga2Config {
  MutationConfig mutation;
  int mu = 100;                  // population size, >= 2
  long long budget = 0;          // total evaluations incl. init; >= mu
  ParentSelection selection = ParentSelection::UniformRandom;
  std::vector<double> snapshot_fractions{0.1, 0.5, 1.0};
};

struct Snapshot {
  double fraction;
  long long evaluations;            // ledger value when taken
  std::vector<CostVector> front;    // pareto_filter of the population
};

struct RunRecord {
  std::string instance_id;
  std::string op;
  std::uint64_t seed = 0;
  int n = 0;
  long long evaluations_used = 0;
  double wall_seconds = 0.0;
  std::vector<Snapshot> snapshots;  // one per fraction, ascending
};

// Mutation-only (mu + mu) NSGA-II. Initializes mu uniform random spanning
// trees (each counts as one evaluation), then repeats: draw mu parents,
// mutate each once, merge and truncate by (rank, crowding). The final
// generation shrinks so the evaluation ledger lands exactly on `budget`.
// Duplicates are allowed to survive; crowding pressure thins them.
RunRecord run_nsga2(const Graph& g, const Nsga2Config& cfg, std::uint64_t seed,
                    std::string instance_id = "");

// Plain mutation walk: start from a random tree, apply the operator `steps`
// times unconditionally, record every visited cost (steps + 1 entries).
std::vector<CostVector> random_walk(const Graph& g, const MutationConfig& cfg,
                                    int steps, std::uint64_t seed);

}  // namespace momst
