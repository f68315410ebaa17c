#include "momst/nsga2.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "momst/errors.hpp"
#include "momst/indicators.hpp"
#include "momst/random_tree.hpp"
#include "momst/rng.hpp"

namespace momst {

std::vector<int> nondominated_sort(std::span<const CostVector> points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> dom_count(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (dominates(points[i], points[j])) {
        dominated[i].push_back(j);
        ++dom_count[j];
      } else if (dominates(points[j], points[i])) {
        dominated[j].push_back(i);
        ++dom_count[i];
      }
    }
  std::vector<int> rank(n, -1);
  std::vector<int> current;
  for (int i = 0; i < n; ++i)
    if (dom_count[i] == 0) current.push_back(i);
  int level = 0;
  while (!current.empty()) {
    std::vector<int> next;
    for (int i : current) {
      rank[i] = level;
      for (int j : dominated[i])
        if (--dom_count[j] == 0) next.push_back(j);
    }
    current = std::move(next);
    ++level;
  }
  return rank;
}

std::vector<double> crowding_distance(std::span<const CostVector> front) {
  const int n = static_cast<int>(front.size());
  std::vector<double> crowd(n, 0.0);
  if (n == 0) return crowd;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (n <= 2) {
    std::fill(crowd.begin(), crowd.end(), kInf);
    return crowd;
  }
  for (int obj = 0; obj < 2; ++obj) {
    auto value = [&](int i) { return obj == 0 ? front[i].c1 : front[i].c2; };
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return value(a) < value(b); });
    const double range = value(order.back()) - value(order.front());
    crowd[order.front()] = kInf;
    crowd[order.back()] = kInf;
    if (range <= 0.0) continue;  // degenerate objective adds nothing
    for (int k = 1; k + 1 < n; ++k) {
      if (crowd[order[k]] == kInf) continue;
      crowd[order[k]] += (value(order[k + 1]) - value(order[k - 1])) / range;
    }
  }
  return crowd;
}

namespace {

struct Individual {
  SpanningTree tree;
  CostVector cost;
  int rank = 0;
  double crowd = 0.0;
};

// Resolve the "class default" sigma = n/2, clamped into the operator's
// legal range.
MutationConfig resolve_sigma(MutationConfig cfg, int n) {
  if (is_subgraph_op(cfg.op) && cfg.sigma == 0) {
    const int half = n / 2;
    if (cfg.op == MutationOp::Sg || cfg.op == MutationOp::Sgs)
      cfg.sigma = std::clamp(half, 3, n);
    else
      cfg.sigma = std::clamp(half, cfg.usg_floor == UsgSampleFloor::FromOne ? 1 : 3, n - 1);
  }
  return cfg;
}

void assign_rank_and_crowding(std::vector<Individual>& pop) {
  std::vector<CostVector> costs;
  costs.reserve(pop.size());
  for (const Individual& ind : pop) costs.push_back(ind.cost);
  const std::vector<int> rank = nondominated_sort(costs);
  const int levels = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
  for (std::size_t i = 0; i < pop.size(); ++i) pop[i].rank = rank[i];
  for (int lvl = 0; lvl < levels; ++lvl) {
    std::vector<int> members;
    std::vector<CostVector> front;
    for (std::size_t i = 0; i < pop.size(); ++i)
      if (rank[i] == lvl) {
        members.push_back(static_cast<int>(i));
        front.push_back(costs[i]);
      }
    const std::vector<double> crowd = crowding_distance(front);
    for (std::size_t k = 0; k < members.size(); ++k) pop[members[k]].crowd = crowd[k];
  }
}

// (mu + lambda) truncation by (rank asc, crowding desc); the boundary front
// is cut deterministically (ties by pool position).
std::vector<Individual> environmental_selection(std::vector<Individual> pool, int mu) {
  assign_rank_and_crowding(pool);
  std::vector<int> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (pool[a].rank != pool[b].rank) return pool[a].rank < pool[b].rank;
    return pool[a].crowd > pool[b].crowd;
  });
  std::vector<Individual> next;
  next.reserve(mu);
  for (int k = 0; k < mu; ++k) next.push_back(std::move(pool[order[k]]));
  return next;
}

std::vector<CostVector> population_front(const std::vector<Individual>& pop) {
  std::vector<CostVector> costs;
  costs.reserve(pop.size());
  for (const Individual& ind : pop) costs.push_back(ind.cost);
  return pareto_filter(costs);
}

// Snapshot-time self-check: the memoized cost of every survivor must equal
// a fresh recomputation bit for bit.
void verify_cost_cache(const std::vector<Individual>& pop) {
  for (const Individual& ind : pop) {
    // Mirror SpanningTree::cost(): canonical ascending-index summation.
    std::vector<int> sorted(ind.tree.edge_indices().begin(), ind.tree.edge_indices().end());
    std::sort(sorted.begin(), sorted.end());
    CostVector fresh{};
    for (int ei : sorted) fresh += ind.tree.host().edge(ei).cost;
    if (!(fresh == ind.cost))
      throw ContractError("run_nsga2: memoized cost drifted from fresh evaluation");
  }
}

}  // namespace

RunRecord run_nsga2(const Graph& g, const Nsga2Config& cfg, std::uint64_t seed,
                    std::string instance_id) {
  const int n = g.node_count();
  if (cfg.mu < 2) throw ContractError("run_nsga2: need mu >= 2");
  if (cfg.budget < cfg.mu) throw ContractError("run_nsga2: budget must cover initialization");
  if (cfg.snapshot_fractions.empty() || cfg.snapshot_fractions.back() != 1.0)
    throw ContractError("run_nsga2: snapshot fractions must end at 1.0");
  for (std::size_t i = 0; i < cfg.snapshot_fractions.size(); ++i) {
    const double f = cfg.snapshot_fractions[i];
    if (!(f > 0.0 && f <= 1.0)) throw ContractError("run_nsga2: snapshot fraction out of (0,1]");
    if (i > 0 && f <= cfg.snapshot_fractions[i - 1])
      throw ContractError("run_nsga2: snapshot fractions must be ascending");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const MutationConfig mcfg = resolve_sigma(cfg.mutation, n);
  Mutator mutator(g, mcfg);
  Rng rng(seed);

  RunRecord rec;
  rec.instance_id = std::move(instance_id);
  rec.op = std::string(op_name(mcfg.op));
  rec.seed = seed;
  rec.n = n;

  std::vector<long long> thresholds;
  for (double f : cfg.snapshot_fractions)
    thresholds.push_back(static_cast<long long>(
        std::ceil(f * static_cast<double>(cfg.budget) - 1e-9)));

  std::vector<Individual> pop;
  pop.reserve(cfg.mu);
  long long evals = 0;
  for (int i = 0; i < cfg.mu; ++i) {
    SpanningTree t = random_spanning_tree(g, rng);
    const CostVector c = t.cost();
    pop.push_back({std::move(t), c, 0, 0.0});
    ++evals;
  }
  assign_rank_and_crowding(pop);

  std::size_t next_snapshot = 0;
  auto take_snapshots = [&]() {
    while (next_snapshot < thresholds.size() && evals >= thresholds[next_snapshot]) {
      verify_cost_cache(pop);
      rec.snapshots.push_back(
          {cfg.snapshot_fractions[next_snapshot], evals, population_front(pop)});
      ++next_snapshot;
    }
  };
  take_snapshots();

  while (evals < cfg.budget) {
    const int batch = static_cast<int>(std::min<long long>(cfg.mu, cfg.budget - evals));
    std::vector<Individual> pool = pop;
    pool.reserve(pop.size() + batch);
    for (int b = 0; b < batch; ++b) {
      int pi;
      if (cfg.selection == ParentSelection::UniformRandom) {
        pi = static_cast<int>(rng.below(pop.size()));
      } else {
        const int a = static_cast<int>(rng.below(pop.size()));
        const int c = static_cast<int>(rng.below(pop.size()));
        pi = (pop[c].rank < pop[a].rank ||
              (pop[c].rank == pop[a].rank && pop[c].crowd > pop[a].crowd))
                 ? c
                 : a;
      }
      SpanningTree child = mutator.mutate(pop[pi].tree, rng);
      const CostVector cost = child.cost();
      pool.push_back({std::move(child), cost, 0, 0.0});
      ++evals;
    }
    pop = environmental_selection(std::move(pool), cfg.mu);
    take_snapshots();
  }

  rec.evaluations_used = evals;
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<CostVector> random_walk(const Graph& g, const MutationConfig& cfg, int steps,
                                    std::uint64_t seed) {
  if (steps < 0) throw ContractError("random_walk: negative step count");
  Mutator mutator(g, resolve_sigma(cfg, g.node_count()));
  Rng rng(seed);
  SpanningTree current = random_spanning_tree(g, rng);
  std::vector<CostVector> trail;
  trail.reserve(steps + 1);
  trail.push_back(current.cost());
  for (int i = 0; i < steps; ++i) {
    current = mutator.mutate(current, rng);
    trail.push_back(current.cost());
  }
  return trail;
}

}  // namespace momst
