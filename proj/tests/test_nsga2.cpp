#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "momst/errors.hpp"
#include "momst/indicators.hpp"
#include "momst/instance.hpp"
#include "momst/nsga2.hpp"
#include "momst/rng.hpp"
#include "oracle.hpp"

using namespace momst;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool snapshots_equal(const std::vector<Snapshot>& a, const std::vector<Snapshot>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].fraction != b[i].fraction || a[i].evaluations != b[i].evaluations ||
        a[i].front != b[i].front)
      return false;
  return true;
}

}  // namespace

TEST_CASE("non-dominated sorting matches the peeling oracle") {
  SUBCASE("hand-ranked layers") {
    const std::vector<CostVector> pts = {{0, 0}, {1, 1}, {2, 2}, {0, 3}, {3, 0}};
    const std::vector<int> want = {0, 1, 2, 1, 1};
    CHECK(nondominated_sort(pts) == want);
  }
  SUBCASE("duplicates never dominate each other") {
    const std::vector<CostVector> pts = {{1, 1}, {1, 1}, {0, 0}};
    const std::vector<int> want = {1, 1, 0};
    CHECK(nondominated_sort(pts) == want);
  }
  SUBCASE("empty input") { CHECK(nondominated_sort({}).empty()); }
  SUBCASE("random point clouds, discrete and continuous") {
    Rng rng(314);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<CostVector> pts;
      for (int i = 0; i < 300; ++i) {
        if (trial % 2 == 0)  // coarse grid forces many ties and duplicates
          pts.push_back({static_cast<double>(rng.uniform_int(0, 20)),
                         static_cast<double>(rng.uniform_int(0, 20))});
        else
          pts.push_back({rng.uniform01(), rng.uniform01()});
      }
      CHECK(nondominated_sort(pts) == oracle::nds_peeling(pts));
    }
  }
}

TEST_CASE("crowding distance golden values") {
  SUBCASE("three equispaced collinear points") {
    const std::vector<CostVector> f = {{0, 2}, {1, 1}, {2, 0}};
    const std::vector<double> c = crowding_distance(f);
    CHECK(c[0] == kInf);
    CHECK(c[1] == doctest::Approx(2.0));
    CHECK(c[2] == kInf);
  }
  SUBCASE("four equispaced collinear points") {
    const std::vector<CostVector> f = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    const std::vector<double> c = crowding_distance(f);
    CHECK(c[0] == kInf);
    CHECK(c[1] == doctest::Approx(4.0 / 3.0));
    CHECK(c[2] == doctest::Approx(4.0 / 3.0));
    CHECK(c[3] == kInf);
  }
  SUBCASE("non-equispaced front") {
    const std::vector<CostVector> f = {{0, 10}, {1, 9}, {5, 5}, {10, 0}};
    const std::vector<double> c = crowding_distance(f);
    CHECK(c[0] == kInf);
    CHECK(c[1] == doctest::Approx(1.0));   // (5-0)/10 + (10-5)/10
    CHECK(c[2] == doctest::Approx(1.8));   // (10-1)/10 + (9-0)/10
    CHECK(c[3] == kInf);
  }
  SUBCASE("input order does not matter beyond the permutation") {
    const std::vector<CostVector> f = {{5, 5}, {0, 10}, {10, 0}, {1, 9}};
    const std::vector<double> c = crowding_distance(f);
    CHECK(c[0] == doctest::Approx(1.8));
    CHECK(c[1] == kInf);
    CHECK(c[2] == kInf);
    CHECK(c[3] == doctest::Approx(1.0));
  }
  SUBCASE("tiny fronts are all infinite") {
    CHECK(crowding_distance(std::vector<CostVector>{{3, 4}}) ==
          std::vector<double>{kInf});
    CHECK(crowding_distance(std::vector<CostVector>{{3, 4}, {4, 3}}) ==
          std::vector<double>{kInf, kInf});
    CHECK(crowding_distance({}).empty());
  }
  SUBCASE("degenerate objective contributes nothing") {
    const std::vector<CostVector> f = {{0, 5}, {1, 5}, {2, 5}};
    const std::vector<double> c = crowding_distance(f);
    CHECK(c[0] == kInf);
    CHECK(c[1] == doctest::Approx(1.0));
    CHECK(c[2] == kInf);
  }
  SUBCASE("all-duplicate front") {
    const std::vector<CostVector> f = {{7, 7}, {7, 7}, {7, 7}};
    const std::vector<double> c = crowding_distance(f);
    CHECK(c[0] == kInf);
    CHECK(c[1] == 0.0);
    CHECK(c[2] == kInf);
  }
}

TEST_CASE("evaluation ledger and snapshot schedule are exact") {
  const Graph g = generate_instance({InstanceClass::C1, 10, 1});

  SUBCASE("uneven budget with a short final batch") {
    Nsga2Config cfg;
    cfg.mutation = {MutationOp::Usgs};
    cfg.mu = 10;
    cfg.budget = 103;
    const RunRecord rec = run_nsga2(g, cfg, 42, "c1-n10-s1");
    CHECK(rec.evaluations_used == 103);
    CHECK(rec.instance_id == "c1-n10-s1");
    CHECK(rec.op == "USGS");
    CHECK(rec.seed == 42);
    CHECK(rec.n == 10);
    CHECK(rec.wall_seconds >= 0.0);
    REQUIRE(rec.snapshots.size() == 3);
    // Thresholds ceil(f * 103) = 11, 52, 103; evaluations advance in
    // full batches of mu except the trimmed last one.
    CHECK(rec.snapshots[0].fraction == 0.1);
    CHECK(rec.snapshots[0].evaluations == 20);
    CHECK(rec.snapshots[1].fraction == 0.5);
    CHECK(rec.snapshots[1].evaluations == 60);
    CHECK(rec.snapshots[2].fraction == 1.0);
    CHECK(rec.snapshots[2].evaluations == 103);
  }

  SUBCASE("budget equal to mu snapshots immediately after initialization") {
    Nsga2Config cfg;
    cfg.mutation = {MutationOp::Sgs};
    cfg.mu = 10;
    cfg.budget = 10;
    cfg.snapshot_fractions = {0.5, 1.0};
    const RunRecord rec = run_nsga2(g, cfg, 9);
    CHECK(rec.evaluations_used == 10);
    REQUIRE(rec.snapshots.size() == 2);
    CHECK(rec.snapshots[0].evaluations == 10);
    CHECK(rec.snapshots[1].evaluations == 10);
    CHECK(rec.snapshots[0].front == rec.snapshots[1].front);
  }

  SUBCASE("threshold landing between batches rounds up to the next batch") {
    Nsga2Config cfg;
    cfg.mutation = {MutationOp::Usgs};
    cfg.mu = 10;
    cfg.budget = 100;
    cfg.snapshot_fractions = {0.25, 1.0};
    const RunRecord rec = run_nsga2(g, cfg, 5);
    REQUIRE(rec.snapshots.size() == 2);
    CHECK(rec.snapshots[0].evaluations == 30);  // first multiple of 10 >= 25
    CHECK(rec.snapshots[1].evaluations == 100);
  }
}

TEST_CASE("driver configuration contracts") {
  const Graph g = generate_instance({InstanceClass::C1, 8, 2});
  Nsga2Config cfg;
  cfg.mutation = {MutationOp::Sgs};
  cfg.mu = 10;
  cfg.budget = 50;

  SUBCASE("population size") {
    cfg.mu = 1;
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
  }
  SUBCASE("budget must cover initialization") {
    cfg.budget = 9;
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
  }
  SUBCASE("snapshot fractions") {
    cfg.snapshot_fractions = {};
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
    cfg.snapshot_fractions = {0.5};
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
    cfg.snapshot_fractions = {0.5, 0.5, 1.0};
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
    cfg.snapshot_fractions = {0.3, 0.2, 1.0};
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
    cfg.snapshot_fractions = {0.0, 1.0};
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
    cfg.snapshot_fractions = {-0.1, 1.0};
    CHECK_THROWS_AS(run_nsga2(g, cfg, 1), ContractError);
    cfg.snapshot_fractions = {1.0};
    CHECK_NOTHROW(run_nsga2(g, cfg, 1));
  }
  SUBCASE("class-default sigma is clamped into the legal range") {
    // n=4 makes the n/2 default fall below the SG minimum of 3; the run
    // only completes if the driver clamps before building the mutator.
    const Graph small = generate_instance({InstanceClass::C1, 4, 3});
    Nsga2Config scfg;
    scfg.mutation = {MutationOp::Sg};
    scfg.mu = 5;
    scfg.budget = 20;
    CHECK_NOTHROW(run_nsga2(small, scfg, 1));
  }
}

TEST_CASE("runs are deterministic in the seed") {
  const Graph g = generate_instance({InstanceClass::C2, 12, 3});
  Nsga2Config cfg;
  cfg.mutation = {MutationOp::Sgs};
  cfg.mu = 20;
  cfg.budget = 400;

  const RunRecord a = run_nsga2(g, cfg, 11);
  const RunRecord b = run_nsga2(g, cfg, 11);
  CHECK(snapshots_equal(a.snapshots, b.snapshots));
  CHECK(a.evaluations_used == b.evaluations_used);

  const RunRecord c = run_nsga2(g, cfg, 12);
  CHECK(a.snapshots.front().front != c.snapshots.front().front);
  CHECK(a.snapshots.back().front != c.snapshots.back().front);

  SUBCASE("binary tournament is a distinct, equally deterministic policy") {
    Nsga2Config tcfg = cfg;
    tcfg.selection = ParentSelection::BinaryTournament;
    const RunRecord t1 = run_nsga2(g, tcfg, 11);
    const RunRecord t2 = run_nsga2(g, tcfg, 11);
    CHECK(snapshots_equal(t1.snapshots, t2.snapshots));
    CHECK(t1.evaluations_used == 400);
    CHECK(t1.snapshots.back().front != a.snapshots.back().front);
  }
}

TEST_CASE("snapshot fronts are clean Pareto fronts") {
  const Graph g = generate_instance({InstanceClass::C3, 12, 4});
  Nsga2Config cfg;
  cfg.mutation = {MutationOp::Usgs};
  cfg.mu = 25;
  cfg.budget = 600;
  cfg.snapshot_fractions = {0.1, 0.3, 0.6, 1.0};
  const RunRecord rec = run_nsga2(g, cfg, 8);
  REQUIRE(rec.snapshots.size() == 4);
  for (const Snapshot& snap : rec.snapshots) {
    REQUIRE(!snap.front.empty());
    CHECK(snap.front.size() <= static_cast<std::size_t>(cfg.mu));
    // Mutually non-dominated, distinct, ascending c1 (hence descending c2).
    for (std::size_t i = 0; i < snap.front.size(); ++i)
      for (std::size_t j = 0; j < snap.front.size(); ++j)
        if (i != j) CHECK(!dominates(snap.front[i], snap.front[j]));
    for (std::size_t i = 1; i < snap.front.size(); ++i) {
      CHECK(snap.front[i - 1].c1 < snap.front[i].c1);
      CHECK(snap.front[i - 1].c2 > snap.front[i].c2);
    }
    CHECK(snap.front == oracle::pareto_filter(snap.front));
  }
}

TEST_CASE("hypervolume deficit shrinks monotonically over a run") {
  const Graph g = generate_instance({InstanceClass::C4, 10, 2});
  Nsga2Config cfg;
  cfg.mutation = {MutationOp::Usgs};
  cfg.mu = 100;
  cfg.budget = 5000;
  cfg.snapshot_fractions = {0.02, 0.1, 0.2, 0.5, 1.0};
  const RunRecord rec = run_nsga2(g, cfg, 7);
  REQUIRE(rec.snapshots.size() == 5);
  std::vector<CostVector> pool;
  for (const Snapshot& s : rec.snapshots)
    pool.insert(pool.end(), s.front.begin(), s.front.end());
  const ReferenceSet ref = ReferenceSet::build(pool);
  double prev = kInf;
  for (const Snapshot& s : rec.snapshots) {
    const double deficit = hypervolume_indicator(s.front, ref);
    CHECK(deficit <= prev + 1e-12);
    prev = deficit;
  }
  // The final front dominates everything seen en route, so it covers the
  // pooled reference exactly.
  CHECK(hypervolume_indicator(rec.snapshots.back().front, ref) == 0.0);
}

TEST_CASE("small instance: the driver recovers the exhaustive front") {
  const Graph g = generate_instance({InstanceClass::C1, 6, 5});
  const std::vector<CostVector> truth = oracle::exhaustive_front(g);
  REQUIRE(truth.size() >= 2);

  Nsga2Config cfg;
  cfg.mutation = {MutationOp::Usgs};
  cfg.mu = 50;
  cfg.budget = 3000;
  const RunRecord rec = run_nsga2(g, cfg, 1);
  REQUIRE(rec.snapshots.size() == 3);
  CHECK(rec.snapshots[0].evaluations == 300);
  CHECK(rec.snapshots[1].evaluations == 1500);
  CHECK(rec.snapshots[2].evaluations == 3000);
  CHECK(rec.snapshots.back().front == truth);
}

TEST_CASE("random walks record every visited cost") {
  const Graph g = fixtures::fig_graph();

  SUBCASE("length is steps plus the start") {
    CHECK(random_walk(g, {MutationOp::Sgs}, 0, 77).size() == 1);
    CHECK(random_walk(g, {MutationOp::Sgs}, 57, 77).size() == 58);
    CHECK_THROWS_AS(random_walk(g, {MutationOp::Sgs}, -1, 77), ContractError);
  }
  SUBCASE("deterministic in the seed") {
    const auto a = random_walk(g, {MutationOp::Ex1}, 120, 31);
    const auto b = random_walk(g, {MutationOp::Ex1}, 120, 31);
    const auto c = random_walk(g, {MutationOp::Ex1}, 120, 32);
    CHECK(a == b);
    CHECK(a != c);
  }
  SUBCASE("uniform operator walks on a complete host") {
    const Graph k8 = generate_instance({InstanceClass::C1, 8, 4});
    CHECK(random_walk(k8, {MutationOp::Uniform}, 100, 5).size() == 101);
  }
}

TEST_CASE("sub-graph walks never take a dominated step") {
  const Graph c2 = generate_instance({InstanceClass::C2, 12, 3});
  const Graph c4 = generate_instance({InstanceClass::C4, 10, 2});
  const struct {
    const Graph* g;
    MutationOp op;
  } cases[] = {{&c2, MutationOp::Sgs},
               {&c2, MutationOp::Usgs},
               {&c4, MutationOp::Sg},
               {&c4, MutationOp::Usg}};
  for (const auto& [g, op] : cases) {
    CAPTURE(op_name(op));
    const std::vector<CostVector> trail = random_walk(*g, {op}, 400, 2025);
    int violations = 0;
    for (std::size_t i = 0; i + 1 < trail.size(); ++i)
      if (dominates(trail[i], trail[i + 1])) ++violations;
    CHECK(violations == 0);
  }
}
