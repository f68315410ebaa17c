#include <doctest.h>

#include "fixtures.hpp"
#include "momst/cost.hpp"
#include "momst/errors.hpp"
#include "momst/graph.hpp"
#include "momst/spanning_tree.hpp"
#include "momst/union_find.hpp"

using namespace momst;

TEST_CASE("dominance relation") {
  CHECK(dominates({1, 1}, {2, 2}));
  CHECK(dominates({1, 2}, {1, 3}));   // weak in c1, strict in c2
  CHECK(dominates({1, 2}, {2, 2}));
  CHECK_FALSE(dominates({1, 2}, {1, 2}));  // equal points do not dominate
  CHECK_FALSE(dominates({1, 3}, {2, 2}));  // incomparable
  CHECK_FALSE(dominates({2, 2}, {1, 3}));
  CHECK_FALSE(dominates({2, 2}, {1, 1}));
}

TEST_CASE("graph construction and validation") {
  Graph g(3);
  const int e0 = g.add_edge(1, 0, {1, 2});  // normalized to (0, 1)
  CHECK(e0 == 0);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.find_edge(0, 1) == 0);
  CHECK(g.find_edge(1, 0) == 0);
  CHECK(g.find_edge(0, 2) == -1);

  CHECK_THROWS_AS(g.add_edge(1, 1, {1, 1}), ContractError);
  CHECK_THROWS_AS(g.add_edge(0, 3, {1, 1}), ContractError);
  CHECK_THROWS_AS(g.add_edge(0, 2, {0, 1}), ContractError);
  CHECK_THROWS_AS(g.add_edge(0, 2, {1, -1}), ContractError);
  CHECK_THROWS_AS(Graph(0), ContractError);

  g.add_edge(0, 1, {3, 3});  // duplicate slips past add_edge by design...
  CHECK_THROWS_AS(g.check_invariants(), ContractError);  // ...but not re-validation
}

TEST_CASE("complete flag consistency") {
  Graph g(3, true);
  g.add_edge(0, 1, {1, 1});
  CHECK_THROWS_AS(g.check_invariants(), ContractError);
  g.add_edge(0, 2, {1, 1});
  g.add_edge(1, 2, {1, 1});
  CHECK_NOTHROW(g.check_invariants());
  CHECK(g.is_complete());
  CHECK(g.max_degree() == 2);
}

TEST_CASE("union-find basics") {
  UnionFind uf(5);
  CHECK(uf.components() == 5);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.connected(0, 1));
  CHECK_FALSE(uf.connected(0, 2));
  CHECK(uf.unite(1, 3));
  CHECK(uf.connected(0, 2));
  CHECK(uf.components() == 2);
}

TEST_CASE("spanning tree validation") {
  Graph g = fixtures::fig_graph();

  SUBCASE("valid tree") {
    SpanningTree t(g, fixtures::fig_parent_edges());
    CHECK(t.size() == 8);
    CHECK(t.cost() == CostVector{29, 31});
    CHECK(t.contains_edge(0));
    CHECK_FALSE(t.contains_edge(1));
  }
  SUBCASE("wrong cardinality") {
    CHECK_THROWS_AS(SpanningTree(g, {0, 2, 4}), ContractError);
  }
  SUBCASE("cycle") {
    // e3 (1-4), e4 (2-4), e2 (1-2) form a triangle.
    CHECK_THROWS_AS(SpanningTree(g, {2, 3, 4, 0, 1, 6, 11, 13}), ContractError);
  }
  SUBCASE("duplicate edge is a cycle") {
    CHECK_THROWS_AS(SpanningTree(g, {0, 0, 2, 4, 6, 9, 11, 13}), ContractError);
  }
  SUBCASE("edge index out of range") {
    CHECK_THROWS_AS(SpanningTree(g, {0, 2, 4, 6, 9, 11, 13, 99}), ContractError);
  }
}

TEST_CASE("spanning tree cost memo follows assign") {
  Graph g = fixtures::fig_graph();
  SpanningTree t(g, fixtures::fig_parent_edges());
  const CostVector before = t.cost();
  // Swap e12 (10,2) for e5 (3,1): still a spanning tree.
  t.assign({0, 2, 4, 6, 9, 11, 5, 13});
  const CostVector after = t.cost();
  CHECK(after == CostVector{before.c1 - 10 + 3, before.c2 - 2 + 1});
}

TEST_CASE("fig parent tree cost components") {
  // Hand-added costs of the fixture's parent tree edges.
  Graph g = fixtures::fig_graph();
  SpanningTree t(g, fixtures::fig_parent_edges());
  CHECK(t.cost().c1 == 2 + 5 + 1 + 6 + 1 + 3 + 10 + 1);
  CHECK(t.cost().c2 == 2 + 3 + 1 + 8 + 9 + 1 + 2 + 5);
}

TEST_CASE("same_edges ignores storage order") {
  Graph g = fixtures::fig_graph();
  SpanningTree a(g, {0, 2, 4, 6, 9, 11, 12, 13});
  SpanningTree b(g, {13, 12, 11, 9, 6, 4, 2, 0});
  CHECK(a.same_edges(b));
  SpanningTree c(g, {0, 2, 4, 6, 9, 11, 5, 13});
  CHECK_FALSE(a.same_edges(c));
}
