#include <algorithm>

#include "doctest.h"
#include "modprod/corpus.hpp"
#include "modprod/structure.hpp"
#include "test_helpers.hpp"

using namespace modprod;
using namespace modprod::test;

TEST_SUITE_BEGIN("structure");

TEST_CASE("twin classes") {
  const TwinPartition k4 = twin_classes(complete(4), TwinKind::closed);
  CHECK(k4.classes.size() == 1);
  CHECK(k4.classes[0].size() == 4);

  const TwinPartition claw = twin_classes(star(3), TwinKind::open);
  CHECK(claw.classes.size() == 2);
  CHECK(claw.classes[0] == std::vector<int>{0});
  CHECK(claw.classes[1] == std::vector<int>{1, 2, 3});

  CHECK(twin_classes(path(5), TwinKind::closed).classes.size() == 5);
}

TEST_CASE("gamma pairs") {
  const GammaPairSet p5 = gamma_pairs(path(5));
  CHECK(p5.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}});

  CHECK(gamma_pairs(cycle(7)).pairs.empty());

  const GammaPairSet c6 = gamma_pairs(cycle(6));
  CHECK(c6.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});

  const Graph knn = generate(FamilySpec::knn_minus_m(3));
  const GammaPairSet kp = gamma_pairs(knn);
  CHECK(kp.pairs == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
  CHECK(kp.members.count() == 6);
}

TEST_CASE("gamma-pair graph and minus graphs") {
  const Graph gp = gp_graph(path(5));
  CHECK(gp.edge_count() == 2);
  CHECK(gp.adjacent(0, 3));
  CHECK(gp.adjacent(1, 4));
  CHECK(p_set(path(5)) == std::vector<int>{0, 1, 3, 4});
  const MinusGraphs mg = minus_graphs(path(5));
  CHECK(mg.minus.order() == 1);
  CHECK(mg.to_original == std::vector<int>{2});

  CHECK(gp_graph(cycle(7)).edge_count() == 0);
  CHECK(minus_graphs(cycle(7)).minus.order() == 7);

  CHECK(p_set(generate(FamilySpec::knn_minus_m(3))).size() == 6);
  CHECK(minus_graphs(generate(FamilySpec::knn_minus_m(3))).minus.order() == 0);
}

TEST_CASE("twin ordering") {
  const TwinOrdering c7 = twin_ordering(cycle(7));
  CHECK(c7.block_count == 7);
  CHECK(c7.sizes == std::vector<int>(7, 1));

  const TwinOrdering knn = twin_ordering(generate(FamilySpec::knn_minus_m(3)));
  CHECK(knn.block_count == 3);
  CHECK(knn.sizes == std::vector<int>{2, 2, 2});
  CHECK(knn.blocks[0] == std::vector<int>{0, 3});

  const Graph blown = generate(FamilySpec::knn_minus_m_blowup(3, {2, 1, 1}, {1, 1, 1}));
  const TwinOrdering bo = twin_ordering(blown);
  CHECK(bo.block_count == 3);
  CHECK(bo.sizes == std::vector<int>{3, 2, 2});
}

TEST_CASE("twin ordering block sizes always cover the graph") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 7), 0.4, rng);
    const TwinOrdering ord = twin_ordering(g);
    int total = 0;
    for (int s : ord.sizes) total += s;
    REQUIRE(total == g.order());
  }
}

TEST_CASE("modular twin predicate on named pairs") {
  CHECK(modular_twin_predicate(complete(3), complete(3), {0, 0}, {1, 2}));
  CHECK(modular_twin_predicate(path(5), path(5), {0, 0}, {3, 3}));
  CHECK_FALSE(modular_twin_predicate(path(5), path(5), {0, 0}, {3, 4}));
}

TEST_CASE("boundary vertices") {
  CHECK(boundary_vertices(path(4)) == std::vector<int>{0, 3});
  CHECK(boundary_vertices(cycle(6)) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(boundary_vertices(star(3)) == std::vector<int>{1, 2, 3});
  CHECK_THROWS(boundary_vertices(disjoint_union(complete(2), complete(2))));
}

TEST_CASE("structure suite on the exhaustive corpus") {
  const SuiteResult res = check_structure(exhaustive_pairs(3));
  CHECK(res.failures == std::vector<std::string>{});
}

TEST_CASE("structure suite on random pairs") {
  const SuiteResult res = check_structure(random_pairs(120, 6, 424242));
  CHECK(res.failures == std::vector<std::string>{});
}

TEST_SUITE_END();
