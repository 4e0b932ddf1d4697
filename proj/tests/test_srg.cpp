#include <algorithm>
#include <set>

#include "doctest.h"
#include "modprod/corpus.hpp"
#include "modprod/srg.hpp"
#include "modprod/structure.hpp"
#include "modprod/vertex_cover.hpp"
#include "test_helpers.hpp"

using namespace modprod;
using namespace modprod::test;

namespace {

std::set<std::pair<int, int>> edge_set(const SrgGraph& srg) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : srg.edges) out.emplace(e.u, e.v);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("srg");

TEST_CASE("oracle on named graphs") {
  const SrgGraph p4 = srg_oracle(path(4));
  CHECK(edge_set(p4) == std::set<std::pair<int, int>>{{0, 3}});

  const SrgGraph c5 = srg_oracle(cycle(5));
  CHECK(c5.edges.size() == 5);
  CHECK(degree_sequence(c5.skeleton) == std::vector<int>{2, 2, 2, 2, 2});

  const SrgGraph k4 = srg_oracle(complete(4));
  CHECK(k4.skeleton == complete(4));

  CHECK_THROWS(srg_oracle(disjoint_union(complete(2), complete(2))));
}

TEST_CASE("oracle output is MMD by definition") {
  for (const Graph& g : {path(6), cycle(7), star(4), complement(cycle(6))}) {
    const DistMatrix dm = all_pairs_distances(g);
    for (const auto& e : srg_oracle(g).edges) {
      const int d = dm.at(e.u, e.v);
      const Bitset& nu = g.open_neighborhood(e.u);
      for (int w = nu.find_first(); w >= 0; w = nu.find_next(w + 1))
        REQUIRE(dm.at(w, e.v) <= d);
      const Bitset& nv = g.open_neighborhood(e.v);
      for (int w = nv.find_first(); w >= 0; w = nv.find_next(w + 1))
        REQUIRE(dm.at(w, e.u) <= d);
    }
  }
}

TEST_CASE("diameter-two observation") {
  const Graph co_c6 = complement(cycle(6));
  const SrgGraph via_obs = srg_diam2_observation(co_c6);
  CHECK(edge_set(via_obs) == edge_set(srg_oracle(co_c6)));
  CHECK_THROWS(srg_diam2_observation(path(4)));
}

TEST_CASE("diam2 builder equals the oracle on named pairs") {
  for (auto [g, h] : {std::pair{cycle(7), cycle(7)}, {cycle(5), cycle(5)},
                      {star(3), star(2)}}) {
    const SrgGraph built = srg_modular_diam2(g, h);
    const SrgGraph oracle = srg_oracle(build_product(ProductKind::modular, g, h));
    CHECK(edge_set(built) == edge_set(oracle));
  }
  // stars have no distinct twins, so no twin edges arise
  for (const auto& e : srg_modular_diam2(star(3), star(2)).edges)
    CHECK(e.reason != SrgReason::twin);
}

TEST_CASE("gamma builder equals the oracle on named pairs") {
  const Graph knn = generate(FamilySpec::knn_minus_m(3));
  for (auto [g, h] : {std::pair{path(5), cycle(7)}, {path(5), path(7)}, {knn, knn},
                      {knn, cycle(7)}}) {
    const SrgGraph built = srg_modular_gamma_case(g, h);
    const SrgGraph oracle = srg_oracle(build_product(ProductKind::modular, g, h));
    CHECK(edge_set(built) == edge_set(oracle));
  }
}

TEST_CASE("gamma-case srg of matched clique blowups is a union of cliques") {
  const Graph knn = generate(FamilySpec::knn_minus_m(3));
  const SrgGraph srg = srg_modular_gamma_case(knn, knn);
  const auto label = component_labels(srg.skeleton);
  const int comps = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> size(comps, 0), inner(comps, 0);
  for (int v = 0; v < srg.skeleton.order(); ++v) ++size[label[v]];
  for (auto [u, v] : srg.skeleton.edges()) ++inner[label[u]];
  std::vector<int> clique_sizes;
  for (int c = 0; c < comps; ++c) {
    REQUIRE(inner[c] == size[c] * (size[c] - 1) / 2);
    clique_sizes.push_back(size[c]);
  }
  std::sort(clique_sizes.begin(), clique_sizes.end());
  CHECK(clique_sizes == std::vector<int>(9, 4));
}

TEST_CASE("gamma-case srg block sizes follow the twin ordering") {
  const Graph g = generate(FamilySpec::knn_minus_m_blowup(3, {2, 1, 1}, {1, 1, 1}));
  const Graph h = generate(FamilySpec::knn_minus_m(3));
  const SrgGraph srg = srg_modular_gamma_case(g, h);
  CHECK(edge_set(srg) == edge_set(srg_oracle(build_product(ProductKind::modular, g, h))));
  const auto label = component_labels(srg.skeleton);
  const int comps = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> size(comps, 0);
  for (int v = 0; v < srg.skeleton.order(); ++v) ++size[label[v]];
  std::sort(size.begin(), size.end());
  // t(G) = (3,2,2) against t(H) = (2,2,2): nine cliques of sizes t_i * t_j
  CHECK(size == std::vector<int>{4, 4, 4, 4, 4, 4, 6, 6, 6});
}

TEST_CASE("gamma case needs neighborhood equality, not vertex equality") {
  // with distinct twins in one factor, distance-three pairs reach across
  // twin positions; a box product over the literal gamma-pair graphs would
  // miss those edges
  const Graph g = disjoint_union(complete(2), complete(2));
  const Graph h = path(4);
  const SrgGraph oracle = srg_oracle(build_product(ProductKind::modular, g, h));
  CHECK(edge_set(srg_modular_gamma_case(g, h)) == edge_set(oracle));

  const GammaPairSet gg = gamma_pairs(g), gh = gamma_pairs(h);
  const PairCode code{h.order()};
  std::set<std::pair<int, int>> strict;  // twin edges + gamma-box with equal coordinates
  for (int g1 = 0; g1 < g.order(); ++g1)
    for (int h1 = 0; h1 < h.order(); ++h1)
      for (int g2 = 0; g2 < g.order(); ++g2)
        for (int h2 = 0; h2 < h.order(); ++h2) {
          int u = code.encode(g1, h1), v = code.encode(g2, h2);
          if (u >= v) continue;
          const bool box = (g1 == g2 && gh.is_pair(h1, h2)) || (gg.is_pair(g1, g2) && h1 == h2);
          if (box || modular_twin_predicate(g, h, {g1, h1}, {g2, h2})) strict.emplace(u, v);
        }
  // (0,0)-(1,3): 0,1 are twins of g and {0,3} is a gamma pair of h
  CHECK(edge_set(oracle).count({code.encode(0, 0), code.encode(1, 3)}) == 1);
  CHECK(strict.count({code.encode(0, 0), code.encode(1, 3)}) == 0);
  CHECK(strict != edge_set(oracle));
}

TEST_CASE("isolated column contributes the complement of the minus part") {
  // the middle path-5 vertex never joins a gamma pair, so the srg restricted
  // to its column induces the complement of the partner's minus part
  const Graph g = path(5);
  const Graph h = path(7);
  const SrgGraph srg = srg_modular_gamma_case(g, h);
  const PairCode code{h.order()};
  std::vector<int> column;
  for (int hv = 0; hv < 7; ++hv) column.push_back(code.encode(2, hv));
  const Graph induced = induced_subgraph(srg.skeleton, column);
  CHECK(induced == minus_graphs(h).co_minus);
}

TEST_CASE("diam3 builder equals the oracle on named pairs") {
  for (auto [g, h] : {std::pair{star(3), path(5)}, {star(3), generate(FamilySpec::hstq(4, 4, 3))},
                      {star(2), generate(FamilySpec::hstq(1, 2, 1))}}) {
    const SrgGraph built = srg_modular_diam3(g, h);
    const SrgGraph oracle = srg_oracle(build_product(ProductKind::modular, g, h));
    CHECK(edge_set(built) == edge_set(oracle));
  }
}

TEST_CASE("hub-to-far-leaf edges carry the distance-three reason") {
  const Graph g = star(3);
  const Graph h = generate(FamilySpec::hstq(4, 4, 3));
  // in the h labeling: y_t = 4 + 3 = index 7, hub z = last = 11
  const int y_t = 7, z = 11;
  const PairCode code{h.order()};
  const SrgGraph built = srg_modular_diam3(g, h);
  bool found = false;
  for (const auto& e : built.edges) {
    if (e.u == std::min(code.encode(0, z), code.encode(0, y_t)) &&
        e.v == std::max(code.encode(0, z), code.encode(0, y_t))) {
      found = true;
      CHECK(e.reason == SrgReason::dist3);
    }
  }
  CHECK(found);
}

TEST_CASE("dispatch routes and stays oracle-backed") {
  const SrgGraph a = srg_dispatch(cycle(7), cycle(7));
  CHECK(a.method == "diam2");
  CHECK(a.specialized_match == true);

  const SrgGraph b = srg_dispatch(path(5), cycle(7));
  CHECK(b.method == "gamma");
  CHECK(b.specialized_match == true);

  const SrgGraph c = srg_dispatch(path(4), complete(3));
  CHECK(c.method == "oracle");
  CHECK_FALSE(c.specialized_match.has_value());
  CHECK(edge_set(c) == edge_set(srg_oracle(build_product(ProductKind::modular, path(4), complete(3)))));

  // swapped orientation still reaches the gamma builder
  const SrgGraph d = srg_dispatch(cycle(7), path(5));
  CHECK(d.method == "gamma");
  CHECK(d.specialized_match == true);

  const SrgGraph e = srg_dispatch(star(3), path(5));
  CHECK(e.method == "diam3");
  CHECK(e.specialized_match == true);

  CHECK_THROWS(srg_dispatch(complete(3), edgeless(2)));
}

TEST_CASE("srg-isolated vertices never change the cover number") {
  for (auto [g, h] : {std::pair{path(5), cycle(7)}, {star(3), path(5)}}) {
    const SrgGraph srg = srg_dispatch(g, h);
    std::vector<int> keep;
    for (int v = 0; v < srg.skeleton.order(); ++v)
      if (srg.skeleton.degree(v) > 0) keep.push_back(v);
    const Graph trimmed = induced_subgraph(srg.skeleton, keep);
    CHECK(min_vertex_cover(trimmed).size == min_vertex_cover(srg.skeleton).size);
  }
}

TEST_CASE("builder suite on the exhaustive corpus") {
  const SuiteResult res = check_srg_builders(exhaustive_pairs(3));
  CHECK(res.failures == std::vector<std::string>{});
}

TEST_CASE("builder suite on random pairs") {
  const SuiteResult res = check_srg_builders(random_pairs(100, 5, 31337));
  CHECK(res.failures == std::vector<std::string>{});
}

TEST_SUITE_END();
