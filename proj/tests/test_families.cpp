#include <algorithm>

#include "doctest.h"
#include "modprod/classify.hpp"
#include "modprod/families.hpp"
#include "modprod/structure.hpp"
#include "test_helpers.hpp"

using namespace modprod;
using namespace modprod::test;

namespace {

bool is_path_graph(const Graph& g) {
  if (!is_connected(g) || g.edge_count() != g.order() - 1) return false;
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
    if (g.degree(v) == 1) ++leaves;
  }
  return leaves == 2 || g.order() == 1;
}

}  // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("generators on minimal parameters") {
  CHECK(is_path_graph(generate(FamilySpec::hstq(1, 2, 0))));
  CHECK(generate(FamilySpec::hstq(1, 2, 0)).order() == 4);
  CHECK(is_path_graph(generate(FamilySpec::hstq(1, 2, 1))));
  CHECK(generate(FamilySpec::hstq(1, 2, 1)).order() == 5);

  const Graph knn = generate(FamilySpec::knn_minus_m(3));
  CHECK(knn.order() == 6);
  CHECK(degree_sequence(knn) == std::vector<int>(6, 2));
  CHECK(is_connected(knn));

  CHECK_THROWS(generate(FamilySpec::hstq(1, 1, 0)));
  CHECK_THROWS(generate(FamilySpec::cycle(2)));
  CHECK_THROWS(generate(FamilySpec::knn_minus_m_blowup(2, {1, 0}, {1, 1})));
}

TEST_CASE("hstq structure") {
  const int s = 4, t = 4, q = 3;
  const Graph h = generate(FamilySpec::hstq(s, t, q));
  const int y_t = s + t - 1, z = s + t + q;

  CHECK(gamma_pairs(h).is_pair(y_t, z));

  const TwinPartition open = twin_classes(h, TwinKind::open);
  auto class_members = [&](int v) { return open.classes[open.class_of[v]]; };
  CHECK(class_members(0).size() == s);            // X block
  CHECK(class_members(s).size() == t - 1);        // Y minus the far leaf
  CHECK(class_members(s + t).size() == q);        // W block

  for (const auto& cls : twin_classes(h, TwinKind::closed).classes)
    CHECK(cls.size() == 1);
}

TEST_CASE("blowup structure") {
  const Graph g = generate(FamilySpec::knn_minus_m_blowup(3, {2, 1, 1}, {1, 1, 1}));
  CHECK(p_set(g).size() == g.order());
  CHECK(twin_ordering(g).sizes == std::vector<int>{3, 2, 2});
  CHECK(gamma_pairs(g).pairs.size() == 4);  // q_1 + n - 1
}

TEST_CASE("predicted values on the frozen instances") {
  auto predict = [](Claim claim) { return predicted_dims(claim); };
  using Kind = Claim::Kind;

  CHECK(predict({Kind::star_star, {3, 2}, {}, {}}).value == 8);
  CHECK(predict({Kind::star_star, {4, 3}, {}, {}}).value == 16);
  CHECK_FALSE(predict({Kind::star_star, {2, 3}, {}, {}}).valid);

  CHECK(predict({Kind::cocycle_cocycle, {5, 5}, {}, {}}).value == 20);
  CHECK(predict({Kind::cocycle_cocycle, {5, 6}, {}, {}}).value == 24);
  CHECK_FALSE(predict({Kind::cocycle_cocycle, {4, 6}, {}, {}}).valid);

  CHECK(predict({Kind::cycle_cycle, {7, 7}, {}, {}}).value == 41);
  CHECK(predict({Kind::cycle_cycle, {7, 8}, {}, {}}).value == 48);
  CHECK(predict({Kind::cycle_cycle, {8, 8}, {}, {}}).value == 55);
  CHECK(predict({Kind::cycle_cycle, {8, 9}, {}, {}}).value == 62);
  CHECK_FALSE(predict({Kind::cycle_cycle, {6, 7}, {}, {}}).valid);

  CHECK(predict({Kind::knn_blowup_h, {3, 1, 1, 1, 1, 1, 1}, {}, FamilySpec::knn_minus_m(3)})
            .value == 27);
  CHECK(predict({Kind::knn_blowup_h, {3, 1, 1, 1, 1, 1, 1}, {}, FamilySpec::cycle(7)}).value ==
        21);
  CHECK_FALSE(
      predict({Kind::knn_blowup_h, {3, 1, 1, 1, 1, 1, 1}, {}, FamilySpec::star(3)}).valid);

  CHECK(predict({Kind::p5_h, {}, {}, FamilySpec::path(7)}).value == 19);
  CHECK(predict({Kind::p5_h, {}, {}, FamilySpec::cycle(7)}).value == 19);
  CHECK_FALSE(predict({Kind::p5_h, {}, {}, FamilySpec::complete(4)}).valid);

  CHECK(predict({Kind::star_hstq, {3, 4, 4, 3}, {}, {}}).value == 39);
  CHECK_FALSE(predict({Kind::star_hstq, {2, 4, 4, 3}, {}, {}}).valid);

  CHECK(predict({Kind::complete_factor, {2}, FamilySpec::path(4), {}}).value == 5);
  CHECK_FALSE(predict({Kind::complete_factor, {2}, FamilySpec::complete(3), {}}).valid);
}

TEST_CASE("verify_claim on fast instances") {
  for (const Claim& claim : quick_suite()) {
    const ClaimReport report = verify_claim(claim);
    CAPTURE(report.id);
    CHECK(report.valid);
    CHECK(report.match);
    CHECK(report.computed == report.predicted);
  }
}

TEST_CASE("verify_claim enforces the product ceiling") {
  VerifyOptions opts;
  opts.max_product_order = 10;
  const ClaimReport report = verify_claim({Claim::Kind::star_star, {3, 2}, {}, {}}, opts);
  CHECK_FALSE(report.valid);
  opts.allow_large = true;
  CHECK(verify_claim({Claim::Kind::star_star, {3, 2}, {}, {}}, opts).match);
}

TEST_SUITE_END();
