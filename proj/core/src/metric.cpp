#include "modprod/metric.hpp"

#include <algorithm>

namespace modprod {

const char* to_string(ModularDistanceCase::Tag tag) {
  using Tag = ModularDistanceCase::Tag;
  switch (tag) {
    case Tag::both_complete: return "both-complete";
    case Tag::one_factor_complete: return "one-factor-complete";
    case Tag::both_edgeless: return "both-edgeless";
    case Tag::two_clique_pair_infinite: return "two-clique-pair-infinite";
    case Tag::general: return "general";
  }
  return "?";
}

namespace {

int add_dist(int a, int b) { return is_inf(a) || is_inf(b) ? inf_dist : a + b; }

}  // namespace

ModularMetric::ModularMetric(Graph g, Graph h)
    : g_(std::move(g)),
      h_(std::move(h)),
      cg_(classify(g_)),
      ch_(classify(h_)),
      dg_(all_pairs_distances(g_)),
      dh_(all_pairs_distances(h_)),
      gg_(gamma_pairs(g_)),
      gh_(gamma_pairs(h_)),
      tg_(twin_classes(g_, TwinKind::closed)),
      th_(twin_classes(h_, TwinKind::closed)),
      comp_g_(component_labels(g_)),
      comp_h_(component_labels(h_)) {
  if (g_.order() < 1 || h_.order() < 1)
    throw std::invalid_argument("modular product factors must have order at least 1");
}

bool ModularMetric::adjacent(int g1, int h1, int g2, int h2) const {
  return product_adjacent(ProductKind::modular, g_, h_, g1, h1, g2, h2);
}

void ModularMetric::require_general_regime(const char* op) const {
  if (cg_.is_complete || ch_.is_complete)
    throw precondition_error(std::string(op) + ": factors must not be complete");
  if (cg_.is_union_of_two_cliques && ch_.is_union_of_two_cliques)
    throw precondition_error(std::string(op) +
                             ": factors must not both be unions of two cliques");
}

bool ModularMetric::dist3_unchecked(int g1, int h1, int g2, int h2) const {
  if (g_nbhd_equal(g1, g2) && dh_.at(h1, h2) >= 3 &&
      (g_universal(g1) || gh_.is_pair(h1, h2)))
    return true;
  return h_nbhd_equal(h1, h2) && dg_.at(g1, g2) >= 3 &&
         (h_universal(h1) || gg_.is_pair(g1, g2));
}

bool ModularMetric::dist3(int g1, int h1, int g2, int h2) const {
  require_general_regime("dist3_predicate");
  return dist3_unchecked(g1, h1, g2, h2);
}

ModularDistanceCase ModularMetric::distance(int g1, int h1, int g2, int h2) const {
  using Tag = ModularDistanceCase::Tag;
  const bool same = g1 == g2 && h1 == h2;
  // (a) both factors complete: the product is one clique
  if (cg_.is_complete && ch_.is_complete) return {Tag::both_complete, same ? 0 : 1};
  // (b) exactly one factor complete: max formula, covering a disconnected
  //     other factor through the infinite distance
  if (cg_.is_complete || ch_.is_complete) {
    const int a = cg_.is_complete ? (g1 == g2 ? 0 : 1) : dg_.at(g1, g2);
    const int b = ch_.is_complete ? (h1 == h2 ? 0 : 1) : dh_.at(h1, h2);
    return {Tag::one_factor_complete, std::max(a, b)};
  }
  // (c) both factors unions of two cliques: two clique components; a pair is
  //     in one component exactly when the factor components agree in parity
  if (cg_.is_union_of_two_cliques && ch_.is_union_of_two_cliques) {
    const bool same_component = (comp_g_[g1] ^ comp_h_[h1]) == (comp_g_[g2] ^ comp_h_[h2]);
    if (!same_component) return {Tag::two_clique_pair_infinite, inf_dist};
    return {Tag::general, same ? 0 : 1};
  }
  // (d) general regime: 0/1/3-before-2
  const Tag tag = cg_.is_edgeless && ch_.is_edgeless ? Tag::both_edgeless : Tag::general;
  if (same) return {tag, 0};
  if (adjacent(g1, h1, g2, h2)) return {tag, 1};
  if (dist3_unchecked(g1, h1, g2, h2)) return {tag, 3};
  return {tag, 2};
}

bool ModularMetric::diameter_two() const {
  require_general_regime("modular_diameter_two");
  const bool univ_g = !cg_.universal_vertices.empty();
  const bool univ_h = !ch_.universal_vertices.empty();
  const bool gamma_g = !gg_.pairs.empty();
  const bool gamma_h = !gh_.pairs.empty();
  // both factors of diameter two
  if (cg_.diameter == 2 && ch_.diameter == 2) return true;
  // no universal vertex and no gamma pair anywhere
  if (!univ_g && !univ_h && !gamma_g && !gamma_h) return true;
  // one factor of diameter two without a universal vertex, the other without
  // a gamma pair
  if (cg_.diameter == 2 && !univ_g && !gamma_h && !gamma_g) return true;
  if (ch_.diameter == 2 && !univ_h && !gamma_g && !gamma_h) return true;
  return false;
}

bool ModularMetric::connected() const {
  if (cg_.is_complete && !ch_.is_connected) return false;
  if (ch_.is_complete && !cg_.is_connected) return false;
  if (cg_.is_union_of_two_cliques && ch_.is_union_of_two_cliques) return false;
  return true;
}

StandardMetric::StandardMetric(Graph g, Graph h)
    : g_(std::move(g)),
      h_(std::move(h)),
      dg_(all_pairs_distances(g_)),
      dh_(all_pairs_distances(h_)),
      pg_(parity_distances(g_)),
      ph_(parity_distances(h_)) {}

int StandardMetric::distance(ProductKind kind, int g1, int h1, int g2, int h2) const {
  const int dg = dg_.at(g1, g2), dh = dh_.at(h1, h2);
  switch (kind) {
    case ProductKind::cartesian:
      return add_dist(dg, dh);
    case ProductKind::strong:
      return std::max(dg, dh);
    case ProductKind::lexicographic:
      // the distance-two shortcut through a neighboring copy needs g to have
      // a neighbor at all
      if (g1 != g2) return dg;
      return g_.degree(g1) > 0 ? std::min(dh, 2) : dh;
    case ProductKind::direct: {
      // a walk reaches (g2,h2) in exactly k steps iff both factors admit
      // k-walks; a length-zero walk cannot be padded at an isolated vertex
      int even = std::max(pg_.even.at(g1, g2), ph_.even.at(h1, h2));
      if (even > 0 && ((g1 == g2 && g_.degree(g1) == 0) || (h1 == h2 && h_.degree(h1) == 0)))
        even = inf_dist;
      const int odd = std::max(pg_.odd.at(g1, g2), ph_.odd.at(h1, h2));
      return std::min(even, odd);
    }
    default:
      throw precondition_error(
          "standard_product_distance: kind must be cartesian, direct, strong or lexicographic");
  }
}

int standard_product_distance(ProductKind kind, const Graph& g, const Graph& h,
                              std::pair<int, int> a, std::pair<int, int> b) {
  return StandardMetric(g, h).distance(kind, a.first, a.second, b.first, b.second);
}

ModularDistanceCase modular_distance(const Graph& g, const Graph& h, std::pair<int, int> a,
                                     std::pair<int, int> b) {
  return ModularMetric(g, h).distance(a.first, a.second, b.first, b.second);
}

bool dist3_predicate(const Graph& g, const Graph& h, std::pair<int, int> a,
                     std::pair<int, int> b) {
  return ModularMetric(g, h).dist3(a.first, a.second, b.first, b.second);
}

bool modular_diameter_two(const Graph& g, const Graph& h) {
  return ModularMetric(g, h).diameter_two();
}

bool modular_connected(const Graph& g, const Graph& h) {
  return ModularMetric(g, h).connected();
}

}  // namespace modprod
