#ifndef MODPROD_METRIC_HPP
#define MODPROD_METRIC_HPP

#include <stdexcept>
#include <utility>

#include "modprod/classify.hpp"
#include "modprod/dist.hpp"
#include "modprod/products.hpp"
#include "modprod/structure.hpp"

namespace modprod {

// An operation was invoked outside the regime its case analysis covers.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ModularDistanceCase {
  enum class Tag {
    both_complete,
    one_factor_complete,
    both_edgeless,
    two_clique_pair_infinite,
    general,
  };
  Tag tag;
  int value;
};

const char* to_string(ModularDistanceCase::Tag tag);

// Precomputed factor data for the closed-form distance of one modular
// product. Construction is O(n^3)-ish in the factor orders; per-pair queries
// are cheap.
class ModularMetric {
 public:
  ModularMetric(Graph g, Graph h);

  ModularDistanceCase distance(int g1, int h1, int g2, int h2) const;

  // Whether the product distance of the two vertices is exactly three.
  // Requires the general regime (neither factor complete, not both factors
  // unions of two cliques); throws precondition_error otherwise.
  bool dist3(int g1, int h1, int g2, int h2) const;

  // Whether the product has diameter two. Same preconditions as dist3.
  bool diameter_two() const;

  // Whether the product is connected. No preconditions.
  bool connected() const;

  bool adjacent(int g1, int h1, int g2, int h2) const;

  const Graph& g() const { return g_; }
  const Graph& h() const { return h_; }
  const GraphClass& g_class() const { return cg_; }
  const GraphClass& h_class() const { return ch_; }
  const DistMatrix& g_dist() const { return dg_; }
  const DistMatrix& h_dist() const { return dh_; }
  const GammaPairSet& g_gamma() const { return gg_; }
  const GammaPairSet& h_gamma() const { return gh_; }
  bool g_universal(int v) const { return g_.degree(v) == g_.order() - 1; }
  bool h_universal(int v) const { return h_.degree(v) == h_.order() - 1; }
  bool g_nbhd_equal(int u, int v) const { return tg_.class_of[u] == tg_.class_of[v]; }
  bool h_nbhd_equal(int u, int v) const { return th_.class_of[u] == th_.class_of[v]; }

  void require_general_regime(const char* op) const;

 private:
  bool dist3_unchecked(int g1, int h1, int g2, int h2) const;

  Graph g_, h_;
  GraphClass cg_, ch_;
  DistMatrix dg_, dh_;
  GammaPairSet gg_, gh_;
  TwinPartition tg_, th_;
  std::vector<int> comp_g_, comp_h_;
};

// Closed-form distances for the four standard products; Eq-style per-kind
// rules with parity distances backing the direct product.
class StandardMetric {
 public:
  StandardMetric(Graph g, Graph h);
  int distance(ProductKind kind, int g1, int h1, int g2, int h2) const;

 private:
  Graph g_, h_;
  DistMatrix dg_, dh_;
  ParityDistances pg_, ph_;
};

// One-shot wrappers over the contexts above.
int standard_product_distance(ProductKind kind, const Graph& g, const Graph& h,
                              std::pair<int, int> a, std::pair<int, int> b);
ModularDistanceCase modular_distance(const Graph& g, const Graph& h, std::pair<int, int> a,
                                     std::pair<int, int> b);
bool dist3_predicate(const Graph& g, const Graph& h, std::pair<int, int> a,
                     std::pair<int, int> b);
bool modular_diameter_two(const Graph& g, const Graph& h);
bool modular_connected(const Graph& g, const Graph& h);

}  // namespace modprod

#endif
