#ifndef MODPROD_PRODUCTS_HPP
#define MODPROD_PRODUCTS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "modprod/graph.hpp"

namespace modprod {

enum class ProductKind {
  cartesian,
  direct,
  strong,
  lexicographic,
  direct_codirect,
  modular,
};

const char* to_string(ProductKind kind);
std::optional<ProductKind> product_kind_from_string(std::string_view name);

// Row-major (g-major) pair encoding shared by every product construction and
// by all downstream witnesses.
struct PairCode {
  int nh;
  int encode(int g, int h) const { return g * nh + h; }
  std::pair<int, int> decode(int v) const { return {v / nh, v % nh}; }
};

// Adjacency rule of `kind` applied to factor vertices; the shared primitive
// behind build_product and the per-pair evaluations elsewhere.
bool product_adjacent(ProductKind kind, const Graph& g, const Graph& h, int gu, int hu, int gv,
                      int hv);

// Product of g and h on order(g)*order(h) vertices under PairCode{order(h)}.
Graph build_product(ProductKind kind, const Graph& g, const Graph& h);

// Closed neighborhood of (gv,hv) in the modular product, computed from the
// factor neighborhoods alone (sorted encoded ids).
std::vector<int> modular_neighborhood(const Graph& g, const Graph& h, int gv, int hv);

}  // namespace modprod

#endif
