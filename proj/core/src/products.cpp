#include "modprod/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace modprod {

const char* to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::direct_codirect: return "direct-codirect";
    case ProductKind::modular: return "modular";
  }
  return "?";
}

std::optional<ProductKind> product_kind_from_string(std::string_view name) {
  if (name == "cartesian") return ProductKind::cartesian;
  if (name == "direct") return ProductKind::direct;
  if (name == "strong") return ProductKind::strong;
  if (name == "lexicographic" || name == "lex") return ProductKind::lexicographic;
  if (name == "direct-codirect" || name == "dcd") return ProductKind::direct_codirect;
  if (name == "modular") return ProductKind::modular;
  return std::nullopt;
}

bool product_adjacent(ProductKind kind, const Graph& g, const Graph& h, int gu, int hu, int gv,
                      int hv) {
  if (gu == gv && hu == hv) return false;
  const bool ge = gu == gv, he = hu == hv;
  const bool ga = !ge && g.adjacent(gu, gv), ha = !he && h.adjacent(hu, hv);
  const bool cartesian = (ge && ha) || (ga && he);
  const bool direct = ga && ha;
  const bool codirect = !ge && !he && !ga && !ha;
  switch (kind) {
    case ProductKind::cartesian: return cartesian;
    case ProductKind::direct: return direct;
    case ProductKind::strong: return cartesian || direct;
    case ProductKind::lexicographic: return ga || (ge && ha);
    case ProductKind::direct_codirect: return direct || codirect;
    case ProductKind::modular: return cartesian || direct || codirect;
  }
  return false;
}

Graph build_product(ProductKind kind, const Graph& g, const Graph& h) {
  if (g.order() < 1 || h.order() < 1)
    throw std::invalid_argument("product factors must have order at least 1");
  const PairCode code{h.order()};
  Graph out(g.order() * h.order());
  const int n = out.order();
  for (int u = 0; u < n; ++u) {
    auto [gu, hu] = code.decode(u);
    for (int v = u + 1; v < n; ++v) {
      auto [gv, hv] = code.decode(v);
      if (product_adjacent(kind, g, h, gu, hu, gv, hv)) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<int> modular_neighborhood(const Graph& g, const Graph& h, int gv, int hv) {
  g.check_vertex(gv);
  h.check_vertex(hv);
  const PairCode code{h.order()};
  Bitset ng = g.closed_neighborhood(gv);
  Bitset nh = h.closed_neighborhood(hv);
  Bitset ch = nh;
  ch.flip_all();
  std::vector<int> out;
  // (N[g] x N[h]) together with (complement x complement).
  for (int a = 0; a < g.order(); ++a) {
    const Bitset& hside = ng.test(a) ? nh : ch;
    for (int b = hside.find_first(); b >= 0; b = hside.find_next(b + 1))
      out.push_back(code.encode(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modprod
