#include "modprod/graph.hpp"

namespace modprod {

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int ng = g.order();
  Graph out(ng + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace modprod
