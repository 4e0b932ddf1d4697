#ifndef MODPROD_GRAPH_HPP
#define MODPROD_GRAPH_HPP

#include <stdexcept>
#include <vector>

#include "modprod/bitset.hpp"

namespace modprod {

// Simple undirected graph on vertices 0..n-1. Adjacency is kept as one bit
// row per vertex so neighborhood comparisons cost O(n/64).
//
// Order 0 is allowed only so that derived graphs (induced subgraphs after
// deleting every vertex) stay representable; parsers and product/dimension
// operations insist on order >= 1.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    rows_.assign(n, Bitset(n));
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return rows_[u].test(v); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }

  int degree(int u) const { return rows_[u].count(); }

  // N(u) as a bit row.
  const Bitset& open_neighborhood(int u) const { return rows_[u]; }

  // N[u] as a bit row.
  Bitset closed_neighborhood(int u) const {
    Bitset r = rows_[u];
    r.set(u);
    return r;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v = rows_[u].find_next(u + 1); v >= 0; v = rows_[u].find_next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  void check_vertex(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("vertex id out of range");
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  int m_ = 0;
  std::vector<Bitset> rows_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// Subgraph induced by `verts` (kept in the given order; result vertex i is
// verts[i]).
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

}  // namespace modprod

#endif
