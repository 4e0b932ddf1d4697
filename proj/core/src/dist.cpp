#include "modprod/dist.hpp"

namespace modprod {

std::vector<int> bfs_from(const Graph& g, int src) {
  const int n = g.order();
  std::vector<int> dist(n, inf_dist);
  Bitset visited(n), frontier(n);
  frontier.set(src);
  int d = 0;
  while (frontier.any()) {
    Bitset next(n);
    for (int v = frontier.find_first(); v >= 0; v = frontier.find_next(v + 1)) {
      dist[v] = d;
      next |= g.open_neighborhood(v);
    }
    visited |= frontier;
    next.subtract(visited);
    frontier = next;
    ++d;
  }
  return dist;
}

DistMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistMatrix m(n);
  for (int s = 0; s < n; ++s) {
    auto row = bfs_from(g, s);
    for (int v = 0; v < n; ++v) m.at(s, v) = row[v];
  }
  return m;
}

ParityDistances parity_distances(const Graph& g) {
  const int n = g.order();
  ParityDistances out{DistMatrix(n), DistMatrix(n)};
  // Double cover layers: vertex (v, p) has index v + p*n; stepping an edge
  // flips the parity layer.
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(2 * n, inf_dist);
    std::vector<int> frontier{s};
    dist[s] = 0;
    int d = 0;
    while (!frontier.empty()) {
      ++d;
      std::vector<int> next;
      for (int x : frontier) {
        const int v = x % n, p = x / n;
        const Bitset& nb = g.open_neighborhood(v);
        for (int w = nb.find_first(); w >= 0; w = nb.find_next(w + 1)) {
          const int y = w + (1 - p) * n;
          if (dist[y] == inf_dist) {
            dist[y] = d;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    for (int v = 0; v < n; ++v) {
      out.even.at(s, v) = dist[v];
      out.odd.at(s, v) = dist[v + n];
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_from(g, 0);
  for (int d : dist)
    if (is_inf(d)) return false;
  return true;
}

}  // namespace modprod
