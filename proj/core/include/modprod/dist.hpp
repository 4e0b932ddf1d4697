#ifndef MODPROD_DIST_HPP
#define MODPROD_DIST_HPP

#include <limits>
#include <vector>

#include "modprod/graph.hpp"

namespace modprod {

// Sentinel for "no path". Larger than any attainable distance, small enough
// that a single addition cannot overflow.
inline constexpr int inf_dist = std::numeric_limits<int>::max() / 4;

inline bool is_inf(int d) { return d >= inf_dist; }

// All-pairs distance table.
struct DistMatrix {
  int n = 0;
  std::vector<int> d;

  DistMatrix() = default;
  explicit DistMatrix(int order) : n(order), d(static_cast<std::size_t>(order) * order, inf_dist) {}

  int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
  int& at(int u, int v) { return d[static_cast<std::size_t>(u) * n + v]; }

  // Max distance over all ordered pairs; inf_dist when disconnected.
  int diameter() const {
    int m = 0;
    for (int x : d)
      if (x > m) m = x;
    return m;
  }
};

// Single-source BFS distances.
std::vector<int> bfs_from(const Graph& g, int src);

// BFS-exact distances; inf_dist across components.
DistMatrix all_pairs_distances(const Graph& g);

// Minimum odd / even walk lengths, computed on the bipartite double cover.
// odd.at(u,u) is the length of the shortest odd closed walk through u
// (inf_dist when u's component is bipartite); even.at(u,u) == 0.
struct ParityDistances {
  DistMatrix odd;
  DistMatrix even;
};
ParityDistances parity_distances(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace modprod

#endif
