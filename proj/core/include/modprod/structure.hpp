#ifndef MODPROD_STRUCTURE_HPP
#define MODPROD_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "modprod/graph.hpp"

namespace modprod {

enum class TwinKind { closed, open };

// Partition of V(G) into equivalence classes of equal closed (twins) or open
// (false twins) neighborhoods. Classes are ordered by smallest member.
struct TwinPartition {
  TwinKind kind;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
};

TwinPartition twin_classes(const Graph& g, TwinKind kind);

// All pairs {u,v} with N[u] and N[v] partitioning V(G) (perfect codes of
// size two). A vertex may sit in several pairs, but only with partners from
// a single twin class.
struct GammaPairSet {
  std::vector<std::pair<int, int>> pairs;  // u < v, lexicographic order
  Bitset members;                          // the set P(G)
  std::vector<Bitset> partner;             // partner[v] = vertices paired with v

  bool is_pair(int u, int v) const { return u != v && partner[u].test(v); }
  bool in_some_pair(int v) const { return members.test(v); }
};

GammaPairSet gamma_pairs(const Graph& g);

// Graph on V(G) whose edges are exactly the gamma pairs.
Graph gp_graph(const Graph& g);

// Vertices that belong to some gamma pair, ascending.
std::vector<int> p_set(const Graph& g);

// G and its complement restricted to V(G) - P(G), with the map back to the
// original vertex ids.
struct MinusGraphs {
  Graph minus;
  Graph co_minus;
  std::vector<int> to_original;
};

MinusGraphs minus_graphs(const Graph& g);

// Twin classes grouped for the block bookkeeping: classes free of gamma
// pairs stay as they are, gamma-paired classes merge pairwise. Blocks are
// ordered by smallest member; sizes[i] == blocks[i].size().
struct TwinOrdering {
  std::vector<std::vector<int>> blocks;
  std::vector<int> sizes;
  int block_count = 0;      // k(H)
  int unpaired_classes = 0; // number of blocks that are plain twin classes
};

TwinOrdering twin_ordering(const Graph& h);

// Whether (a) and (b) have equal closed neighborhoods in the modular product
// of g and h, decided from the factors: twins in both coordinates, or a
// gamma pair in both coordinates.
bool modular_twin_predicate(const Graph& g, const Graph& h, std::pair<int, int> a,
                            std::pair<int, int> b);

// Vertices whose eccentricity attains the diameter. Connected input only.
std::vector<int> boundary_vertices(const Graph& g);

}  // namespace modprod

#endif
