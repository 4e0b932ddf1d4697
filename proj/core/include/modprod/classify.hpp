#ifndef MODPROD_CLASSIFY_HPP
#define MODPROD_CLASSIFY_HPP

#include <vector>

#include "modprod/dist.hpp"
#include "modprod/graph.hpp"

namespace modprod {

// Structural predicates that the distance/SRG case analysis branches on.
struct GraphClass {
  bool is_complete = false;
  bool is_edgeless = false;
  bool is_connected = false;
  bool is_union_of_two_cliques = false;  // exactly 2 components, each complete
  int diameter = 0;                      // inf_dist when disconnected
  std::vector<int> universal_vertices;
  std::vector<int> isolated_vertices;
};

GraphClass classify(const Graph& g);

// Component id per vertex, numbered 0.. in order of smallest member.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);

}  // namespace modprod

#endif
