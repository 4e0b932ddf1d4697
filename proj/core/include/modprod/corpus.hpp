#ifndef MODPROD_CORPUS_HPP
#define MODPROD_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "modprod/graph.hpp"

namespace modprod {

// Every graph on exactly n vertices up to isomorphism (n <= 5 is practical).
std::vector<Graph> all_graphs_up_to_iso(int n);

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

// Factor pairs used by the audit suites.
std::vector<std::pair<Graph, Graph>> exhaustive_pairs(int max_order);
std::vector<std::pair<Graph, Graph>> random_pairs(int count, int max_order, std::uint64_t seed);
// Hand-picked pairs that hit the special regimes (gamma pairs, universal
// vertices, two-clique factors, complete factors).
std::vector<std::pair<Graph, Graph>> special_pairs();

std::string graph_repr(const Graph& g);

struct SuiteResult {
  std::string name;
  long comparisons = 0;
  int pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Closed-form distances against BFS on the built products (modular and the
// four standard kinds), plus the distance-three, diameter-two and
// connectivity predicates.
SuiteResult check_distance_formulas(const std::vector<std::pair<Graph, Graph>>& pairs);

// Twin characterization against direct neighborhood comparison, absence of
// false twins, the gamma-pair identity, and twin-ordering bookkeeping.
SuiteResult check_structure(const std::vector<std::pair<Graph, Graph>>& pairs);

// Specialized SRG builders against the MMD oracle on every pair meeting
// their preconditions; also the twin-edge invariant.
SuiteResult check_srg_builders(const std::vector<std::pair<Graph, Graph>>& pairs);

// Solver against the brute-force oracle, the cover/independence identity,
// witness validity, and determinism.
SuiteResult check_solver(int count, int max_order, std::uint64_t seed);

}  // namespace modprod

#endif
