#ifndef MODPROD_VERTEX_COVER_HPP
#define MODPROD_VERTEX_COVER_HPP

#include <cstdint>
#include <vector>

#include "modprod/graph.hpp"

namespace modprod {

struct CoverResult {
  int size = 0;
  std::vector<int> witness;   // ascending vertex ids; empty and has_witness
                              // false when a closed form skipped the solver
  bool has_witness = true;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
  bool optimal = true;
};

// Exact minimum vertex cover within the time budget; on exhaustion the best
// cover found so far is returned with optimal=false.
CoverResult min_vertex_cover(const Graph& g, double budget_seconds = 300.0);

// Same, but the witness is the lexicographically smallest minimum cover.
CoverResult min_vertex_cover_canonical(const Graph& g, double budget_seconds = 300.0);

// Independent oracle: plain subset enumeration in ascending size with the
// independent-set dual as the early stop. At most 26 non-isolated vertices.
int brute_force_vc(const Graph& g);

// Maximum independent set size by the same kind of enumeration (isolated
// vertices count). Same guard.
int brute_force_mis(const Graph& g);

// Vertex cover number of the strong resolving graph. Connected input only.
int strong_metric_dimension(const Graph& g);

// Dimension of the modular product. When exactly one factor is complete the
// closed form (t-1)*n + dim_s of the other factor is used and no product is
// built (no witness in that case); otherwise the full pipeline runs.
CoverResult strong_metric_dimension_modular(const Graph& g, const Graph& h,
                                            double budget_seconds = 300.0);

}  // namespace modprod

#endif
