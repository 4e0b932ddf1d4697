#ifndef MODPROD_SRG_HPP
#define MODPROD_SRG_HPP

#include <optional>
#include <string>
#include <vector>

#include "modprod/graph.hpp"
#include "modprod/metric.hpp"

namespace modprod {

// Why an edge belongs to a strong resolving graph. Advisory metadata: set
// equality against the MMD oracle is the correctness contract, a pair may
// satisfy several conditions.
enum class SrgReason {
  twin,
  dist2_nonboundary,
  dist3,
  cond_iv,
  cond_v,
  diam2_dist2,
  gamma_pair_box,
  co_box,
  direct_co_bar,
  co_bar_direct,
  mmd_oracle,
};

const char* to_string(SrgReason reason);

struct SrgEdge {
  int u, v;  // u < v
  SrgReason reason;
};

// Strong resolving graph over the full vertex set of its base graph
// (vertices on no maximal geodesic simply stay isolated; that never moves
// the vertex cover number).
struct SrgGraph {
  Graph skeleton;
  std::vector<SrgEdge> edges;
  std::string method;
  std::optional<bool> specialized_match;  // set by srg_dispatch when a
                                          // specialized builder was run
};

// Mutually-maximally-distant pairs, computed from the definition. Works per
// component; cross-component pairs never qualify.
std::vector<std::pair<int, int>> mmd_pairs(const Graph& g);

// SRG from the MMD definition. Connected input only.
SrgGraph srg_oracle(const Graph& g);

// SRG of an arbitrary diameter-two graph: distance-two pairs plus distinct
// twins.
SrgGraph srg_diam2_observation(const Graph& x);

// SRG of the modular product when it has diameter two, assembled from the
// factor data alone: twin pairs plus the three complement-product families.
SrgGraph srg_modular_diam2(const Graph& g, const Graph& h);

// SRG of the modular product when g carries a gamma pair and h has no
// universal vertex: twin pairs, the gamma-box family, and the three
// complement families restricted to the non-gamma vertices.
SrgGraph srg_modular_gamma_case(const Graph& g, const Graph& h);

// SRG of a diameter-three modular product via the five edge conditions.
SrgGraph srg_modular_diam3(const Graph& g, const Graph& h);

// Oracle-backed entry point: routes to the applicable specialized builder
// for reporting, but the returned edge set is always the oracle's.
SrgGraph srg_dispatch(const Graph& g, const Graph& h);

}  // namespace modprod

#endif
