#include "modprod/srg.hpp"

#include <algorithm>

#include "modprod/classify.hpp"

namespace modprod {

const char* to_string(SrgReason reason) {
  switch (reason) {
    case SrgReason::twin: return "Twin";
    case SrgReason::dist2_nonboundary: return "Dist2NonBoundary";
    case SrgReason::dist3: return "Dist3";
    case SrgReason::cond_iv: return "CondIV";
    case SrgReason::cond_v: return "CondV";
    case SrgReason::diam2_dist2: return "Diam2Dist2";
    case SrgReason::gamma_pair_box: return "GammaPairBox";
    case SrgReason::co_box: return "CoBox";
    case SrgReason::direct_co_bar: return "DirectCoBar";
    case SrgReason::co_bar_direct: return "CoBarDirect";
    case SrgReason::mmd_oracle: return "MmdOracle";
  }
  return "?";
}

namespace {

SrgGraph make_srg(int n, std::vector<SrgEdge> edges, std::string method) {
  SrgGraph out{Graph(n), std::move(edges), std::move(method), std::nullopt};
  for (const auto& e : out.edges) out.skeleton.add_edge(e.u, e.v);
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> mmd_pairs(const Graph& g) {
  const int n = g.order();
  const DistMatrix dm = all_pairs_distances(g);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = dm.at(u, v);
      if (is_inf(d)) continue;
      bool mmd = true;
      const Bitset& nu = g.open_neighborhood(u);
      for (int w = nu.find_first(); mmd && w >= 0; w = nu.find_next(w + 1))
        if (dm.at(w, v) > d) mmd = false;
      const Bitset& nv = g.open_neighborhood(v);
      for (int w = nv.find_first(); mmd && w >= 0; w = nv.find_next(w + 1))
        if (dm.at(w, u) > d) mmd = false;
      if (mmd) out.emplace_back(u, v);
    }
  }
  return out;
}

SrgGraph srg_oracle(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("srg_oracle requires a connected graph");
  std::vector<SrgEdge> edges;
  for (auto [u, v] : mmd_pairs(g)) edges.push_back({u, v, SrgReason::mmd_oracle});
  return make_srg(g.order(), std::move(edges), "oracle");
}

SrgGraph srg_diam2_observation(const Graph& x) {
  const DistMatrix dm = all_pairs_distances(x);
  if (dm.diameter() != 2)
    throw precondition_error("srg_diam2_observation requires diameter two");
  std::vector<SrgEdge> edges;
  for (int u = 0; u < x.order(); ++u) {
    for (int v = u + 1; v < x.order(); ++v) {
      if (dm.at(u, v) == 2)
        edges.push_back({u, v, SrgReason::diam2_dist2});
      else if (x.closed_neighborhood(u) == x.closed_neighborhood(v))
        edges.push_back({u, v, SrgReason::twin});
    }
  }
  return make_srg(x.order(), std::move(edges), "diam2-observation");
}

namespace {

// Shared pair scan over the product vertex set; emit() returns the first
// matching reason or nullopt.
template <typename F>
SrgGraph scan_pairs(const ModularMetric& m, std::string method, F&& emit) {
  const PairCode code{m.h().order()};
  const int n = m.g().order() * m.h().order();
  std::vector<SrgEdge> edges;
  for (int u = 0; u < n; ++u) {
    auto [g1, h1] = code.decode(u);
    for (int v = u + 1; v < n; ++v) {
      auto [g2, h2] = code.decode(v);
      if (auto reason = emit(g1, h1, g2, h2)) edges.push_back({u, v, *reason});
    }
  }
  return make_srg(n, std::move(edges), std::move(method));
}

bool product_twins(const ModularMetric& m, int g1, int h1, int g2, int h2) {
  if (m.g_nbhd_equal(g1, g2) && m.h_nbhd_equal(h1, h2)) return true;
  return m.g_gamma().is_pair(g1, g2) && m.h_gamma().is_pair(h1, h2);
}

// Complement-of-product families; disjoint from each other and from twin
// edges (twins are adjacent in the product, these pairs are not).
std::optional<SrgReason> complement_family(const ModularMetric& m, int g1, int h1, int g2,
                                           int h2) {
  const bool ge = g1 == g2, he = h1 == h2;
  const bool ga = !ge && m.g().adjacent(g1, g2), ha = !he && m.h().adjacent(h1, h2);
  if ((ge && !he && !ha) || (he && !ge && !ga)) return SrgReason::co_box;
  if (!ge && !he && ga && !ha) return SrgReason::direct_co_bar;
  if (!ge && !he && !ga && ha) return SrgReason::co_bar_direct;
  return std::nullopt;
}

}  // namespace

SrgGraph srg_modular_diam2(const Graph& g, const Graph& h) {
  ModularMetric m(g, h);
  if (!m.diameter_two())
    throw precondition_error("srg_modular_diam2 requires a diameter-two product");
  return scan_pairs(m, "diam2", [&](int g1, int h1, int g2, int h2) -> std::optional<SrgReason> {
    if (product_twins(m, g1, h1, g2, h2)) return SrgReason::twin;
    return complement_family(m, g1, h1, g2, h2);
  });
}

SrgGraph srg_modular_gamma_case(const Graph& g, const Graph& h) {
  ModularMetric m(g, h);
  m.require_general_regime("srg_modular_gamma_case");
  if (m.g_gamma().pairs.empty())
    throw precondition_error("srg_modular_gamma_case requires a gamma pair in the first factor");
  if (!m.h_class().universal_vertices.empty())
    throw precondition_error(
        "srg_modular_gamma_case requires the second factor to have no universal vertex");
  if (!m.connected()) throw precondition_error("srg_modular_gamma_case requires a connected product");
  return scan_pairs(m, "gamma", [&](int g1, int h1, int g2, int h2) -> std::optional<SrgReason> {
    if (product_twins(m, g1, h1, g2, h2)) return SrgReason::twin;
    // Distance-three pairs: a gamma pair in one coordinate against equal
    // closed neighborhoods in the other. With distinct twins around, this is
    // strictly wider than the box product of the gamma-pair graphs.
    if ((m.g_nbhd_equal(g1, g2) && m.h_gamma().is_pair(h1, h2)) ||
        (m.g_gamma().is_pair(g1, g2) && m.h_nbhd_equal(h1, h2)))
      return SrgReason::gamma_pair_box;
    // Distance-two pairs among non-boundary vertices: the complement
    // families restricted to vertices outside every gamma pair.
    if (m.g_gamma().in_some_pair(g1) || m.g_gamma().in_some_pair(g2) ||
        m.h_gamma().in_some_pair(h1) || m.h_gamma().in_some_pair(h2))
      return std::nullopt;
    return complement_family(m, g1, h1, g2, h2);
  });
}

SrgGraph srg_modular_diam3(const Graph& g, const Graph& h) {
  ModularMetric m(g, h);
  if (m.diameter_two())
    throw precondition_error("srg_modular_diam3 requires a diameter-three product");

  const PairCode code{h.order()};
  const int n = g.order() * h.order();

  // Distance table of the product from the closed form; boundary vertices
  // are the endpoints of distance-three pairs.
  std::vector<int> dist(static_cast<std::size_t>(n) * n, 0);
  std::vector<bool> boundary(n, false);
  for (int u = 0; u < n; ++u) {
    auto [g1, h1] = code.decode(u);
    for (int v = u + 1; v < n; ++v) {
      auto [g2, h2] = code.decode(v);
      const int d = m.distance(g1, h1, g2, h2).value;
      dist[static_cast<std::size_t>(u) * n + v] = d;
      dist[static_cast<std::size_t>(v) * n + u] = d;
      if (d == 3) boundary[u] = boundary[v] = true;
    }
  }

  const auto mmd_g = mmd_pairs(g);
  const auto mmd_h = mmd_pairs(h);
  const auto is_mmd = [](const std::vector<std::pair<int, int>>& pairs, int a, int b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  };

  // (v) with the universal vertex on the g side, first vertex (g1,h1).
  const auto cond_v_g = [&](int g1, int h1, int g2, int h2) {
    if (!m.g_universal(g1) || m.g_universal(g2)) return false;
    if (m.h_dist().at(h1, h2) != 2) return false;
    if (m.h_gamma().in_some_pair(h2)) return false;
    Bitset nb = m.h().closed_neighborhood(h2);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w + 1))
      if (m.h_dist().at(h1, w) > 2) return false;
    return true;
  };
  const auto cond_v_h = [&](int g1, int h1, int g2, int h2) {
    if (!m.h_universal(h1) || m.h_universal(h2)) return false;
    if (m.g_dist().at(g1, g2) != 2) return false;
    if (m.g_gamma().in_some_pair(g2)) return false;
    Bitset nb = m.g().closed_neighborhood(g2);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w + 1))
      if (m.g_dist().at(g1, w) > 2) return false;
    return true;
  };

  return scan_pairs(m, "diam3", [&](int g1, int h1, int g2, int h2) -> std::optional<SrgReason> {
    const int u = code.encode(g1, h1), v = code.encode(g2, h2);
    const int d = dist[static_cast<std::size_t>(u) * n + v];
    if (product_twins(m, g1, h1, g2, h2)) return SrgReason::twin;
    if (d == 3) return SrgReason::dist3;
    if (d == 2 && !boundary[u] && !boundary[v]) return SrgReason::dist2_nonboundary;
    if ((m.g_universal(g1) && m.g_universal(g2) && m.h_dist().at(h1, h2) == 2 &&
         is_mmd(mmd_h, h1, h2)) ||
        (m.h_universal(h1) && m.h_universal(h2) && m.g_dist().at(g1, g2) == 2 &&
         is_mmd(mmd_g, g1, g2)))
      return SrgReason::cond_iv;
    if (cond_v_g(g1, h1, g2, h2) || cond_v_g(g2, h2, g1, h1) || cond_v_h(g1, h1, g2, h2) ||
        cond_v_h(g2, h2, g1, h1))
      return SrgReason::cond_v;
    return std::nullopt;
  });
}

namespace {

// Relabel an SRG built in h-major coordinates back into g-major ones.
SrgGraph swap_coordinates(const SrgGraph& srg, int ng, int nh) {
  const PairCode hg{ng};  // source encoding: (h,g) with g minor
  const PairCode gh{nh};
  std::vector<SrgEdge> edges;
  edges.reserve(srg.edges.size());
  for (const auto& e : srg.edges) {
    auto [hu, gu] = hg.decode(e.u);
    auto [hv, gv] = hg.decode(e.v);
    int u = gh.encode(gu, hu), v = gh.encode(gv, hv);
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, e.reason});
  }
  std::sort(edges.begin(), edges.end(),
            [](const SrgEdge& a, const SrgEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return make_srg(ng * nh, std::move(edges), srg.method);
}

}  // namespace

SrgGraph srg_dispatch(const Graph& g, const Graph& h) {
  ModularMetric m(g, h);
  if (!m.connected()) throw precondition_error("srg_dispatch requires a connected product");

  SrgGraph oracle = srg_oracle(build_product(ProductKind::modular, g, h));

  std::optional<SrgGraph> specialized;
  std::string route = "oracle";
  if (!m.g_class().is_complete && !m.h_class().is_complete) {
    if (m.diameter_two()) {
      route = "diam2";
      specialized = srg_modular_diam2(g, h);
    } else if (!m.g_gamma().pairs.empty() && m.h_class().universal_vertices.empty()) {
      route = "gamma";
      specialized = srg_modular_gamma_case(g, h);
    } else if (!m.h_gamma().pairs.empty() && m.g_class().universal_vertices.empty()) {
      route = "gamma";
      specialized = swap_coordinates(srg_modular_gamma_case(h, g), g.order(), h.order());
    } else {
      route = "diam3";
      specialized = srg_modular_diam3(g, h);
    }
  }

  if (!specialized) {
    oracle.method = route;
    return oracle;
  }
  const bool match = specialized->skeleton == oracle.skeleton;
  // The returned edge set is always the oracle's; when the specialized
  // builder agrees we keep its per-edge reasons.
  SrgGraph out = match ? std::move(*specialized) : std::move(oracle);
  out.method = route;
  out.specialized_match = match;
  return out;
}

}  // namespace modprod
