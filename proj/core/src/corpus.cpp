#include "modprod/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "modprod/classify.hpp"
#include "modprod/families.hpp"
#include "modprod/metric.hpp"
#include "modprod/srg.hpp"
#include "modprod/structure.hpp"
#include "modprod/vertex_cover.hpp"

namespace modprod {

namespace {

std::uint64_t edge_bits(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t bits = 0;
  int k = 0;
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (g.adjacent(perm[i], perm[j])) bits |= std::uint64_t{1} << k;
  return bits;
}

std::uint64_t canonical_bits(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edge_bits(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int n) {
  const int slots = n * (n - 1) / 2;
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
    Graph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k)
        if ((mask >> k) & 1u) g.add_edge(i, j);
    if (seen.insert(canonical_bits(g)).second) out.push_back(std::move(g));
  }
  return out;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(edge_probability);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

std::vector<std::pair<Graph, Graph>> exhaustive_pairs(int max_order) {
  std::vector<Graph> all;
  for (int n = 1; n <= max_order; ++n)
    for (auto& g : all_graphs_up_to_iso(n)) all.push_back(std::move(g));
  std::vector<std::pair<Graph, Graph>> out;
  for (const auto& g : all)
    for (const auto& h : all) out.emplace_back(g, h);
  return out;
}

std::vector<std::pair<Graph, Graph>> random_pairs(int count, int max_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, max_order);
  std::uniform_real_distribution<double> prob(0.1, 0.9);
  std::vector<std::pair<Graph, Graph>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Graph g = random_graph(order(rng), prob(rng), rng);
    Graph h = random_graph(order(rng), prob(rng), rng);
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

std::vector<std::pair<Graph, Graph>> special_pairs() {
  using FS = FamilySpec;
  auto gen = [](const FS& s) { return generate(s); };
  std::vector<std::pair<Graph, Graph>> out;
  // diameter-two regime
  out.emplace_back(gen(FS::cycle(7)), gen(FS::cycle(7)));
  out.emplace_back(gen(FS::cycle(5)), gen(FS::cycle(5)));
  out.emplace_back(gen(FS::star(3)), gen(FS::star(2)));
  out.emplace_back(gen(FS::complement_of(FS::cycle(5))), gen(FS::complement_of(FS::cycle(5))));
  out.emplace_back(gen(FS::complement_of(FS::cycle(5))), gen(FS::complement_of(FS::cycle(6))));
  // gamma-pair regime
  out.emplace_back(gen(FS::path(5)), gen(FS::cycle(7)));
  out.emplace_back(gen(FS::path(5)), gen(FS::path(7)));
  out.emplace_back(gen(FS::knn_minus_m(3)), gen(FS::knn_minus_m(3)));
  out.emplace_back(gen(FS::knn_minus_m(3)), gen(FS::cycle(7)));
  out.emplace_back(gen(FS::knn_minus_m_blowup(3, {2, 1, 1}, {1, 1, 1})), gen(FS::knn_minus_m(3)));
  out.emplace_back(gen(FS::clique_union({2, 2})), gen(FS::path(4)));
  out.emplace_back(gen(FS::clique_union({1, 2})), gen(FS::path(5)));
  // universal-vertex regime
  out.emplace_back(gen(FS::star(3)), gen(FS::path(5)));
  out.emplace_back(gen(FS::star(3)), gen(FS::hstq(4, 4, 3)));
  out.emplace_back(gen(FS::star(2)), gen(FS::clique_union({2, 3})));
  out.emplace_back(gen(FS::star(2)), gen(FS::hstq(1, 2, 1)));
  out.emplace_back(gen(FS::star(4)), gen(FS::path(6)));
  // complete factors and edgeless factors
  out.emplace_back(gen(FS::path(4)), gen(FS::complete(3)));
  out.emplace_back(gen(FS::path(4)), gen(FS::complete(2)));
  out.emplace_back(gen(FS::empty(3)), gen(FS::empty(3)));
  out.emplace_back(gen(FS::empty(3)), gen(FS::empty(2)));
  out.emplace_back(gen(FS::empty(4)), gen(FS::path(4)));
  return out;
}

std::string graph_repr(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

std::string pair_repr(const Graph& g, const Graph& h) {
  return "G[" + graph_repr(g) + "] H[" + graph_repr(h) + "]";
}

void fail(SuiteResult& r, const std::string& msg) {
  if (r.failures.size() < 20) r.failures.push_back(msg);
}

}  // namespace

SuiteResult check_distance_formulas(const std::vector<std::pair<Graph, Graph>>& pairs) {
  SuiteResult res{"distance-formulas", 0, 0, {}};
  for (const auto& [g, h] : pairs) {
    ++res.pairs_checked;
    const PairCode code{h.order()};
    const int n = g.order() * h.order();
    const ModularMetric metric(g, h);
    const DistMatrix bfs = all_pairs_distances(build_product(ProductKind::modular, g, h));
    const bool general = !metric.g_class().is_complete && !metric.h_class().is_complete &&
                         !(metric.g_class().is_union_of_two_cliques &&
                           metric.h_class().is_union_of_two_cliques);
    for (int u = 0; u < n; ++u) {
      auto [g1, h1] = code.decode(u);
      for (int v = u; v < n; ++v) {
        auto [g2, h2] = code.decode(v);
        const int closed = metric.distance(g1, h1, g2, h2).value;
        const int ref = bfs.at(u, v);
        ++res.comparisons;
        if (closed != ref)
          fail(res, "modular distance mismatch at (" + std::to_string(g1) + "," +
                        std::to_string(h1) + ")x(" + std::to_string(g2) + "," +
                        std::to_string(h2) + "): closed=" + std::to_string(closed) +
                        " bfs=" + std::to_string(ref) + " " + pair_repr(g, h));
        if (general && u != v) {
          const bool d3 = metric.dist3(g1, h1, g2, h2);
          if (d3 != (ref == 3))
            fail(res, "dist3 predicate mismatch " + pair_repr(g, h));
        }
      }
    }
    if (metric.connected() != !is_inf(bfs.diameter()))
      fail(res, "connectivity predicate mismatch " + pair_repr(g, h));
    if (general && metric.diameter_two() != (bfs.diameter() == 2))
      fail(res, "diameter-two predicate mismatch " + pair_repr(g, h));

    const StandardMetric std_metric(g, h);
    for (ProductKind kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                             ProductKind::lexicographic}) {
      const DistMatrix ref = all_pairs_distances(build_product(kind, g, h));
      for (int u = 0; u < n; ++u) {
        auto [g1, h1] = code.decode(u);
        for (int v = u; v < n; ++v) {
          auto [g2, h2] = code.decode(v);
          ++res.comparisons;
          if (std_metric.distance(kind, g1, h1, g2, h2) != ref.at(u, v))
            fail(res, std::string("distance mismatch for ") + to_string(kind) + " " +
                          pair_repr(g, h));
        }
      }
    }
  }
  return res;
}

SuiteResult check_structure(const std::vector<std::pair<Graph, Graph>>& pairs) {
  SuiteResult res{"structure", 0, 0, {}};
  for (const auto& [g, h] : pairs) {
    ++res.pairs_checked;
    const PairCode code{h.order()};
    const Graph prod = build_product(ProductKind::modular, g, h);
    const int n = prod.order();

    ++res.comparisons;
    if (modular_connected(g, h) != is_connected(prod))
      fail(res, "connectivity predicate mismatch " + pair_repr(g, h));

    // twins of the product from the factors vs. neighborhood comparison
    for (int u = 0; u < n; ++u) {
      auto [g1, h1] = code.decode(u);
      for (int v = u + 1; v < n; ++v) {
        auto [g2, h2] = code.decode(v);
        ++res.comparisons;
        const bool predicted = modular_twin_predicate(g, h, {g1, h1}, {g2, h2});
        const bool actual = prod.closed_neighborhood(u) == prod.closed_neighborhood(v);
        if (predicted != actual) {
          fail(res, "twin predicate mismatch " + pair_repr(g, h));
          break;
        }
        if (g.order() >= 2 && h.order() >= 2 &&
            prod.open_neighborhood(u) == prod.open_neighborhood(v))
          fail(res, "distinct false twins in a product " + pair_repr(g, h));
      }
    }

    // gamma identity: N[a] is the complement of N[b] for every pair
    for (const Graph* f : {&g, &h}) {
      for (auto [a, b] : gamma_pairs(*f).pairs) {
        Bitset na = f->closed_neighborhood(a);
        na.flip_all();
        ++res.comparisons;
        if (na != f->closed_neighborhood(b))
          fail(res, "gamma identity failed on " + graph_repr(*f));
      }
      const TwinOrdering ord = twin_ordering(*f);
      if (std::accumulate(ord.sizes.begin(), ord.sizes.end(), 0) != f->order())
        fail(res, "twin ordering sizes do not cover " + graph_repr(*f));
    }
  }
  return res;
}

namespace {

std::vector<std::pair<int, int>> edge_pairs(const SrgGraph& srg) {
  std::vector<std::pair<int, int>> out;
  out.reserve(srg.edges.size());
  for (const auto& e : srg.edges) out.emplace_back(e.u, e.v);
  std::sort(out.begin(), out.end());
  return out;
}

void compare_builders(SuiteResult& res, const SrgGraph& built, const SrgGraph& oracle,
                      const std::string& what, const std::string& pair_desc) {
  ++res.comparisons;
  const auto a = edge_pairs(built);
  const auto b = edge_pairs(oracle);
  if (a == b) return;
  std::ostringstream os;
  os << what << " disagrees with the oracle on " << pair_desc << ";";
  std::vector<std::pair<int, int>> extra, missing;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(missing));
  os << " extra=" << extra.size() << " missing=" << missing.size();
  if (!extra.empty()) os << " first-extra=" << extra[0].first << "-" << extra[0].second;
  if (!missing.empty()) os << " first-missing=" << missing[0].first << "-" << missing[0].second;
  fail(res, os.str());
}

}  // namespace

SuiteResult check_srg_builders(const std::vector<std::pair<Graph, Graph>>& pairs) {
  SuiteResult res{"srg-builders", 0, 0, {}};
  for (const auto& [g, h] : pairs) {
    const ModularMetric m(g, h);
    if (!m.connected()) continue;
    ++res.pairs_checked;
    const std::string desc = pair_repr(g, h);
    const Graph prod = build_product(ProductKind::modular, g, h);
    const SrgGraph oracle = srg_oracle(prod);

    // twin edges are exactly the product edges kept by the SRG
    {
      const auto oracle_edges = edge_pairs(oracle);
      const std::set<std::pair<int, int>> srg_edges(oracle_edges.begin(), oracle_edges.end());
      for (auto [u, v] : prod.edges()) {
        const bool twins = prod.closed_neighborhood(u) == prod.closed_neighborhood(v);
        ++res.comparisons;
        if (twins != (srg_edges.count({u, v}) > 0)) {
          fail(res, "twin-edge characterization failed on " + desc);
          break;
        }
      }
    }

    if (m.g_class().is_complete || m.h_class().is_complete) continue;
    if (m.g_class().is_union_of_two_cliques && m.h_class().is_union_of_two_cliques) continue;

    if (m.diameter_two()) {
      compare_builders(res, srg_modular_diam2(g, h), oracle, "diam2 builder", desc);
    } else {
      compare_builders(res, srg_modular_diam3(g, h), oracle, "diam3 builder", desc);
    }
    if (!m.g_gamma().pairs.empty() && m.h_class().universal_vertices.empty())
      compare_builders(res, srg_modular_gamma_case(g, h), oracle, "gamma builder", desc);

    const SrgGraph dispatched = srg_dispatch(g, h);
    compare_builders(res, dispatched, oracle, "dispatch", desc);
    if (dispatched.specialized_match && !*dispatched.specialized_match)
      fail(res, "dispatch flagged a specialized mismatch on " + desc);
  }
  return res;
}

SuiteResult check_solver(int count, int max_order, std::uint64_t seed) {
  SuiteResult res{"solver-audit", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, max_order);
  std::uniform_real_distribution<double> prob(0.05, 0.95);
  for (int i = 0; i < count; ++i) {
    const Graph g = random_graph(order(rng), prob(rng), rng);
    ++res.pairs_checked;
    const CoverResult got = min_vertex_cover(g);
    const int expected = brute_force_vc(g);
    ++res.comparisons;
    if (!got.optimal || got.size != expected) {
      fail(res, "cover size mismatch: solver=" + std::to_string(got.size) +
                    " brute=" + std::to_string(expected) + " on " + graph_repr(g));
      continue;
    }
    Bitset in_witness(g.order());
    for (int v : got.witness) in_witness.set(v);
    for (auto [u, v] : g.edges())
      if (!in_witness.test(u) && !in_witness.test(v))
        fail(res, "witness misses an edge on " + graph_repr(g));
    if (got.size + brute_force_mis(g) != g.order())
      fail(res, "cover/independence identity failed on " + graph_repr(g));
    const CoverResult again = min_vertex_cover(g);
    if (again.size != got.size || again.witness != got.witness)
      fail(res, "nondeterministic result on " + graph_repr(g));
  }
  return res;
}

}  // namespace modprod
