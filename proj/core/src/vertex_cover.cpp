#include "modprod/vertex_cover.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "modprod/metric.hpp"
#include "modprod/srg.hpp"

namespace modprod {

namespace {

using Clock = std::chrono::steady_clock;

// Branch and bound for maximum independent set with a greedy clique-cover
// bound. Strong resolving graphs of modular products are near-unions of
// cliques, where the cover bound closes at or near the root.
struct MisSolver {
  int n = 0;
  std::vector<Bitset> adj;
  std::vector<int> cur;
  std::vector<int> best;
  std::uint64_t nodes = 0;
  Clock::time_point deadline;
  bool aborted = false;

  explicit MisSolver(const Graph& g) : n(g.order()) {
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.open_neighborhood(v));
  }

  int degree_in(const Bitset& p, int v) const { return (adj[v] & p).count(); }

  // Number of cliques in a greedy partition of g[p]; an upper bound on the
  // independence number of g[p].
  int clique_cover(const Bitset& p) const {
    std::vector<Bitset> common;
    for (int v = p.find_first(); v >= 0; v = p.find_next(v + 1)) {
      bool placed = false;
      for (auto& c : common) {
        if (c.test(v)) {
          c &= adj[v];
          placed = true;
          break;
        }
      }
      if (!placed) common.push_back(adj[v]);
    }
    return static_cast<int>(common.size());
  }

  void expand(Bitset p) {
    if (aborted) return;
    if ((++nodes & 255u) == 0 && Clock::now() > deadline) {
      aborted = true;
      return;
    }

    // Cheap local reductions: vertices isolated in g[p] always join, a
    // pendant vertex joins instead of its neighbor.
    std::size_t taken = cur.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = p.find_first(); v >= 0; v = p.find_next(v + 1)) {
        Bitset nb = adj[v] & p;
        const int d = nb.count();
        if (d == 0) {
          cur.push_back(v);
          p.reset(v);
          changed = true;
        } else if (d == 1) {
          cur.push_back(v);
          p.reset(v);
          p.reset(nb.find_first());
          changed = true;
        }
      }
    }

    if (p.none()) {
      if (cur.size() > best.size()) best = cur;
    } else if (cur.size() + clique_cover(p) > best.size()) {
      // branch on the highest-degree candidate, ties by smallest id
      int pick = -1, pick_deg = -1;
      for (int v = p.find_first(); v >= 0; v = p.find_next(v + 1)) {
        const int d = degree_in(p, v);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      Bitset in = p;
      in.reset(pick);
      in.subtract(adj[pick]);
      cur.push_back(pick);
      expand(in);
      cur.pop_back();
      if (!aborted) {
        Bitset out = p;
        out.reset(pick);
        expand(out);
      }
    }

    cur.resize(taken);
  }

  void seed(const Bitset& p) {
    std::vector<int> greedy;
    Bitset free = p;
    while (free.any()) {
      int pick = -1, pick_deg = n + 1;
      for (int v = free.find_first(); v >= 0; v = free.find_next(v + 1)) {
        const int d = degree_in(free, v);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      greedy.push_back(pick);
      free.reset(pick);
      free.subtract(adj[pick]);
    }
    best = std::move(greedy);
  }
};

std::vector<int> non_isolated(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

// Gosper's hack: next integer with the same popcount.
std::uint32_t next_same_popcount(std::uint32_t x) {
  std::uint32_t c = x & -x, r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

struct BruteKernel {
  int k = 0;
  std::vector<std::uint32_t> mask;

  explicit BruteKernel(const Graph& g) {
    const auto verts = non_isolated(g);
    k = static_cast<int>(verts.size());
    if (k > 26)
      throw std::invalid_argument("brute force guard: more than 26 non-isolated vertices");
    mask.assign(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && g.adjacent(verts[i], verts[j])) mask[i] |= std::uint32_t{1} << j;
  }

  bool is_cover(std::uint32_t s) const {
    for (int v = 0; v < k; ++v)
      if (!((s >> v) & 1u) && (mask[v] & ~s)) return false;
    return true;
  }
  bool is_independent(std::uint32_t s) const {
    for (int v = 0; v < k; ++v)
      if (((s >> v) & 1u) && (mask[v] & s)) return false;
    return true;
  }

  // Enumerate subsets of size j; true if pred holds for some subset.
  template <typename Pred>
  bool exists_of_size(int j, Pred&& pred) const {
    if (j == 0) return pred(0u);
    if (j > k) return false;
    const std::uint32_t limit = std::uint32_t{1} << k;
    for (std::uint32_t s = (std::uint32_t{1} << j) - 1; s < limit; s = next_same_popcount(s))
      if (pred(s)) return true;
    return false;
  }
};

}  // namespace

CoverResult min_vertex_cover(const Graph& g, double budget_seconds) {
  const auto t0 = Clock::now();
  CoverResult res;

  const auto verts = non_isolated(g);
  Graph kernel = induced_subgraph(g, verts);
  const int k = kernel.order();

  // Dominated-vertex reduction: for an edge uv with N[u] subseteq N[v] some
  // maximum independent set avoids v, so v can be deleted up front.
  Bitset active(std::max(k, 1));
  active.set_first(k);
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = active.find_first(); u >= 0; u = active.find_next(u + 1)) {
      Bitset nu = kernel.closed_neighborhood(u);
      nu &= active;
      Bitset candidates = kernel.open_neighborhood(u);
      candidates &= active;
      for (int v = candidates.find_first(); v >= 0; v = candidates.find_next(v + 1)) {
        Bitset nv = kernel.closed_neighborhood(v);
        nv &= active;
        if (nu.is_subset_of(nv)) {
          active.reset(v);
          changed = true;
        }
      }
    }
  }

  MisSolver solver(kernel);
  solver.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget_seconds));
  Bitset p = active;
  solver.seed(p);
  solver.expand(p);

  Bitset in_mis(std::max(k, 1));
  for (int v : solver.best) in_mis.set(v);
  for (int i = 0; i < k; ++i)
    if (!in_mis.test(i)) res.witness.push_back(verts[i]);

  res.size = static_cast<int>(res.witness.size());
  res.nodes_explored = solver.nodes;
  res.optimal = !solver.aborted;
  res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

CoverResult min_vertex_cover_canonical(const Graph& g, double budget_seconds) {
  const auto t0 = Clock::now();
  CoverResult base = min_vertex_cover(g, budget_seconds);
  if (!base.optimal) return base;

  // Commit vertices in ascending order whenever a minimum cover of the
  // remaining edges still fits the budgeted size.
  const int n = g.order();
  Graph rest = g;
  int k = base.size;
  CoverResult res;
  res.nodes_explored = base.nodes_explored;
  for (int v = 0; v < n && k > 0; ++v) {
    if (rest.degree(v) == 0) continue;
    Graph without(n);
    for (auto [a, b] : rest.edges())
      if (a != v && b != v) without.add_edge(a, b);
    CoverResult sub = min_vertex_cover(without, budget_seconds);
    res.nodes_explored += sub.nodes_explored;
    if (!sub.optimal) {
      base.optimal = false;
      return base;
    }
    if (sub.size == k - 1) {
      res.witness.push_back(v);
      rest = std::move(without);
      --k;
    }
  }
  res.size = static_cast<int>(res.witness.size());
  res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

int brute_force_vc(const Graph& g) {
  const BruteKernel bk(g);
  for (int j = 0; j <= bk.k; ++j) {
    if (bk.exists_of_size(j, [&](std::uint32_t s) { return bk.is_cover(s); })) return j;
    if (!bk.exists_of_size(j, [&](std::uint32_t s) { return bk.is_independent(s); }))
      return bk.k - (j - 1);
  }
  return bk.k;
}

int brute_force_mis(const Graph& g) {
  const BruteKernel bk(g);
  const int isolated = g.order() - bk.k;
  int alpha = 0;
  for (int j = 1; j <= bk.k; ++j) {
    if (!bk.exists_of_size(j, [&](std::uint32_t s) { return bk.is_independent(s); })) break;
    alpha = j;
  }
  return alpha + isolated;
}

int strong_metric_dimension(const Graph& g) {
  CoverResult r = min_vertex_cover(srg_oracle(g).skeleton);
  if (!r.optimal) throw std::runtime_error("strong_metric_dimension: solver budget exhausted");
  return r.size;
}

CoverResult strong_metric_dimension_modular(const Graph& g, const Graph& h,
                                            double budget_seconds) {
  ModularMetric m(g, h);
  if (!m.connected())
    throw precondition_error("strong_metric_dimension_modular requires a connected product");
  const bool gc = m.g_class().is_complete, hc = m.h_class().is_complete;
  if (gc != hc) {
    // one complete factor: (t-1)*n + dim_s of the non-complete factor
    const Graph& other = gc ? h : g;
    const int t = gc ? g.order() : h.order();
    const auto t0 = Clock::now();
    CoverResult res;
    res.size = (t - 1) * other.order() + strong_metric_dimension(other);
    res.has_witness = false;
    res.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
  }
  return min_vertex_cover(srg_dispatch(g, h).skeleton, budget_seconds);
}

}  // namespace modprod
