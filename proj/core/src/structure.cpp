#include "modprod/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modprod/dist.hpp"

namespace modprod {

TwinPartition twin_classes(const Graph& g, TwinKind kind) {
  const int n = g.order();
  TwinPartition part{kind, {}, std::vector<int>(n, -1)};
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int v = 0; v < n; ++v) {
    Bitset row = kind == TwinKind::closed ? g.closed_neighborhood(v) : g.open_neighborhood(v);
    auto [it, fresh] = seen.try_emplace(row.words(), static_cast<int>(part.classes.size()));
    if (fresh) part.classes.emplace_back();
    part.classes[it->second].push_back(v);
    part.class_of[v] = it->second;
  }
  // map iteration order is by row content; reorder by smallest member
  std::sort(part.classes.begin(), part.classes.end());
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (int v : part.classes[c]) part.class_of[v] = static_cast<int>(c);
  return part;
}

GammaPairSet gamma_pairs(const Graph& g) {
  const int n = g.order();
  GammaPairSet out;
  out.members = Bitset(n);
  out.partner.assign(n, Bitset(n));
  for (int u = 0; u < n; ++u) {
    Bitset nu = g.closed_neighborhood(u);
    for (int v = u + 1; v < n; ++v) {
      Bitset nv = g.closed_neighborhood(v);
      if (nu.intersects(nv)) continue;
      if ((nu | nv).count() != n) continue;
      out.pairs.emplace_back(u, v);
      out.members.set(u);
      out.members.set(v);
      out.partner[u].set(v);
      out.partner[v].set(u);
    }
  }
  return out;
}

Graph gp_graph(const Graph& g) {
  Graph out(g.order());
  for (auto [u, v] : gamma_pairs(g).pairs) out.add_edge(u, v);
  return out;
}

std::vector<int> p_set(const Graph& g) { return gamma_pairs(g).members.to_vector(); }

MinusGraphs minus_graphs(const Graph& g) {
  Bitset p = gamma_pairs(g).members;
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!p.test(v)) keep.push_back(v);
  return MinusGraphs{induced_subgraph(g, keep), induced_subgraph(complement(g), keep), keep};
}

TwinOrdering twin_ordering(const Graph& h) {
  const TwinPartition part = twin_classes(h, TwinKind::closed);
  const GammaPairSet gp = gamma_pairs(h);
  const int nclasses = static_cast<int>(part.classes.size());

  // Gamma partners of twins are twins again, so pairing respects classes and
  // must form a matching between them; verified here rather than assumed.
  std::vector<int> mate(nclasses, -1);
  for (auto [u, v] : gp.pairs) {
    const int cu = part.class_of[u], cv = part.class_of[v];
    if (cu == cv) throw std::logic_error("gamma pair inside one twin class");
    if ((mate[cu] != -1 && mate[cu] != cv) || (mate[cv] != -1 && mate[cv] != cu))
      throw std::logic_error("twin class gamma-paired with two distinct classes");
    mate[cu] = cv;
    mate[cv] = cu;
  }

  TwinOrdering out;
  std::vector<bool> done(nclasses, false);
  for (int c = 0; c < nclasses; ++c) {
    if (done[c]) continue;
    done[c] = true;
    std::vector<int> block = part.classes[c];
    if (mate[c] == -1) {
      ++out.unpaired_classes;
    } else {
      done[mate[c]] = true;
      const auto& other = part.classes[mate[c]];
      block.insert(block.end(), other.begin(), other.end());
      std::sort(block.begin(), block.end());
    }
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  for (const auto& b : out.blocks) out.sizes.push_back(static_cast<int>(b.size()));
  out.block_count = static_cast<int>(out.blocks.size());
  return out;
}

bool modular_twin_predicate(const Graph& g, const Graph& h, std::pair<int, int> a,
                            std::pair<int, int> b) {
  const auto [g1, h1] = a;
  const auto [g2, h2] = b;
  const bool g_twins = g.closed_neighborhood(g1) == g.closed_neighborhood(g2);
  const bool h_twins = h.closed_neighborhood(h1) == h.closed_neighborhood(h2);
  if (g_twins && h_twins) return true;
  return gamma_pairs(g).is_pair(g1, g2) && gamma_pairs(h).is_pair(h1, h2);
}

std::vector<int> boundary_vertices(const Graph& g) {
  DistMatrix dm = all_pairs_distances(g);
  if (is_inf(dm.diameter()))
    throw std::invalid_argument("boundary_vertices requires a connected graph");
  const int diam = dm.diameter();
  std::vector<int> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (dm.at(u, v) == diam) {
        out.push_back(u);
        break;
      }
    }
  }
  return out;
}

}  // namespace modprod
