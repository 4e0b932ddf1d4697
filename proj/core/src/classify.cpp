#include "modprod/classify.hpp"

#include <algorithm>

namespace modprod {

std::vector<int> component_labels(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const Bitset& nb = g.open_neighborhood(v);
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w + 1)) {
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto label = component_labels(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

GraphClass classify(const Graph& g) {
  const int n = g.order();
  GraphClass c;
  c.is_complete = g.edge_count() == n * (n - 1) / 2;
  c.is_edgeless = g.edge_count() == 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) c.universal_vertices.push_back(v);
    if (g.degree(v) == 0) c.isolated_vertices.push_back(v);
  }
  auto label = component_labels(g);
  const int comps = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  c.is_connected = comps <= 1;
  c.diameter = all_pairs_distances(g).diameter();
  if (comps == 2) {
    std::vector<int> size(2, 0), inner(2, 0);
    for (int v = 0; v < n; ++v) ++size[label[v]];
    for (auto [u, v] : g.edges())
      if (label[u] == label[v]) ++inner[label[u]];
    c.is_union_of_two_cliques = inner[0] == size[0] * (size[0] - 1) / 2 &&
                                inner[1] == size[1] * (size[1] - 1) / 2;
  }
  return c;
}

}  // namespace modprod
