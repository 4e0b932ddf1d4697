#include "modprod/edgelist.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace modprod {

namespace {

bool skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  int m_expected = 0, m_seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ls(line);
    if (!g) {
      int n = 0, m = 0;
      if (!(ls >> n >> m)) throw edgelist_error(line_no, "expected header \"n m\"");
      if (n < 1) throw edgelist_error(line_no, "graph order must be at least 1");
      if (m < 0) throw edgelist_error(line_no, "negative edge count");
      std::string rest;
      if (ls >> rest) throw edgelist_error(line_no, "trailing tokens after header");
      g.emplace(n);
      m_expected = m;
      continue;
    }
    int u = 0, v = 0;
    if (!(ls >> u >> v)) throw edgelist_error(line_no, "expected edge \"u v\"");
    std::string rest;
    if (ls >> rest) throw edgelist_error(line_no, "trailing tokens after edge");
    if (m_seen >= m_expected) throw edgelist_error(line_no, "more edges than declared");
    if (u < 0 || v >= g->order() || u >= v)
      throw edgelist_error(line_no, "edge must satisfy 0 <= u < v < n");
    if (g->adjacent(u, v)) throw edgelist_error(line_no, "duplicate edge");
    g->add_edge(u, v);
    ++m_seen;
  }
  if (!g) throw edgelist_error(line_no, "missing header \"n m\"");
  if (m_seen != m_expected)
    throw edgelist_error(line_no, "declared " + std::to_string(m_expected) + " edges, found " +
                                      std::to_string(m_seen));
  return *g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_edge_list(out, g);
}

}  // namespace modprod
