#ifndef MODPROD_EDGELIST_HPP
#define MODPROD_EDGELIST_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "modprod/graph.hpp"

namespace modprod {

// Malformed edge-list input; carries the 1-based line number.
struct edgelist_error : std::runtime_error {
  edgelist_error(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  int line;
};

// Text interchange format:
//   first data line "n m", then m lines "u v" with 0 <= u < v < n.
// Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace modprod

#endif
