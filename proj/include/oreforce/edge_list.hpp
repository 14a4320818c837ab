#ifndef OREFORCE_EDGE_LIST_HPP
#define OREFORCE_EDGE_LIST_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "oreforce/graph.hpp"

namespace oreforce {

// Edge-list text format:
//
//   # comment
//   n
//   u v
//   ...
//
// Blank lines and lines starting with '#' are skipped. Labels must lie in
// 0..n-1; duplicate edges are merged; self-loops are rejected. Every failure
// throws ParseError with a 1-based line number in the message.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Reads from a file path, or from std::cin when the path is "-".
Graph read_edge_list(const std::string& path);

// Header line followed by the edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace oreforce

#endif  // OREFORCE_EDGE_LIST_HPP
