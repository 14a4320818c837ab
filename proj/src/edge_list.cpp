#include "oreforce/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "oreforce/errors.hpp"

namespace oreforce {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_label(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 1)
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count");
      n = parse_label(toks[0], line_no);
      if (n == 0) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive");
      have_header = true;
      continue;
    }

    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    std::size_t u = parse_label(toks[0], line_no);
    std::size_t v = parse_label(toks[1], line_no);
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex label out of range 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError("missing vertex count");
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace oreforce
