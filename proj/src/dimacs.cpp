#include "coronalab/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "coronalab/errors.hpp"

namespace coronalab {
namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t number(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (tok.size() != 4 || tok[1] != "edge")
        throw ParseError(line_no, "header must read 'p edge <n> <m>'");
      n = number(tok[2], line_no);
      m = number(tok[3], line_no);
      have_header = true;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before 'p edge' header");
      if (tok.size() != 3) throw ParseError(line_no, "edge line must read 'e <u> <v>'");
      const std::size_t u = number(tok[1], line_no);
      const std::size_t v = number(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      if (edges.size() == m)
        throw ParseError(line_no, "more edge lines than the header's " + std::to_string(m));
      edges.emplace_back(Vertex(u - 1), Vertex(v - 1));
      continue;
    }
    throw ParseError(line_no, "unrecognised line type '" + tok[0] + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge' header");
  if (edges.size() != m)
    throw ParseError(line_no, "header announces " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  return Graph::from_edges(n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_dimacs(out, g);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace coronalab
