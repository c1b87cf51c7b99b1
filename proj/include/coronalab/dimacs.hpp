#pragma once

#include <iosfwd>
#include <string>

#include "coronalab/graph.hpp"

namespace coronalab {

// DIMACS "p edge" text: `c` comment lines, one `p edge <n> <m>` header, then
// exactly m `e <u> <v>` lines with 1-based ids. Blank lines are ignored.

/// Throws ParseError carrying the offending line number.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

/// Writes edges with u < v in lexicographic order.
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::string& path, const Graph& g);

}  // namespace coronalab
