#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coronalab/graph.hpp"
#include "coronalab/harness.hpp"

namespace support {

using coronalab::Graph;
using coronalab::NamedGraph;

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t s, std::size_t t);
Graph corona_graph(const Graph& g, const Graph& h);

/// Every G and H of the default families plus every corona G⊙H, keeping
/// those of order at most `max_order`. Names are unique.
std::vector<NamedGraph> default_family_graphs(std::size_t max_order, std::uint64_t seed = 7);

/// Compares every solver with the brute-force oracle on g. Returns one line
/// per disagreement. Partition solvers are compared up to order 8.
std::vector<std::string> oracle_mismatches(const NamedGraph& g);

}  // namespace support
