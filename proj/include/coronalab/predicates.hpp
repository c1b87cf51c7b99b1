#pragma once

#include <cstddef>
#include <vector>

#include "coronalab/graph.hpp"

// Defining predicates of the domination-type parameters, written directly on
// Graph and VertexSet. They share no code with the solvers and are used to
// re-check every witness.

namespace coronalab {

VertexSet make_set(std::size_t n, const std::vector<Vertex>& members);

bool is_dominating(const Graph& g, const VertexSet& s);
/// Each vertex outside s has at least k neighbors in s.
bool is_k_dominating(const Graph& g, const VertexSet& s, std::size_t k);
/// Each vertex lies within distance k of s.
bool is_distance_k_dominating(const Graph& g, const VertexSet& s, std::size_t k);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected_set(const Graph& g, const VertexSet& s);
/// Distinct distance vectors to s (g connected).
bool is_resolving(const Graph& g, const VertexSet& s);
/// Dominating, and N(u) ∩ s pairwise distinct over u outside s.
bool is_locating_dominating(const Graph& g, const VertexSet& s);
/// Every 0 has a neighbor labelled 2. Throws MalformedWitnessError on bad size or labels.
bool is_roman(const Graph& g, const std::vector<int>& f);
/// Classes are disjoint and cover V.
bool is_partition(std::size_t n, const std::vector<std::vector<Vertex>>& classes);
bool is_domatic_partition(const Graph& g, const std::vector<std::vector<Vertex>>& classes);
bool is_idomatic_partition(const Graph& g, const std::vector<std::vector<Vertex>>& classes);

}  // namespace coronalab
