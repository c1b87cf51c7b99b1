#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "coronalab/errors.hpp"
#include "coronalab/graph.hpp"

namespace coronalab {

/// Vertex subset of a graph with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline Vertex lowest(Mask m) { return std::countr_zero(m); }
inline Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls f(v) for each member in increasing order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

inline std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  for_each_bit(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

inline Mask to_mask(const std::vector<Vertex>& vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

inline void require_mask_order(const char* solver, std::size_t n) {
  if (n > kMaskBits) throw SizeLimitError(solver, n, kMaskBits);
}

/// Open neighborhoods as masks; the graph must have at most 64 vertices.
inline std::vector<Mask> neighbor_masks(const Graph& g) {
  require_mask_order("neighbor_masks", g.order());
  std::vector<Mask> out(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    out[u] |= bit(v);
    out[v] |= bit(u);
  }
  return out;
}

inline std::vector<Mask> closed_neighbor_masks(const Graph& g) {
  auto out = neighbor_masks(g);
  for (std::size_t v = 0; v < out.size(); ++v) out[v] |= bit(Vertex(v));
  return out;
}

}  // namespace coronalab
