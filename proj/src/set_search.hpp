#pragma once

// Internal search helpers shared by the set-parameter solvers.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "coronalab/masks.hpp"

namespace coronalab::detail {

/// Lexicographically first optimal set, decided vertex by vertex.
/// feasible(in, out) must say whether an optimal set contains `in` and
/// avoids `out`; `size` is the optimal cardinality.
template <class Feasible>
Mask lex_first(std::size_t n, int size, Feasible&& feasible) {
  Mask in = 0;
  Mask out = 0;
  for (Vertex v = 0; v < Vertex(n) && popcount(in) < size; ++v) {
    if (feasible(in | bit(v), out))
      in |= bit(v);
    else
      out |= bit(v);
  }
  return in;
}

/// Minimum hitting set over a family of vertex masks.
class HittingSet {
 public:
  HittingSet(std::size_t n, std::vector<Mask> family);

  /// Some hitting set S with in ⊆ S, S ∩ out = ∅ and |S| <= budget?
  bool feasible(Mask in, Mask out, int budget);
  /// Minimum size; iterative deepening from the packing bound.
  int minimum();
  /// Lexicographically first minimum hitting set.
  Mask first_minimum(int size);
  /// Every hitting set of exactly `size` elements (size must be the minimum).
  std::vector<Mask> all_minimum(int size);

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(Mask chosen, Mask excluded, int budget, std::vector<Mask>* all);

  std::size_t n_;
  std::vector<Mask> family_;
  std::uint64_t nodes_ = 0;
};

}  // namespace coronalab::detail
