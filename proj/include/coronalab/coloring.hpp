#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coronalab/caps.hpp"
#include "coronalab/graph.hpp"

namespace coronalab {

/// Vertex -> color index. Solvers return it canonicalised: colors appear in
/// first-use order along vertex ids.
struct ColorAssignment {
  std::vector<int> colors;
  int palette = 0;

  bool operator==(const ColorAssignment&) const = default;
};

/// Relabels colors into first-use order and recomputes the palette size.
ColorAssignment canonicalize(const ColorAssignment& a);

struct ChromaticResult {
  int value = 0;
  ColorAssignment witness;
  std::size_t k = 1;
  std::uint64_t nodes = 0;
};

/// Exact chi(G) by DSATUR branch and bound: greedy clique lower bound,
/// saturation-ordered branching (ties by degree, then lowest id).
ChromaticResult chromatic_number(const Graph& g, const Caps& caps = {});

/// Exact distance-k chromatic number, solved as chi of power(g, k).
ChromaticResult distance_k_chromatic(const Graph& g, std::size_t k, const Caps& caps = {});

/// True iff every pair at distance 1..k receives distinct colors.
/// Throws MalformedWitnessError when the assignment does not cover g.
bool validate_coloring(const Graph& g, std::size_t k, const ColorAssignment& a);

/// Builds the distance-k coloring of G⊙H (k in {1, 2, 3}) used in the proofs
/// of the corona coloring bounds. The result is validated before return.
ColorAssignment construct_corona_coloring(const Graph& g, const Graph& h, std::size_t k,
                                          const Caps& caps = {});

/// Closed-form corona chromatic values.
enum class FormulaCase {
  Chi2Path,     // chi_<=2(P_n1 ⊙ H) = n2 + 3, n1 >= 3
  Chi2Cycle3t,  // chi_<=2(C_3t ⊙ H) = n2 + 3
  Chi2Tree,     // chi_<=2(T ⊙ H) = n2 + Delta + 1
  Chi3Tree,     // chi_<=3(T ⊙ H) = 2 n2 + Delta_ij(T)
  ChikPath,     // chi_<=k(P_n1 ⊙ H), two branches on k vs n1
};

std::string to_string(FormulaCase c);

/// Evaluates the closed form for G = g and |H| = n2 (k only for ChikPath).
/// Throws InapplicableError naming the failed hypothesis.
int corona_chromatic_formula(FormulaCase c, const Graph& g, std::size_t n2, std::size_t k = 0);

/// max{deg(u) + deg(v) : uv an edge}. Throws InapplicableError when edgeless.
int delta_ij(const Graph& t);

struct BoundPair {
  std::optional<int> lower;
  std::optional<int> upper;
  std::string lower_note;  // reason when inapplicable
  std::string upper_note;
};

/// Lower/upper bounds on chi_<=k(G⊙H) for k in {2, 3}. The upper bounds need
/// an exact chi_<=k(G), so caps apply.
BoundPair corona_dist_bounds(const Graph& g, const Graph& h, std::size_t k,
                             const Caps& caps = {});

/// 1 + deg_v * sum_{i<t} (delta-1)^i, the girth-based bound on |M_t[v]|.
std::int64_t appendix_ball_bound(std::int64_t deg_v, std::int64_t delta, std::int64_t t);

/// Girth-based bound on |M_t[u] ∪ M_t[v]| for an edge uv.
std::int64_t appendix_edge_ball_bound(std::int64_t delta, std::int64_t t);

/// Girth-based lower bound on chi_<=k(g); nullopt when girth(g) < k + 1.
std::optional<std::int64_t> girth_chromatic_lower_bound(const Graph& g, std::size_t k);

}  // namespace coronalab
