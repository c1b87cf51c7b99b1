#include <algorithm>
#include <vector>

#include "coronalab/coloring.hpp"

namespace coronalab {
namespace {

std::vector<int> greedy_proper_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::vector<bool> taken(g.order() + 1, false);
    const auto& nbrs = g.neighbors(Vertex(v));
    for (auto w = nbrs.find_first(); w != VertexSet::npos; w = nbrs.find_next(w))
      if (color[w] >= 0) taken[color[w]] = true;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
  }
  return color;
}

std::int64_t power_of(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

ColorAssignment construct_corona_coloring(const Graph& g, const Graph& h, std::size_t k,
                                          const Caps& caps) {
  if (k < 1 || k > 3)
    throw InapplicableError("construct_corona_coloring: k must be 1, 2 or 3");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const int n1 = int(g.order());
  const int n2 = int(h.order());
  ColorAssignment a;
  a.colors.assign(lab.order(), -1);

  if (k == 1) {
    // Copy i reuses chi(H) colors from the palette minus the color of v_i.
    const auto cg = chromatic_number(g, caps).witness.colors;
    const auto ch = chromatic_number(h, caps).witness.colors;
    for (int i = 0; i < n1; ++i) {
      a.colors[lab.center(i)] = cg[i];
      for (int j = 0; j < n2; ++j)
        a.colors[lab.copy_vertex(i, j)] = ch[j] < cg[i] ? ch[j] : ch[j] + 1;
    }
  } else if (k == 2) {
    // Copy i takes the first n2 colors not used on N[v_i].
    const auto cg = distance_k_chromatic(g, 2, caps);
    const int palette = cg.value + n2;
    for (int i = 0; i < n1; ++i) {
      a.colors[lab.center(i)] = cg.witness.colors[i];
      std::vector<bool> blocked(std::size_t(palette), false);
      blocked[cg.witness.colors[i]] = true;
      const auto& nbrs = g.neighbors(i);
      for (auto w = nbrs.find_first(); w != VertexSet::npos; w = nbrs.find_next(w))
        blocked[cg.witness.colors[w]] = true;
      int c = 0;
      for (int j = 0; j < n2; ++j) {
        while (blocked[c]) ++c;
        a.colors[lab.copy_vertex(i, j)] = c++;
      }
    }
  } else {
    // Centers: exact distance-3 coloring. Copies: a block of n2 fresh colors
    // per class of a proper coloring of G, so copies of adjacent centers
    // never share a block.
    const auto cg = distance_k_chromatic(g, 3, caps);
    const auto block = greedy_proper_coloring(g);
    for (int i = 0; i < n1; ++i) {
      a.colors[lab.center(i)] = cg.witness.colors[i];
      for (int j = 0; j < n2; ++j)
        a.colors[lab.copy_vertex(i, j)] = cg.value + block[i] * n2 + j;
    }
  }

  a.palette = 1 + *std::max_element(a.colors.begin(), a.colors.end());
  a = canonicalize(a);
  if (!validate_coloring(product.graph, k, a))
    throw ConstructionError("construct_corona_coloring: distance-" + std::to_string(k) +
                            " coloring failed validation");
  return a;
}

std::string to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::Chi2Path: return "chi2-path";
    case FormulaCase::Chi2Cycle3t: return "chi2-cycle3t";
    case FormulaCase::Chi2Tree: return "chi2-tree";
    case FormulaCase::Chi3Tree: return "chi3-tree";
    case FormulaCase::ChikPath: return "chik-path";
  }
  return "?";
}

int delta_ij(const Graph& t) {
  if (t.size() == 0) throw InapplicableError("delta_ij: graph has no edges");
  std::size_t best = 0;
  for (auto [u, v] : t.edges()) best = std::max(best, t.degree(u) + t.degree(v));
  return int(best);
}

int corona_chromatic_formula(FormulaCase c, const Graph& g, std::size_t n2, std::size_t k) {
  const auto fail = [&](const std::string& why) {
    throw InapplicableError(to_string(c) + ": hypothesis violated: " + why);
  };
  const int n1 = int(g.order());
  const int m2 = int(n2);
  switch (c) {
    case FormulaCase::Chi2Path:
      if (!is_path(g)) fail("G is not a path");
      if (n1 < 3) fail("path order n1 >= 3");
      return m2 + 3;
    case FormulaCase::Chi2Cycle3t:
      if (!is_cycle(g)) fail("G is not a cycle");
      if (n1 % 3 != 0) fail("cycle order divisible by 3");
      return m2 + 3;
    case FormulaCase::Chi2Tree:
      if (!is_tree(g)) fail("G is not a tree");
      return m2 + int(g.max_degree()) + 1;
    case FormulaCase::Chi3Tree:
      if (!is_tree(g)) fail("G is not a tree");
      if (g.size() == 0) fail("tree with at least one edge");
      return 2 * m2 + delta_ij(g);
    case FormulaCase::ChikPath: {
      if (!is_path(g)) fail("G is not a path");
      if (n1 < 2) fail("path order n1 >= 2");
      const int kk = int(k);
      if (kk < 2 || kk > n1) fail("2 <= k <= n1");
      return kk <= n1 - 1 ? m2 * (kk - 1) + kk + 1 : m2 * (kk - 1) + kk;
    }
  }
  fail("unknown case");
  return 0;
}

BoundPair corona_dist_bounds(const Graph& g, const Graph& h, std::size_t k, const Caps& caps) {
  const int max_deg = int(g.max_degree());
  const int min_deg = int(g.min_degree());
  const int n2 = int(h.order());
  BoundPair b;
  if (k == 2) {
    b.lower = max_deg + n2 + 1;
    b.upper = distance_k_chromatic(g, 2, caps).value + n2;
  } else if (k == 3) {
    b.upper = distance_k_chromatic(g, 3, caps).value + n2 * (max_deg + 1);
    if (g.size() == 0)
      b.lower_note = "G has no edge";
    else if (girth(g) == 3)
      b.lower_note = "G contains a triangle";
    else
      b.lower = 2 * n2 + max_deg + min_deg;
  } else {
    throw InapplicableError("corona_dist_bounds: k must be 2 or 3");
  }
  return b;
}

std::int64_t appendix_ball_bound(std::int64_t deg_v, std::int64_t delta, std::int64_t t) {
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < t; ++i) sum += power_of(delta - 1, i);
  return 1 + deg_v * sum;
}

std::int64_t appendix_edge_ball_bound(std::int64_t delta, std::int64_t t) {
  std::int64_t sum = 0;
  if (t % 2 == 0) {
    for (std::int64_t i = 1; i <= t / 2; ++i) sum += power_of(delta - 1, 2 * i - 1);
    return 2 + 2 * delta * sum;
  }
  for (std::int64_t i = 0; i <= (t - 1) / 2; ++i) sum += power_of(delta - 1, 2 * i);
  return 2 * delta * sum;
}

std::optional<std::int64_t> girth_chromatic_lower_bound(const Graph& g, std::size_t k) {
  if (k < 2) throw InapplicableError("girth_chromatic_lower_bound: k must be at least 2");
  const Distance gi = girth(g);
  if (gi != kInfinite && gi < k + 1) return std::nullopt;
  const auto max_deg = std::int64_t(g.max_degree());
  const auto min_deg = std::int64_t(g.min_degree());
  if (k % 2 == 0) return appendix_ball_bound(max_deg, min_deg, std::int64_t(k / 2));
  return appendix_edge_ball_bound(min_deg, std::int64_t((k - 1) / 2));
}

}  // namespace coronalab
