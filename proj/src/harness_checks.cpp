#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "coronalab/coloring.hpp"
#include "coronalab/domination.hpp"
#include "coronalab/predicates.hpp"
#include "harness_claims.hpp"

namespace coronalab::detail {
namespace {

using Body = void (*)(Claims&, const Instance&, const Caps&);

int chi_k(const Graph& g, std::size_t k, const Caps& caps) {
  return k == 1 ? chromatic_number(g, caps).value : distance_k_chromatic(g, k, caps).value;
}

Json diameter_json(Distance d) { return d == kInfinite ? Json("inf") : Json(d); }

bool is_complete(const Graph& g) {
  const auto n = g.order();
  return g.size() == n * (n - 1) / 2;
}

// Part sizes (s <= t) when g is complete bipartite.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  const auto d = bfs_distances(g, 0);
  std::size_t even = 0;
  for (auto x : d) even += x % 2 == 0;
  const std::size_t odd = g.order() - even;
  if (odd == 0 || g.size() != even * odd) return std::nullopt;
  for (auto [u, v] : g.edges())
    if (d[u] % 2 == d[v] % 2) return std::nullopt;
  return std::pair{std::min(even, odd), std::max(even, odd)};
}

// G⊙H for a pair instance.
struct Pair {
  const Graph& g;
  const Graph& h;
  CoronaProduct product;
  int n1;
  int n2;

  explicit Pair(const Instance& in)
      : g(in.g.graph),
        h(in.h->graph),
        product(corona(g, h)),
        n1(int(g.order())),
        n2(int(h.order())) {}

  const Graph& gh() const { return product.graph; }
};

// The graph under test: G alone or G⊙H.
Graph subject(const Instance& in) {
  return in.h ? corona(in.g.graph, in.h->graph).graph : in.g.graph;
}

Json coloring_json(const ColorAssignment& a) { return a.colors; }

void t1(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  const int formula = std::max(chi_k(p.g, 1, caps), chi_k(p.h, 1, caps) + 1);
  c.equal("χ(G⊙H) = max{χ(G), χ(H)+1}", formula, chi_k(p.gh(), 1, caps));
  const auto col = construct_corona_coloring(p.g, p.h, 1, caps);
  c.holds("construction is a proper coloring", validate_coloring(p.gh(), 1, col), true, false,
          {}, coloring_json(col));
  c.equal("construction uses max{χ(G), χ(H)+1} colors", formula, col.palette);
}

void t2(Claims& c, const Instance& in, const Caps& caps) {
  const Graph x = subject(in);
  const auto n = long(x.order());
  const Distance d = diameter(x);
  const int exact = chi_k(x, in.k, caps);
  c.holds("χ≤k = n exactly when D ≤ k", (exact == n) == (d != kInfinite && d <= in.k),
          Json{{"n", n}, {"diameter", diameter_json(d)}}, exact);
}

void t3(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  const auto b = corona_dist_bounds(p.g, p.h, 2, caps);
  const int exact = chi_k(p.gh(), 2, caps);
  c.bound("Δ1+n2+1 ≤ χ≤2(G⊙H) ≤ χ≤2(G)+n2", b.lower, b.upper, exact);
  const auto col = construct_corona_coloring(p.g, p.h, 2, caps);
  c.holds("construction is a distance-2 coloring", validate_coloring(p.gh(), 2, col), true,
          false, {}, coloring_json(col));
  c.bound("χ≤2(G⊙H) ≤ construction palette ≤ χ≤2(G)+n2", exact, b.upper, col.palette);
}

void t4(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  std::optional<int> exact;
  for (auto fc : {FormulaCase::Chi2Path, FormulaCase::Chi2Cycle3t, FormulaCase::Chi2Tree}) {
    int formula = 0;
    try {
      formula = corona_chromatic_formula(fc, p.g, p.h.order());
    } catch (const InapplicableError&) {
      continue;
    }
    if (!exact) exact = chi_k(p.gh(), 2, caps);
    const char* claim = fc == FormulaCase::Chi2Tree ? "χ≤2(T⊙H) = n2+Δ1+1"
                        : fc == FormulaCase::Chi2Path ? "χ≤2(P⊙H) = n2+3"
                                                      : "χ≤2(C3t⊙H) = n2+3";
    c.equal(claim, formula, *exact);
  }
  if (!exact)
    c.skip("χ≤2 closed form", "G is not a path of order >= 3, a cycle C3t or a tree");
}

void t5(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  const auto parts = complete_bipartite_parts(p.g);
  if (is_cycle(p.g) && p.n1 % 3 != 0 && p.n2 == 2 && p.h.size() == 0) {
    const int exact = chi_k(p.gh(), 2, caps);
    c.equal("χ≤2(C⊙N2) = 5", 5, exact);
    c.bound("χ≤2(C⊙N2) < 6", std::nullopt, 5, exact);
    const int factor = chi_k(p.g, 2, caps);
    const int claimed = p.n1 % 3 == 1 ? 4 : 5;
    c.report(p.n1 % 3 == 1 ? "χ≤2(C_{3t+1}) = 4" : "χ≤2(C_{3t+2}) = 5", factor == claimed,
             claimed, factor,
             factor == claimed ? "" : "the cycle has a distance-2 coloring with fewer colors");
  } else if (parts && parts->first > 2 && p.n2 == 1) {
    const auto [s, t] = *parts;
    const int exact = chi_k(p.gh(), 2, caps);
    c.equal("χ≤2(K_{s,t}⊙K1) = s+t", long(s + t), exact);
    c.bound("t+2 < χ≤2(K_{s,t}⊙K1) < s+t+1", long(t + 3), long(s + t), exact);
    c.equal("χ≤2(K_{s,t}) = s+t", long(s + t), chi_k(p.g, 2, caps));
  } else {
    c.skip("distance-2 bounds not attained",
           "needs C_n (3 ∤ n) with H = N2, or K_{s,t} (2 < s <= t) with H = K1");
  }
}

void t6(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  const auto b = corona_dist_bounds(p.g, p.h, 3, caps);
  const int exact = chi_k(p.gh(), 3, caps);
  c.bound("χ≤3(G⊙H) ≤ χ≤3(G)+n2(Δ1+1)", std::nullopt, b.upper, exact);
  if (b.lower)
    c.bound("χ≤3(G⊙H) ≥ 2n2+Δ1+δ1 (G triangle-free)", b.lower, std::nullopt, exact);
  else
    c.skip("χ≤3(G⊙H) ≥ 2n2+Δ1+δ1 (G triangle-free)", b.lower_note);
  const auto col = construct_corona_coloring(p.g, p.h, 3, caps);
  c.holds("construction is a distance-3 coloring", validate_coloring(p.gh(), 3, col), true,
          false, {}, coloring_json(col));
  c.bound("χ≤3(G⊙H) ≤ construction palette ≤ χ≤3(G)+n2(Δ1+1)", exact, b.upper, col.palette);
}

void t7(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (is_cycle(p.g) && p.n1 == 4)
    c.equal("χ≤3(C4⊙H) = 2n2+4", 2 * p.n2 + 4, chi_k(p.gh(), 3, caps));
  else if (is_complete(p.g) && p.n1 >= 2)
    c.equal("χ≤3(K_n1⊙H) = n1n2+n1", p.n1 * p.n2 + p.n1, chi_k(p.gh(), 3, caps));
  else
    c.skip("distance-3 bounds attained", "G is neither C4 nor a complete graph of order >= 2");
}

void t8(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (!is_tree(p.g) || p.g.size() == 0) {
    c.skip("χ≤3(T⊙H) = 2n2+Δij(T)", "G is not a tree with an edge");
    return;
  }
  c.equal("χ≤3(T⊙H) = 2n2+Δij(T)",
          corona_chromatic_formula(FormulaCase::Chi3Tree, p.g, p.h.order()),
          chi_k(p.gh(), 3, caps));
}

void t9(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (in.k == 0) {
    c.skip("χ≤k(P⊙H)", "G is not a path of order >= 2");
    return;
  }
  const bool last = int(in.k) == p.n1;
  c.equal(last ? "χ≤k(P⊙H) = n2(k-1)+k for k = n1" : "χ≤k(P⊙H) = n2(k-1)+k+1 for k < n1",
          corona_chromatic_formula(FormulaCase::ChikPath, p.g, p.h.order(), in.k),
          chi_k(p.gh(), in.k, caps));
}

void t10(Claims& c, const Instance& in, const Caps& caps) {
  const Graph x = subject(in);
  const int gamma = domination_number(x, caps).value;
  c.bound("γ ≤ γ_R ≤ 2γ", gamma, 2 * gamma, roman_domination(x, caps).value);
}

void t11(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (p.n2 < 2) {
    c.skip("γ_R(G⊙H) = 2n1", "n2 < 2");
    return;
  }
  c.equal("γ_R(G⊙H) = 2n1", 2 * p.n1, roman_domination(p.gh(), caps).value);
}

void t12(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (p.n2 != 1) {
    c.skip("γ_R(G⊙K1)", "H is not K1");
    return;
  }
  const auto rg = roman_domination(p.g, caps);
  const int exact = roman_domination(p.gh(), caps).value;
  const int n = p.n1;
  if (n >= 2 && p.g.size() > 0)
    c.bound("γ_R(G)+n/2 ≤ γ_R(G⊙K1) ≤ γ_R(G)+n-1", rg.value + (n + 1) / 2, rg.value + n - 1,
            exact);
  else
    c.skip("γ_R(G)+n/2 ≤ γ_R(G⊙K1) ≤ γ_R(G)+n-1", "needs n >= 2 and G not edgeless");
  const int formula = rg.value + n - rg.b2max;
  c.report("γ_R(G⊙K1) = γ_R(G)+n-b2max(G)", formula == exact, formula, exact,
           "b2max(G) = " + std::to_string(rg.b2max));
  const auto parts = complete_bipartite_parts(p.g);
  if (parts && parts->first == 1)
    c.equal("upper bound attained on stars", rg.value + n - 1, exact);
  const auto w = construct_corona_witness(WitnessKind::RomanK1, p.g, p.h, 0, caps);
  c.holds("construction is a Roman function of weight γ_R(G)+n-b2max(G)",
          is_roman(p.gh(), w.roman.values) && w.roman.weight() == formula, formula,
          w.roman.weight(), {}, w.roman.values);
}

void t13(Claims& c, const Instance& in, const Caps& caps) {
  const Graph x = subject(in);
  if (!is_connected(x)) {
    c.skip("dim ≤ γ_ld ≤ γ_l-d", "graph is disconnected");
    return;
  }
  const auto loc = location_numbers(x, caps);
  const int dim = loc.dim.value;
  const int ld = loc.resolving_dominating.value;
  const int lmd = loc.locating_dominating.value;
  const Json values{{"dim", dim}, {"gamma_ld", ld}, {"gamma_l_d", lmd}};
  c.holds("dim ≤ γ_ld ≤ γ_l-d", dim <= ld && ld <= lmd, "ordered", values);
  const auto n = x.order();
  const bool witnesses = is_resolving(x, make_set(n, loc.dim.set)) &&
                         is_resolving(x, make_set(n, loc.resolving_dominating.set)) &&
                         is_dominating(x, make_set(n, loc.resolving_dominating.set)) &&
                         is_locating_dominating(x, make_set(n, loc.locating_dominating.set));
  c.holds("witnesses satisfy their definitions", witnesses, true, witnesses);
  // Fails as stated: G⊙P3 already has dim = n1 < γ_ld = 2n1.
  if (in.h)
    c.report("dim = γ_ld on G⊙H", dim == ld, dim, ld);
}

void t14(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (!is_connected(p.g) || !is_connected(p.h)) {
    c.skip("γ_l-d(G⊙H)", "G and H must be connected");
    return;
  }
  const auto cls = ld_case_classify(p.h, caps);
  const auto exact = locating_domination_number(p.gh(), caps);
  const bool case1 = cls.kind == LdCase::Kind::CaseI;
  const int formula =
      p.n1 * cls.min_size + (case1 ? 0 : domination_number(p.g, caps).value);
  c.equal(case1 ? "CaseI: γ_l-d(G⊙H) = nγ_l-d(H)" : "CaseII: γ_l-d(G⊙H) = nγ_l-d(H)+γ(G)",
          formula, exact.value);

  // A minimum set restricted to copy i (plus v_i when v_i is in the set)
  // locates and dominates that piece on its own.
  const auto& lab = p.product.labeling;
  const VertexSet s = make_set(lab.order(), exact.set);
  bool restricts = true;
  for (int i = 0; i < p.n1 && restricts; ++i) {
    VertexSet piece = lab.copy_set(i);
    const bool center_in = s.test(lab.center(i));
    if (center_in) piece.set(lab.center(i));
    const Graph sub = induced_subgraph(p.gh(), piece);
    std::vector<Vertex> local;
    int idx = 0;
    for (auto v = piece.find_first(); v != VertexSet::npos; v = piece.find_next(v), ++idx)
      if (s.test(v)) local.push_back(idx);
    restricts = is_locating_dominating(sub, make_set(sub.order(), local));
  }
  c.holds("minimum set restricts to each copy", restricts, true, restricts, {}, exact.set);

  const auto w = construct_corona_witness(WitnessKind::Ld, p.g, p.h, 0, caps);
  const bool valid = is_locating_dominating(p.gh(), make_set(lab.order(), w.set));
  c.holds("construction is locating-dominating of size " + std::to_string(formula),
          valid && int(w.set.size()) == formula, formula, int(w.set.size()), {}, w.set);
}

void t15(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  const std::size_t k = in.k;
  const std::string claim = "γ_k(G⊙H) = n min{γ_k(H), γ_{k-1}(H)+1}";
  if (!is_connected(p.g)) {
    c.skip(claim, "G is disconnected");
    return;
  }
  const int gk = k_domination_number(p.h, k, caps).value;
  const int gk1 = k_domination_number(p.h, k - 1, caps).value;
  const int formula = p.n1 * std::min(gk, gk1 + 1);
  const int exact = k_domination_number(p.gh(), k, caps).value;
  if (std::size_t(p.n2) < k) {
    c.report(claim, formula == exact, formula, exact,
             "n2 < k: a center outside the set may count neighbors in G");
    return;
  }
  c.equal(claim, formula, exact);
  const auto w = construct_corona_witness(WitnessKind::KDom, p.g, p.h, k, caps);
  const bool valid = is_k_dominating(p.gh(), make_set(p.gh().order(), w.set), k);
  c.holds("construction is k-dominating of size γ_k(G⊙H)",
          valid && int(w.set.size()) == exact, exact, int(w.set.size()), {}, w.set);
}

void t16(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (!is_connected(p.g)) {
    c.skip("γ≤k(G⊙H) = γ≤k-1(G)", "G is disconnected");
    return;
  }
  const int formula = distance_k_domination_number(p.g, in.k - 1, caps).value;
  const int exact = distance_k_domination_number(p.gh(), in.k, caps).value;
  c.equal("γ≤k(G⊙H) = γ≤k-1(G)", formula, exact);
  const auto w = construct_corona_witness(WitnessKind::DistKDom, p.g, p.h, in.k, caps);
  const bool valid = is_distance_k_dominating(p.gh(), make_set(p.gh().order(), w.set), in.k);
  c.holds("construction is distance-k dominating of size γ≤k(G⊙H)",
          valid && int(w.set.size()) == exact, exact, int(w.set.size()), {}, w.set);
}

void t17(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (!is_connected(p.g)) {
    c.skip("i(G⊙H)", "G is disconnected");
    return;
  }
  const int ih = independent_domination_number(p.h, caps).value;
  const int bg = independence_number(p.g, caps).value;
  const int formula = p.n1 * ih - bg * (ih - 1);
  const int exact = independent_domination_number(p.gh(), caps).value;
  c.equal("i(G⊙H) = ni(H)-β0(G)(i(H)-1)", formula, exact);
  const auto w = construct_corona_witness(WitnessKind::IndepDom, p.g, p.h, 0, caps);
  const VertexSet s = make_set(p.gh().order(), w.set);
  const bool valid = is_independent(p.gh(), s) && is_dominating(p.gh(), s);
  c.holds("construction is independent dominating of size i(G⊙H)",
          valid && int(w.set.size()) == exact, exact, int(w.set.size()), {}, w.set);
  c.equal("β0(G⊙H) = n1β0(H)", p.n1 * independence_number(p.h, caps).value,
          independence_number(p.gh(), caps).value);
  c.equal("γ(G⊙H) = n1", p.n1, domination_number(p.gh(), caps).value);
  c.equal("γ_c(G⊙H) = n1", p.n1, connected_domination_number(p.gh(), caps).value);
}

void t18(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (!is_connected(p.g)) {
    c.skip("d(G⊙H) = d(H)+1", "G is disconnected");
    return;
  }
  const int formula = domatic_number(p.h, caps).value + 1;
  c.equal("d(G⊙H) = d(H)+1", formula, domatic_number(p.gh(), caps).value);
  const auto w = construct_corona_witness(WitnessKind::Domatic, p.g, p.h, 0, caps);
  const bool valid = is_domatic_partition(p.gh(), w.partition);
  c.holds("construction is a domatic partition into d(H)+1 classes",
          valid && int(w.partition.size()) == formula, formula, int(w.partition.size()), {},
          w.partition);
}

void t19(Claims& c, const Instance& in, const Caps& caps) {
  const Pair p(in);
  if (!is_connected(p.g)) {
    c.skip("d_i(G⊙H)", "G is disconnected");
    return;
  }
  const auto ih = idomatic_number(p.h, caps);
  if (!ih) {
    c.skip("d_i(G⊙H)", "H is not idomatic");
    return;
  }
  const int t = ih->value + 1;
  const int chi_g = chi_k(p.g, 1, caps);
  const auto exact = idomatic_number(p.gh(), caps);
  const Json observed = exact ? Json(exact->value) : Json("none");
  const bool reading_a = chi_g <= t;
  const bool reading_b = reading_a && t <= p.n1;
  const bool lhs = exact && exact->value == t;

  if (reading_a) {
    const auto w = construct_corona_witness(WitnessKind::Idomatic, p.g, p.h, 0, caps);
    const bool valid = is_idomatic_partition(p.gh(), w.partition);
    c.holds("construction is an idomatic partition into d_i(H)+1 classes",
            valid && int(w.partition.size()) == t, t, int(w.partition.size()), {}, w.partition);
    c.holds("χ(G) ≤ d_i(H)+1 gives d_i(G⊙H) = d_i(H)+1", lhs, t, observed);
  } else {
    c.skip("χ(G) ≤ d_i(H)+1 gives d_i(G⊙H) = d_i(H)+1", "χ(G) > d_i(H)+1");
  }
  const Json hyp{{"chi_G", chi_g}, {"t", t}, {"n1", p.n1}};
  c.report("d_i(G⊙H) = d_i(H)+1 ⟺ χ(G) ≤ t (empty classes allowed)", lhs == reading_a, hyp,
           observed);
  c.report("d_i(G⊙H) = d_i(H)+1 ⟺ t nonempty independent classes", lhs == reading_b, hyp,
           observed);
  if (p.n1 == 2 && p.g.size() == 1 && p.n2 == 2 && p.h.size() == 1)
    c.report("regression: d_i(K2⊙K2) = 3", lhs && t == 3, 3, observed,
             "an idomatic 3-partition exists although K2 has no 3 nonempty independent classes");
}

void t20(Claims& c, const Instance& in, const Caps&) {
  const Pair p(in);
  const Distance dg = diameter(p.g);
  const Distance dgh = diameter(p.gh());
  const Json expected = dg == kInfinite ? Json("inf") : Json(dg + 2);
  if (p.n1 < 2) {
    c.report("D(G⊙H) = D(G)+2", dg != kInfinite && dgh == dg + 2, expected, diameter_json(dgh),
             "n1 = 1");
    return;
  }
  if (dg == kInfinite) {
    c.skip("D(G⊙H) = D(G)+2", "G is disconnected");
    return;
  }
  c.equal("D(G⊙H) = D(G)+2", long(dg) + 2, long(dgh));
}

void t21(Claims& c, const Instance& in, const Caps& caps) {
  const Graph& x = in.g.graph;
  const Distance g = girth(x);
  const auto fits = [&](std::size_t need) { return g == kInfinite || g >= need; };
  const auto delta = std::int64_t(x.min_degree());
  for (std::int64_t t = 1; t <= 3; ++t) {
    const std::string claim = "|M_t[v]| ≥ 1+δ(v)∑(δ-1)^i, t=" + std::to_string(t);
    if (!fits(std::size_t(2 * t + 1))) {
      c.skip(claim, "girth < 2t+1");
      continue;
    }
    std::int64_t slack = std::numeric_limits<std::int64_t>::max();
    for (Vertex v = 0; v < Vertex(x.order()); ++v) {
      const auto size = std::int64_t(ball(x, v, Distance(t)).count());
      slack = std::min(slack, size - appendix_ball_bound(std::int64_t(x.degree(v)), delta, t));
    }
    c.holds(claim, slack >= 0, "slack >= 0", slack);
  }
  for (std::int64_t t = 1; t <= 3; ++t) {
    const std::string claim = "|M_t[u] ∪ M_t[v]| edge bound, t=" + std::to_string(t);
    if (x.size() == 0 || !fits(std::size_t(2 * t + 2))) {
      c.skip(claim, x.size() == 0 ? "no edge" : "girth < 2t+2");
      continue;
    }
    const std::int64_t bound = appendix_edge_ball_bound(delta, t);
    std::int64_t smallest = std::numeric_limits<std::int64_t>::max();
    for (auto [u, v] : x.edges())
      smallest = std::min(smallest, std::int64_t((ball(x, u, Distance(t)) |
                                                  ball(x, v, Distance(t))).count()));
    c.bound(claim, bound, std::nullopt, smallest);
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::string claim = "girth lower bound on χ≤k, k=" + std::to_string(k);
    const auto lb = girth_chromatic_lower_bound(x, k);
    if (!lb) {
      c.skip(claim, "girth < k+1");
      continue;
    }
    const int exact = chi_k(x, k, caps);
    c.bound(claim, *lb, std::nullopt, exact, *lb == exact ? "attained" : "");
  }
}

const std::map<std::string, Body>& bodies() {
  static const std::map<std::string, Body> table{
      {"T1", t1},   {"T2", t2},   {"T3", t3},   {"T4", t4},   {"T5", t5},   {"T6", t6},
      {"T7", t7},   {"T8", t8},   {"T9", t9},   {"T10", t10}, {"T11", t11}, {"T12", t12},
      {"T13", t13}, {"T14", t14}, {"T15", t15}, {"T16", t16}, {"T17", t17}, {"T18", t18},
      {"T19", t19}, {"T20", t20}, {"T21", t21},
  };
  return table;
}

}  // namespace

CheckBody check_body(const std::string& id) {
  const auto it = bodies().find(id);
  if (it == bodies().end()) throw PreconditionError("unknown check id '" + id + "'");
  return it->second;
}

}  // namespace coronalab::detail
