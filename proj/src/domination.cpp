#include "coronalab/domination.hpp"

#include <algorithm>
#include <array>

#include "coronalab/masks.hpp"
#include "set_search.hpp"

namespace coronalab {
namespace {

constexpr std::array<std::pair<Parameter, const char*>, 14> kTags{{
    {Parameter::Chi, "chi"},
    {Parameter::ChiK, "chi_k"},
    {Parameter::Gamma, "gamma"},
    {Parameter::GammaC, "gamma_c"},
    {Parameter::GammaK, "gamma_k"},
    {Parameter::GammaDistK, "gamma_dist_k"},
    {Parameter::IndependentDomination, "i"},
    {Parameter::Independence, "beta0"},
    {Parameter::GammaR, "gamma_R"},
    {Parameter::Dim, "dim"},
    {Parameter::GammaLd, "gamma_ld"},
    {Parameter::GammaL_D, "gamma_l_d"},
    {Parameter::Domatic, "domatic"},
    {Parameter::Idomatic, "idomatic"},
}};

void require_subset_cap(const char* solver, const Graph& g, const Caps& caps) {
  require_cap(solver, g.order(), caps.subset);
  require_mask_order(solver, g.order());
}

DominationResult make_result(Parameter p, Mask set, std::uint64_t nodes, std::size_t k = 0) {
  DominationResult r;
  r.parameter = p;
  r.k = k;
  r.value = popcount(set);
  r.set = to_vertices(set);
  r.nodes = nodes;
  return r;
}

/// Union of closed neighborhoods.
Mask closed_union(const std::vector<Mask>& closed, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](Vertex v) { out |= closed[v]; });
  return out;
}

// Every vertex outside S needs k neighbors in S.
class KDomination {
 public:
  KDomination(const Graph& g, std::size_t k)
      : n_(g.order()), k_(int(k)), full_(full_mask(n_)), adj_(neighbor_masks(g)) {}

  bool feasible(Mask in, Mask out, int budget) {
    if (in & out) return false;
    return search(in, out, budget);
  }

  std::uint64_t nodes = 0;

 private:
  bool search(Mask chosen, Mask excluded, int budget) {
    ++nodes;
    Vertex pick = -1;
    int pick_slack = 1 << 20;
    Mask used = 0;
    int need = 0;
    for_each_bit(full_ & ~chosen, [&](Vertex v) {
      if (pick_slack < 0) return;
      const int deficit = k_ - popcount(adj_[v] & chosen);
      if (deficit <= 0) return;
      const Mask open = adj_[v] & ~chosen & ~excluded;
      const bool out = (excluded >> v) & 1;
      const int slack =
          out ? popcount(open) - deficit : std::max(0, popcount(open) - deficit) + 1;
      if (slack < 0) {
        pick_slack = -1;
        return;
      }
      if (slack < pick_slack) {
        pick = v;
        pick_slack = slack;
      }
      const Mask cand = out ? open : open | bit(v);
      if (!(cand & used)) {
        used |= cand;
        need += out ? deficit : 1;
      }
    });
    if (pick_slack < 0) return false;
    if (pick < 0) return true;
    if (popcount(chosen) + need > budget) return false;
    const Vertex w =
        ((excluded >> pick) & 1) ? lowest(adj_[pick] & ~chosen & ~excluded) : pick;
    return search(chosen | bit(w), excluded, budget) ||
           search(chosen, excluded | bit(w), budget);
  }

  std::size_t n_;
  int k_;
  Mask full_;
  std::vector<Mask> adj_;
};

// Independent and dominating.
class IndependentDomination {
 public:
  explicit IndependentDomination(const Graph& g)
      : full_(full_mask(g.order())), adj_(neighbor_masks(g)), closed_(closed_neighbor_masks(g)) {}

  bool feasible(Mask in, Mask out, int budget) {
    if (in & out) return false;
    bool independent = true;
    for_each_bit(in, [&](Vertex v) { independent = independent && !(adj_[v] & in); });
    return independent && search(in, out, budget);
  }

  std::uint64_t nodes = 0;

 private:
  bool search(Mask chosen, Mask excluded, int budget) {
    ++nodes;
    Mask blocked = 0;
    for_each_bit(chosen, [&](Vertex v) { blocked |= adj_[v]; });
    const Mask avail = full_ & ~(chosen | excluded | blocked);
    const Mask undominated = full_ & ~(chosen | blocked);
    if (!undominated) return true;
    if (popcount(chosen) >= budget) return false;
    Mask pick = 0;
    int pick_size = 65;
    Mask used = 0;
    int packing = 0;
    bool dead = false;
    for_each_bit(undominated, [&](Vertex u) {
      const Mask cand = closed_[u] & avail;
      const int c = popcount(cand);
      if (c == 0) dead = true;
      if (c < pick_size) {
        pick = cand;
        pick_size = c;
      }
      if (!(cand & used)) {
        used |= cand;
        ++packing;
      }
    });
    if (dead || popcount(chosen) + packing > budget) return false;
    Mask ex = excluded;
    bool found = false;
    for_each_bit(pick, [&](Vertex c) {
      if (found) return;
      found = search(chosen | bit(c), ex, budget);
      ex |= bit(c);
    });
    return found;
  }

  Mask full_;
  std::vector<Mask> adj_;
  std::vector<Mask> closed_;
};

// Connected dominating sets, grown from their lowest vertex.
class ConnectedDomination {
 public:
  explicit ConnectedDomination(const Graph& g)
      : n_(g.order()), full_(full_mask(n_)), adj_(neighbor_masks(g)),
        closed_(closed_neighbor_masks(g)) {}

  bool feasible(Mask in, Mask out, int budget) {
    if (in & out) return false;
    for (Vertex r = 0; r < Vertex(n_); ++r) {
      if (in && r > lowest(in)) break;
      if ((out >> r) & 1) continue;
      const Mask below = bit(r) - 1;
      if (grow(bit(r), out | below, in, budget)) return true;
    }
    return false;
  }

  std::uint64_t nodes = 0;

 private:
  Mask reachable(Mask from, Mask allowed) const {
    Mask seen = from;
    Mask frontier = from;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](Vertex v) { next |= adj_[v]; });
      frontier = next & allowed & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  bool grow(Mask chosen, Mask excluded, Mask in, int budget) {
    ++nodes;
    if (popcount(chosen | in) > budget) return false;
    const Mask dominated = closed_union(closed_, chosen);
    if (dominated == full_ && !(in & ~chosen)) return true;
    if (popcount(chosen) >= budget) return false;
    const Mask reach = reachable(chosen, full_ & ~excluded);
    if (in & ~reach) return false;
    Mask used = 0;
    int packing = 0;
    bool dead = false;
    for_each_bit(full_ & ~dominated, [&](Vertex u) {
      const Mask cand = closed_[u] & reach & ~chosen;
      if (!cand) dead = true;
      if (!(cand & used)) {
        used |= cand;
        ++packing;
      }
    });
    if (dead) return false;
    if (popcount(chosen) + std::max(packing, popcount(in & ~chosen)) > budget) return false;
    Mask frontier = 0;
    for_each_bit(chosen, [&](Vertex v) { frontier |= adj_[v]; });
    frontier &= ~chosen & ~excluded;
    if (!frontier) return false;
    const Vertex w = lowest(frontier);
    return grow(chosen | bit(w), excluded, in, budget) ||
           grow(chosen, excluded | bit(w), in, budget);
  }

  std::size_t n_;
  Mask full_;
  std::vector<Mask> adj_;
  std::vector<Mask> closed_;
};

// Maximum independent set: branch on a minimum-degree vertex, bound by a
// greedy clique cover.
class IndependentSet {
 public:
  explicit IndependentSet(const Graph& g) : full_(full_mask(g.order())), adj_(neighbor_masks(g)) {}

  /// Some independent S with in ⊆ S, S ∩ out = ∅ and |S| >= target?
  bool feasible(Mask in, Mask out, int target) {
    if (in & out) return false;
    Mask avail = full_ & ~in & ~out;
    for (Vertex v : to_vertices(in)) {
      if (adj_[v] & in) return false;
      avail &= ~adj_[v];
    }
    return search(in, avail, target);
  }

  int clique_cover(Mask rest) const {
    int count = 0;
    while (rest) {
      Mask cand = rest;
      Mask clique = 0;
      while (cand) {
        const Vertex v = lowest(cand);
        clique |= bit(v);
        cand &= adj_[v];
      }
      rest &= ~clique;
      ++count;
    }
    return count;
  }

  std::uint64_t nodes = 0;

 private:
  bool search(Mask chosen, Mask avail, int target) {
    ++nodes;
    if (popcount(chosen) >= target) return true;
    if (popcount(chosen) + clique_cover(avail) < target) return false;
    Vertex v = -1;
    int deg = 65;
    for_each_bit(avail, [&](Vertex u) {
      const int d = popcount(adj_[u] & avail);
      if (d < deg) {
        v = u;
        deg = d;
      }
    });
    // A vertex of degree <= 1 lies in some maximum set of what remains.
    if (deg <= 1) return search(chosen | bit(v), avail & ~bit(v) & ~adj_[v], target);
    return search(chosen | bit(v), avail & ~bit(v) & ~adj_[v], target) ||
           search(chosen, avail & ~bit(v), target);
  }

  Mask full_;
  std::vector<Mask> adj_;
};

template <class Solver>
int minimize(Solver& s, std::size_t n) {
  for (int b = 0; b <= int(n); ++b)
    if (s.feasible(0, 0, b)) return b;
  throw Error("minimize: no feasible set");
}

}  // namespace

std::string to_string(Parameter p) {
  for (auto [param, tag] : kTags)
    if (param == p) return tag;
  return "?";
}

Parameter parse_parameter(const std::string& tag) {
  for (auto [param, name] : kTags)
    if (tag == name) return param;
  throw PreconditionError("unknown parameter tag '" + tag + "'");
}

int RomanAssignment::weight() const {
  int w = 0;
  for (int x : values) w += x;
  return w;
}

int RomanAssignment::count(int label) const {
  return int(std::count(values.begin(), values.end(), label));
}

DominationResult domination_number(const Graph& g, const Caps& caps) {
  require_subset_cap("domination_number", g, caps);
  detail::HittingSet hs(g.order(), closed_neighbor_masks(g));
  const int value = hs.minimum();
  const Mask set = hs.first_minimum(value);
  return make_result(Parameter::Gamma, set, hs.nodes());
}

DominationResult distance_k_domination_number(const Graph& g, std::size_t k, const Caps& caps) {
  if (k < 1) throw PreconditionError("distance_k_domination_number: k must be at least 1");
  if (!is_connected(g))
    throw PreconditionError("distance_k_domination_number: graph is disconnected");
  require_subset_cap("distance_k_domination_number", g, caps);
  detail::HittingSet hs(g.order(), closed_neighbor_masks(power(g, k)));
  const int value = hs.minimum();
  const Mask set = hs.first_minimum(value);
  return make_result(Parameter::GammaDistK, set, hs.nodes(), k);
}

DominationResult k_domination_number(const Graph& g, std::size_t k, const Caps& caps) {
  if (k < 1) throw PreconditionError("k_domination_number: k must be at least 1");
  require_subset_cap("k_domination_number", g, caps);
  KDomination s(g, k);
  const int value = minimize(s, g.order());
  const Mask set = detail::lex_first(g.order(), value,
                                     [&](Mask in, Mask out) { return s.feasible(in, out, value); });
  return make_result(Parameter::GammaK, set, s.nodes, k);
}

DominationResult independent_domination_number(const Graph& g, const Caps& caps) {
  require_subset_cap("independent_domination_number", g, caps);
  IndependentDomination s(g);
  const int value = minimize(s, g.order());
  const Mask set = detail::lex_first(g.order(), value,
                                     [&](Mask in, Mask out) { return s.feasible(in, out, value); });
  return make_result(Parameter::IndependentDomination, set, s.nodes);
}

DominationResult connected_domination_number(const Graph& g, const Caps& caps) {
  if (g.order() == 0 || !is_connected(g))
    throw PreconditionError("connected_domination_number: graph is disconnected");
  require_subset_cap("connected_domination_number", g, caps);
  ConnectedDomination s(g);
  int value = 1;
  while (!s.feasible(0, 0, value)) ++value;
  const Mask set = detail::lex_first(g.order(), value,
                                     [&](Mask in, Mask out) { return s.feasible(in, out, value); });
  return make_result(Parameter::GammaC, set, s.nodes);
}

DominationResult independence_number(const Graph& g, const Caps& caps) {
  require_subset_cap("independence_number", g, caps);
  IndependentSet s(g);
  int value = s.clique_cover(full_mask(g.order()));
  while (value > 0 && !s.feasible(0, 0, value)) --value;
  const Mask set = detail::lex_first(g.order(), value,
                                     [&](Mask in, Mask out) { return s.feasible(in, out, value); });
  return make_result(Parameter::Independence, set, s.nodes);
}

}  // namespace coronalab
