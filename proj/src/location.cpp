#include "coronalab/domination.hpp"
#include "coronalab/masks.hpp"
#include "set_search.hpp"

namespace coronalab {
namespace {

void require_location_input(const char* solver, const Graph& g, const Caps& caps) {
  if (g.order() == 0 || !is_connected(g))
    throw PreconditionError(std::string(solver) + ": graph is disconnected");
  require_cap(solver, g.order(), caps.subset);
  require_mask_order(solver, g.order());
}

// R(u, v): vertices whose distances to u and v differ.
std::vector<Mask> resolving_family(const Graph& g) {
  const auto d = distances(g);
  const auto n = Vertex(g.order());
  std::vector<Mask> family;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      Mask r = 0;
      for (Vertex s = 0; s < n; ++s)
        if (d.at(u, s) != d.at(v, s)) r |= bit(s);
      family.push_back(r);
    }
  return family;
}

// Domination, plus {u, v} ∪ (N(u) Δ N(v)) for each pair: one of u, v is in
// the set or their traces differ.
std::vector<Mask> locating_family(const Graph& g) {
  const auto adj = neighbor_masks(g);
  auto family = closed_neighbor_masks(g);
  const auto n = Vertex(g.order());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) family.push_back(bit(u) | bit(v) | (adj[u] ^ adj[v]));
  return family;
}

DominationResult solve(Parameter p, const Graph& g, std::vector<Mask> family) {
  detail::HittingSet hs(g.order(), std::move(family));
  const int value = hs.minimum();
  const Mask set = hs.first_minimum(value);
  DominationResult r;
  r.parameter = p;
  r.value = value;
  r.set = to_vertices(set);
  r.nodes = hs.nodes();
  return r;
}

}  // namespace

DominationResult metric_dimension(const Graph& g, const Caps& caps) {
  require_location_input("metric_dimension", g, caps);
  return solve(Parameter::Dim, g, resolving_family(g));
}

DominationResult resolving_domination_number(const Graph& g, const Caps& caps) {
  require_location_input("resolving_domination_number", g, caps);
  auto family = resolving_family(g);
  const auto closed = closed_neighbor_masks(g);
  family.insert(family.end(), closed.begin(), closed.end());
  return solve(Parameter::GammaLd, g, std::move(family));
}

DominationResult locating_domination_number(const Graph& g, const Caps& caps) {
  require_location_input("locating_domination_number", g, caps);
  return solve(Parameter::GammaL_D, g, locating_family(g));
}

LocationNumbers location_numbers(const Graph& g, const Caps& caps) {
  return {metric_dimension(g, caps), resolving_domination_number(g, caps),
          locating_domination_number(g, caps)};
}

std::vector<std::vector<Vertex>> minimum_locating_dominating_sets(const Graph& g,
                                                                  const Caps& caps) {
  require_location_input("minimum_locating_dominating_sets", g, caps);
  detail::HittingSet hs(g.order(), locating_family(g));
  std::vector<std::vector<Vertex>> out;
  for (Mask m : hs.all_minimum(hs.minimum())) out.push_back(to_vertices(m));
  return out;
}

LdCase ld_case_classify(const Graph& h, const Caps& caps) {
  const auto sets = minimum_locating_dominating_sets(h, caps);
  const auto adj = neighbor_masks(h);
  const Mask full = full_mask(h.order());
  LdCase result;
  result.min_size = int(sets.front().size());

  // Outside vertex whose trace is the whole set, or -1.
  const auto full_trace = [&](Mask s) {
    Vertex hit = -1;
    for_each_bit(full & ~s, [&](Vertex u) {
      if (hit < 0 && (adj[u] & s) == s) hit = u;
    });
    return hit;
  };

  for (const auto& a : sets) {
    if (full_trace(to_mask(a)) < 0) {
      result.kind = LdCase::Kind::CaseI;
      result.evidence = a;
      return result;
    }
  }
  result.kind = LdCase::Kind::CaseII;
  for (const auto& b : sets) result.witnesses.emplace_back(b, full_trace(to_mask(b)));
  return result;
}

}  // namespace coronalab
