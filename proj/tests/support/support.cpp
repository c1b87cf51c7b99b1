#include "support.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "../oracle/oracle.hpp"
#include "coronalab/coloring.hpp"
#include "coronalab/domination.hpp"

namespace support {

using namespace coronalab;

Graph path(std::size_t n) { return generate(FamilySpec::path(n)); }
Graph cycle(std::size_t n) { return generate(FamilySpec::cycle(n)); }
Graph complete(std::size_t n) { return generate(FamilySpec::complete(n)); }
Graph empty(std::size_t n) { return generate(FamilySpec::empty(n)); }
Graph star(std::size_t leaves) { return generate(FamilySpec::star(leaves)); }
Graph complete_bipartite(std::size_t s, std::size_t t) {
  return generate(FamilySpec::complete_bipartite(s, t));
}
Graph corona_graph(const Graph& g, const Graph& h) { return corona(g, h).graph; }

std::vector<NamedGraph> default_family_graphs(std::size_t max_order, std::uint64_t seed) {
  const Families fam = default_families(seed);
  std::vector<NamedGraph> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& name, const Graph& g) {
    if (g.order() <= max_order && seen.insert(name).second) out.push_back({name, g});
  };
  for (const auto& g : fam.g) add(g.name, g.graph);
  for (const auto& h : fam.h) add(h.name, h.graph);
  for (const auto& g : fam.g)
    for (const auto& h : fam.h)
      if (g.graph.order() * (1 + h.graph.order()) <= max_order)
        add(g.name + "⊙" + h.name, corona_graph(g.graph, h.graph));
  return out;
}

namespace {

template <class A, class B>
void expect(std::vector<std::string>& out, const std::string& where, const std::string& what,
            const A& lib, const B& ref) {
  if (lib == ref) return;
  std::ostringstream s;
  s << where << ": " << what << " library " << lib << " oracle " << ref;
  out.push_back(s.str());
}

std::string show(const std::vector<Vertex>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + std::to_string(set[i]);
  return s + "}";
}

void expect_set(std::vector<std::string>& out, const std::string& where, const std::string& what,
                const DominationResult& lib, const oracle::SetValue& ref) {
  expect(out, where, what, lib.value, ref.value);
  expect(out, where, what + " witness", show(lib.set), show(ref.set));
}

}  // namespace

std::vector<std::string> oracle_mismatches(const NamedGraph& named) {
  const Graph& g = named.graph;
  const std::string& w = named.name;
  const std::size_t n = g.order();
  std::vector<std::string> out;

  expect(out, w, "chi", chromatic_number(g).value, oracle::distance_k_chromatic(g, 1));
  for (std::size_t k = 1; k <= 4; ++k)
    expect(out, w, "chi<=" + std::to_string(k), distance_k_chromatic(g, k).value,
           oracle::distance_k_chromatic(g, k));

  expect_set(out, w, "gamma", domination_number(g), oracle::domination(g));
  expect_set(out, w, "beta0", independence_number(g), oracle::independence(g));
  expect_set(out, w, "i", independent_domination_number(g), oracle::independent_domination(g));
  for (std::size_t k = 1; k <= 3; ++k) {
    expect_set(out, w, "gamma_" + std::to_string(k), k_domination_number(g, k),
               oracle::k_domination(g, k));
  }
  if (is_connected(g)) {
    for (std::size_t k = 1; k <= 3; ++k)
      expect_set(out, w, "gamma<=" + std::to_string(k), distance_k_domination_number(g, k),
                 oracle::distance_k_domination(g, k));
    expect_set(out, w, "gamma_l-d", locating_domination_number(g),
               oracle::locating_domination(g));
    std::vector<std::string> lib, ref;
    auto sets = minimum_locating_dominating_sets(g);
    std::sort(sets.begin(), sets.end());
    for (const auto& s : sets) lib.push_back(show(s));
    for (const auto& s : oracle::minimum_locating_dominating_sets(g)) ref.push_back(show(s));
    expect(out, w, "minimum l-d sets", lib.size(), ref.size());
    if (lib.size() == ref.size())
      for (std::size_t i = 0; i < lib.size(); ++i) expect(out, w, "minimum l-d set", lib[i], ref[i]);
    expect_set(out, w, "gamma_c", connected_domination_number(g),
               oracle::connected_domination(g));
    expect_set(out, w, "dim", metric_dimension(g), oracle::metric_dimension(g));
    expect_set(out, w, "gamma_ld", resolving_domination_number(g),
               oracle::resolving_domination(g));
  }
  if (n <= 9) {
    const auto lib = roman_domination(g);
    const auto ref = oracle::roman(g);
    expect(out, w, "gamma_R", lib.value, ref.value);
    expect(out, w, "b2max", lib.b2max, ref.b2max);
  }
  if (n <= 8) {
    expect(out, w, "domatic", domatic_number(g).value, oracle::domatic(g));
    const auto lib = idomatic_number(g);
    const auto ref = oracle::idomatic(g);
    expect(out, w, "idomatic", lib ? lib->value : -1, ref.value_or(-1));
  }
  return out;
}

}  // namespace support
