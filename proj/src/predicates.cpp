#include "coronalab/predicates.hpp"

#include <set>
#include <string>

#include "coronalab/errors.hpp"

namespace coronalab {

VertexSet make_set(std::size_t n, const std::vector<Vertex>& members) {
  VertexSet s(n);
  for (Vertex v : members) {
    if (v < 0 || std::size_t(v) >= n)
      throw MalformedWitnessError("vertex " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!s.test(v) && !g.neighbors(Vertex(v)).intersects(s)) return false;
  return true;
}

bool is_k_dominating(const Graph& g, const VertexSet& s, std::size_t k) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!s.test(v) && (g.neighbors(Vertex(v)) & s).count() < k) return false;
  return true;
}

bool is_distance_k_dominating(const Graph& g, const VertexSet& s, std::size_t k) {
  VertexSet reached(g.order());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    reached |= ball(g, Vertex(v), Distance(k));
  return reached.all();
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    if (g.neighbors(Vertex(v)).intersects(s)) return false;
  return true;
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.none()) return false;
  VertexSet seen(g.order());
  std::vector<std::size_t> stack{s.find_first()};
  seen.set(stack.back());
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    const VertexSet next = g.neighbors(Vertex(v)) & s & ~seen;
    for (auto w = next.find_first(); w != VertexSet::npos; w = next.find_next(w)) {
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen == s;
}

bool is_resolving(const Graph& g, const VertexSet& s) {
  const auto d = distances(g);
  std::set<std::vector<Distance>> seen;
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::vector<Distance> code;
    for (auto w = s.find_first(); w != VertexSet::npos; w = s.find_next(w))
      code.push_back(d.at(Vertex(v), Vertex(w)));
    if (!seen.insert(code).second) return false;
  }
  return true;
}

bool is_locating_dominating(const Graph& g, const VertexSet& s) {
  if (!is_dominating(g, s)) return false;
  std::set<VertexSet> traces;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!s.test(v) && !traces.insert(g.neighbors(Vertex(v)) & s).second) return false;
  return true;
}

bool is_roman(const Graph& g, const std::vector<int>& f) {
  if (f.size() != g.order())
    throw MalformedWitnessError("Roman assignment covers " + std::to_string(f.size()) +
                                " of " + std::to_string(g.order()) + " vertices");
  VertexSet twos(g.order());
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] < 0 || f[v] > 2)
      throw MalformedWitnessError("Roman label " + std::to_string(f[v]) + " not in {0,1,2}");
    if (f[v] == 2) twos.set(v);
  }
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v] == 0 && !g.neighbors(Vertex(v)).intersects(twos)) return false;
  return true;
}

bool is_partition(std::size_t n, const std::vector<std::vector<Vertex>>& classes) {
  std::vector<int> hits(n, 0);
  for (const auto& c : classes)
    for (Vertex v : c) {
      if (v < 0 || std::size_t(v) >= n) return false;
      ++hits[v];
    }
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

bool is_domatic_partition(const Graph& g, const std::vector<std::vector<Vertex>>& classes) {
  if (!is_partition(g.order(), classes)) return false;
  for (const auto& c : classes)
    if (!is_dominating(g, make_set(g.order(), c))) return false;
  return true;
}

bool is_idomatic_partition(const Graph& g, const std::vector<std::vector<Vertex>>& classes) {
  if (!is_domatic_partition(g, classes)) return false;
  for (const auto& c : classes)
    if (!is_independent(g, make_set(g.order(), c))) return false;
  return true;
}

}  // namespace coronalab
