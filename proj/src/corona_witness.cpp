#include <algorithm>

#include "coronalab/coloring.hpp"
#include "coronalab/domination.hpp"
#include "coronalab/predicates.hpp"

namespace coronalab {
namespace {

[[noreturn]] void violated(WitnessKind kind, const std::string& why) {
  throw InapplicableError(to_string(kind) + ": hypothesis violated: " + why);
}

void check(bool ok, WitnessKind kind, const std::string& what) {
  if (!ok) throw ConstructionError(to_string(kind) + ": constructed witness " + what);
}

/// The H-vertices `hs` placed in every copy whose center satisfies `keep`.
template <class Keep>
void add_copies(const CoronaLabeling& lab, const std::vector<Vertex>& hs, Keep keep,
                std::vector<Vertex>& out) {
  for (int i = 0; i < int(lab.n1()); ++i)
    if (keep(i))
      for (Vertex j : hs) out.push_back(lab.copy_vertex(i, j));
}

CoronaWitness roman_k1(const Graph& g, const Graph& h, const Caps& caps) {
  if (h.order() != 1) violated(WitnessKind::RomanK1, "H = K1");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const auto rg = roman_domination(g, caps);
  CoronaWitness w;
  w.kind = WitnessKind::RomanK1;
  w.roman.values.assign(lab.order(), 0);
  for (int i = 0; i < int(g.order()); ++i) {
    const int f = rg.witness.values[i];
    w.roman.values[lab.center(i)] = f;
    w.roman.values[lab.copy_vertex(i, 0)] = f == 2 ? 0 : 1;
  }
  w.value = rg.value + int(g.order()) - rg.b2max;
  check(is_roman(product.graph, w.roman.values), w.kind, "is not a Roman function");
  check(w.roman.weight() == w.value, w.kind, "has the wrong weight");
  return w;
}

CoronaWitness k_dom(const Graph& g, const Graph& h, std::size_t k, const Caps& caps) {
  if (k < 2) violated(WitnessKind::KDom, "k >= 2");
  // A center outside the set needs k neighbors inside its own copy.
  if (h.order() < k) violated(WitnessKind::KDom, "n2 >= k");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const auto gk = k_domination_number(h, k, caps);
  const auto gk1 = k_domination_number(h, k - 1, caps);
  CoronaWitness w;
  w.kind = WitnessKind::KDom;
  w.k = k;
  const auto all = [](int) { return true; };
  if (gk.value <= gk1.value + 1) {
    add_copies(lab, gk.set, all, w.set);
  } else {
    for (int i = 0; i < int(g.order()); ++i) w.set.push_back(lab.center(i));
    add_copies(lab, gk1.set, all, w.set);
  }
  std::sort(w.set.begin(), w.set.end());
  w.value = int(g.order()) * std::min(gk.value, gk1.value + 1);
  check(is_k_dominating(product.graph, make_set(lab.order(), w.set), k), w.kind,
        "is not k-dominating");
  check(int(w.set.size()) == w.value, w.kind, "has the wrong size");
  return w;
}

CoronaWitness dist_k_dom(const Graph& g, const Graph& h, std::size_t k, const Caps& caps) {
  if (k < 2) violated(WitnessKind::DistKDom, "k >= 2");
  if (!is_connected(g)) violated(WitnessKind::DistKDom, "G connected");
  const auto product = corona(g, h);
  const auto d = distance_k_domination_number(g, k - 1, caps);
  CoronaWitness w;
  w.kind = WitnessKind::DistKDom;
  w.k = k;
  w.set = d.set;  // centers keep their ids
  w.value = d.value;
  check(is_distance_k_dominating(product.graph, make_set(product.graph.order(), w.set), k),
        w.kind, "is not distance-k dominating");
  return w;
}

CoronaWitness indep_dom(const Graph& g, const Graph& h, const Caps& caps) {
  if (h.order() == 0) violated(WitnessKind::IndepDom, "n2 >= 1");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const auto a = independence_number(g, caps);
  const auto ih = independent_domination_number(h, caps);
  const VertexSet in_a = make_set(g.order(), a.set);
  CoronaWitness w;
  w.kind = WitnessKind::IndepDom;
  w.set = a.set;
  add_copies(lab, ih.set, [&](int i) { return !in_a.test(i); }, w.set);
  std::sort(w.set.begin(), w.set.end());
  w.value = int(g.order()) * ih.value - a.value * (ih.value - 1);
  const VertexSet s = make_set(lab.order(), w.set);
  check(is_independent(product.graph, s) && is_dominating(product.graph, s), w.kind,
        "is not independent dominating");
  check(int(w.set.size()) == w.value, w.kind, "has the wrong size");
  return w;
}

CoronaWitness ld(const Graph& g, const Graph& h, const Caps& caps) {
  if (h.order() == 0 || !is_connected(h)) violated(WitnessKind::Ld, "H connected");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const auto cls = ld_case_classify(h, caps);
  const auto all = [](int) { return true; };
  const int n1 = int(g.order());
  CoronaWitness w;
  w.kind = WitnessKind::Ld;
  if (cls.kind == LdCase::Kind::CaseI) {
    add_copies(lab, cls.evidence, all, w.set);
    w.value = n1 * cls.min_size;
  } else {
    const auto d = domination_number(g, caps);
    w.set = d.set;
    add_copies(lab, cls.witnesses.front().first, all, w.set);
    w.value = n1 * cls.min_size + d.value;
  }
  std::sort(w.set.begin(), w.set.end());
  check(is_locating_dominating(product.graph, make_set(lab.order(), w.set)), w.kind,
        "is not locating-dominating");
  check(int(w.set.size()) == w.value, w.kind, "has the wrong size");
  return w;
}

CoronaWitness domatic(const Graph& g, const Graph& h, const Caps& caps) {
  if (h.order() == 0) violated(WitnessKind::Domatic, "n2 >= 1");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const auto dh = domatic_number(h, caps);
  CoronaWitness w;
  w.kind = WitnessKind::Domatic;
  for (const auto& c : dh.classes) {
    std::vector<Vertex> cls;
    add_copies(lab, c, [](int) { return true; }, cls);
    w.partition.push_back(cls);
  }
  std::vector<Vertex> centers;
  for (int i = 0; i < int(g.order()); ++i) centers.push_back(lab.center(i));
  w.partition.push_back(centers);
  for (auto& c : w.partition) std::sort(c.begin(), c.end());
  w.value = dh.value + 1;
  check(is_domatic_partition(product.graph, w.partition), w.kind,
        "is not a domatic partition");
  return w;
}

CoronaWitness idomatic(const Graph& g, const Graph& h, const Caps& caps) {
  const auto ih = idomatic_number(h, caps);
  if (!ih || h.order() == 0) violated(WitnessKind::Idomatic, "H idomatic");
  const int t = ih->value + 1;
  if (!independent_partition_exists(g, std::size_t(t), caps))
    violated(WitnessKind::Idomatic, "chi(G) <= d_i(H) + 1");
  const auto product = corona(g, h);
  const auto& lab = product.labeling;
  const auto cg = chromatic_number(g, caps).witness.colors;
  std::vector<int> hclass(h.order());
  for (int j = 0; j < int(ih->classes.size()); ++j)
    for (Vertex u : ih->classes[j]) hclass[u] = j;
  CoronaWitness w;
  w.kind = WitnessKind::Idomatic;
  w.partition.assign(std::size_t(t), {});
  for (int i = 0; i < int(g.order()); ++i) {
    w.partition[cg[i]].push_back(lab.center(i));
    // Copy i skips the class of its center.
    for (int j = 0; j < int(h.order()); ++j) {
      const int c = hclass[j] < cg[i] ? hclass[j] : hclass[j] + 1;
      w.partition[c].push_back(lab.copy_vertex(i, j));
    }
  }
  for (auto& c : w.partition) std::sort(c.begin(), c.end());
  w.value = t;
  check(is_idomatic_partition(product.graph, w.partition), w.kind,
        "is not an idomatic partition");
  return w;
}

}  // namespace

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::RomanK1: return "roman-k1";
    case WitnessKind::KDom: return "k-dom";
    case WitnessKind::DistKDom: return "dist-k-dom";
    case WitnessKind::IndepDom: return "indep-dom";
    case WitnessKind::Ld: return "ld";
    case WitnessKind::Domatic: return "domatic";
    case WitnessKind::Idomatic: return "idomatic";
  }
  return "?";
}

CoronaWitness construct_corona_witness(WitnessKind kind, const Graph& g, const Graph& h,
                                       std::size_t k, const Caps& caps) {
  if (g.order() == 0) throw PreconditionError("construct_corona_witness: G has no vertex");
  switch (kind) {
    case WitnessKind::RomanK1: return roman_k1(g, h, caps);
    case WitnessKind::KDom: return k_dom(g, h, k, caps);
    case WitnessKind::DistKDom: return dist_k_dom(g, h, k, caps);
    case WitnessKind::IndepDom: return indep_dom(g, h, caps);
    case WitnessKind::Ld: return ld(g, h, caps);
    case WitnessKind::Domatic: return domatic(g, h, caps);
    case WitnessKind::Idomatic: return idomatic(g, h, caps);
  }
  throw PreconditionError("construct_corona_witness: unknown kind");
}

}  // namespace coronalab
