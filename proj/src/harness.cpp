#include <algorithm>
#include <chrono>
#include <set>

#include <omp.h>

#include "coronalab/harness.hpp"
#include "harness_claims.hpp"

namespace coronalab {
namespace {

NamedGraph named(const FamilySpec& spec) { return {family_name(spec), generate(spec)}; }

NamedGraph forest_p2_p3() {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {3, 4}};
  return {"P2+P3", Graph::from_edges(5, edges)};
}

std::vector<Instance> pairs(const Families& fam, std::size_t k = 0) {
  std::vector<Instance> out;
  for (const auto& g : fam.g)
    for (const auto& h : fam.h) out.push_back({g, h, k});
  return out;
}

// G and H graphs by themselves, each name once.
std::vector<Instance> singles(const Families& fam) {
  std::vector<Instance> out;
  std::set<std::string> seen;
  for (const auto* list : {&fam.g, &fam.h})
    for (const auto& g : *list)
      if (seen.insert(g.name).second) out.push_back({g, std::nullopt, 0});
  return out;
}

std::vector<Instance> concat(std::vector<Instance> a, const std::vector<Instance>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Instance> with_k(const std::vector<Instance>& base, std::size_t lo,
                             std::size_t hi) {
  std::vector<Instance> out;
  for (const auto& inst : base)
    for (std::size_t k = lo; k <= hi; ++k) {
      out.push_back(inst);
      out.back().k = k;
    }
  return out;
}

}  // namespace

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Equality: return "equality";
    case CheckKind::Bound: return "bound";
    case CheckKind::Biconditional: return "biconditional";
    case CheckKind::ReportedOnly: return "reported-only";
  }
  return "?";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
    case Outcome::Reported: return "reported";
  }
  return "?";
}

const std::vector<CheckSpec>& check_catalog() {
  static const std::vector<CheckSpec> catalog{
      {"T1", "max{χ(G),χ(H)+1}", CheckKind::Equality,
       "chromatic number of G⊙H, exact and by construction"},
      {"T2", "χ≤k(G)=n ⟺ D(G)≤k", CheckKind::Biconditional,
       "full palette exactly when the diameter is at most k"},
      {"T3", "Δ1+n2+1 ≤ χ≤2(G⊙H) ≤ χ≤2(G)+n2", CheckKind::Bound,
       "distance-2 bounds and the distance-2 construction"},
      {"T4", "χ≤2(G⊙H)=n2+3 | n2+Δ1+1", CheckKind::Equality,
       "distance-2 values on paths, cycles C3t and trees"},
      {"T5", "5=χ≤2(C⊙N2)<6, t+2<χ≤2(K_{s,t}⊙K1)=s+t<s+t+1", CheckKind::Bound,
       "instances where the distance-2 bounds are not attained"},
      {"T6", "2n2+Δ1+δ1 ≤ χ≤3(G⊙H) ≤ χ≤3(G)+n2(Δ1+1)", CheckKind::Bound,
       "distance-3 bounds and the distance-3 construction"},
      {"T7", "χ≤3(C4⊙H)=2n2+4, χ≤3(K_n1⊙H)=n1n2+n1", CheckKind::Equality,
       "distance-3 bounds attained"},
      {"T8", "χ≤3(T⊙H)=2n2+Δij(T)", CheckKind::Equality, "distance-3 value on trees"},
      {"T9", "n2(k-1)+k+1", CheckKind::Equality,
       "distance-k value on paths, k < n1 and k = n1"},
      {"T10", "γ(G)≤γ_R(G)≤2γ(G)", CheckKind::Bound, "Roman sandwich"},
      {"T11", "γ_R(G⊙H)=2n1", CheckKind::Equality, "Roman number of G⊙H for n2 >= 2"},
      {"T12", "γ_R(G)+n/2 ≤ γ_R(G⊙K1) ≤ γ_R(G)+n-1", CheckKind::Bound,
       "Roman number of G⊙K1; the b2 formula is reported"},
      {"T13", "dim ≤ γ_ld ≤ γ_l-d", CheckKind::Bound,
       "location chain, and dim = γ_ld on G⊙H"},
      {"T14", "nγ_l-d(H) | nγ_l-d(H)+γ(G)", CheckKind::Equality,
       "locating-dominating sets of G⊙H by the case of H"},
      {"T15", "n min{γ_k(H),γ_{k-1}(H)+1}", CheckKind::Equality, "k-domination of G⊙H"},
      {"T16", "γ≤k(G⊙H)=γ≤k-1(G)", CheckKind::Equality, "distance-k domination of G⊙H"},
      {"T17", "ni(H)-β0(G)(i(H)-1)", CheckKind::Equality,
       "independent domination, independence, domination and connected domination"},
      {"T18", "d(G⊙H)=d(H)+1", CheckKind::Equality, "domatic number of G⊙H"},
      {"T19", "d_i(G⊙H)=d_i(H)+1 ⟺ χ(G)≤d_i(H)+1", CheckKind::Biconditional,
       "idomatic number; the converse is reported under both readings"},
      {"T20", "D(G⊙H)=D(G)+2", CheckKind::Equality, "diameter of G⊙H"},
      {"T21", "1+δ(v)∑(δ-1)^i", CheckKind::Bound,
       "ball sizes and girth lower bounds on χ≤k"},
  };
  return catalog;
}

const CheckSpec& find_check(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return c;
  throw PreconditionError("unknown check id '" + id + "'");
}

std::string Instance::name() const {
  std::string s = h ? g.name + "⊙" + h->name : g.name;
  if (k > 0) s += " k=" + std::to_string(k);
  return s;
}

Families default_families(std::uint64_t seed) {
  Families f;
  for (std::size_t n = 2; n <= 6; ++n) f.g.push_back(named(FamilySpec::path(n)));
  for (std::size_t n = 3; n <= 8; ++n) f.g.push_back(named(FamilySpec::cycle(n)));
  for (std::size_t n = 2; n <= 4; ++n) f.g.push_back(named(FamilySpec::complete(n)));
  f.g.push_back(named(FamilySpec::star(3)));
  f.g.push_back(named(FamilySpec::complete_bipartite(2, 3)));
  f.g.push_back(named(FamilySpec::random_tree(5, seed)));
  f.g.push_back(named(FamilySpec::random_tree(6, seed + 1)));
  for (std::size_t n = 1; n <= 3; ++n) f.h.push_back(named(FamilySpec::complete(n)));
  f.h.push_back(named(FamilySpec::path(3)));
  f.h.push_back(named(FamilySpec::cycle(4)));
  f.h.push_back(named(FamilySpec::empty(2)));
  return f;
}

std::vector<Instance> check_instances(const std::string& id, const Families& fam, bool custom,
                                      std::uint64_t seed) {
  find_check(id);
  const auto all_pairs = pairs(fam);
  if (id == "T2") return with_k(concat(singles(fam), all_pairs), 1, 4);
  if (id == "T10" || id == "T13") return concat(singles(fam), all_pairs);
  if (id == "T15" || id == "T16") return with_k(all_pairs, 2, 4);
  if (id == "T9") {
    std::vector<Instance> out;
    for (const auto& inst : all_pairs) {
      const auto n1 = inst.g.graph.order();
      if (is_path(inst.g.graph) && n1 >= 2)
        for (std::size_t k = 2; k <= n1; ++k) out.push_back({inst.g, inst.h, k});
      else
        out.push_back(inst);
    }
    return out;
  }
  if (id == "T14" || id == "T20") {
    if (custom) return all_pairs;
    // K1⊙H: the single-copy case of the location formulas, and the n1 = 1
    // instances left out of the diameter identity.
    std::vector<Instance> out;
    const NamedGraph k1 = named(FamilySpec::complete(1));
    for (const auto& h : fam.h) out.push_back({k1, h, 0});
    return concat(out, all_pairs);
  }
  if (id == "T5" && !custom) {
    const NamedGraph n2 = named(FamilySpec::empty(2));
    const NamedGraph k1 = named(FamilySpec::complete(1));
    std::vector<Instance> out;
    for (std::size_t n : {4, 7, 5, 8}) out.push_back({named(FamilySpec::cycle(n)), n2, 0});
    out.push_back({named(FamilySpec::complete_bipartite(3, 3)), k1, 0});
    out.push_back({named(FamilySpec::complete_bipartite(3, 4)), k1, 0});
    return out;
  }
  if (id == "T21") {
    if (custom) return singles(fam);
    std::vector<Instance> out;
    for (std::size_t n = 5; n <= 9; ++n) out.push_back({named(FamilySpec::cycle(n)), {}, 0});
    for (std::size_t n = 3; n <= 6; ++n) out.push_back({named(FamilySpec::path(n)), {}, 0});
    out.push_back({named(FamilySpec::star(3)), {}, 0});
    out.push_back({named(FamilySpec::random_tree(5, seed)), {}, 0});
    out.push_back({named(FamilySpec::random_tree(6, seed + 1)), {}, 0});
    out.push_back({forest_p2_p3(), {}, 0});
    return out;
  }
  return all_pairs;
}

std::vector<Detail> check_instance(const std::string& id, const Instance& inst,
                                   const Caps& caps) {
  const auto body = detail::check_body(id);
  std::vector<Detail> out;
  detail::Claims claims(out, inst.name());
  try {
    body(claims, inst, caps);
  } catch (const SizeLimitError& e) {
    claims.skip("solver cap", e.what());
  } catch (const Error& e) {
    // Every hypothesis is tested before a solver or construction is called,
    // so an error here is a genuine failure.
    claims.holds("evaluation", false, "no error", e.what());
  }
  return out;
}

bool TheoremReport::clean() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.fail == 0 && !c.vacuous(); });
}

TheoremReport run_suite(const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const bool custom = config.families.has_value();
  const Families fam = custom ? *config.families : default_families(config.seed);

  std::vector<std::string> ids = config.checks;
  if (ids.empty())
    for (const auto& c : check_catalog()) ids.push_back(c.id);

  TheoremReport report;
  report.seed = config.seed;
  report.caps = config.caps;

  struct Task {
    std::size_t check;
    Instance inst;
  };
  std::vector<Task> tasks;
  for (const auto& id : ids) {
    CheckReport c;
    c.spec = find_check(id);
    report.checks.push_back(std::move(c));
    for (auto& inst : check_instances(id, fam, custom, config.seed))
      tasks.push_back({report.checks.size() - 1, std::move(inst)});
  }

  // Results land in task order whatever the schedule.
  std::vector<std::vector<Detail>> results(tasks.size());
  const int jobs = std::max(1, config.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (std::size_t t = 0; t < tasks.size(); ++t)
    results[t] = check_instance(report.checks[tasks[t].check].spec.id, tasks[t].inst,
                                config.caps);

  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto& c = report.checks[tasks[t].check];
    ++c.instances;
    for (auto& d : results[t]) {
      switch (d.outcome) {
        case Outcome::Pass: ++c.pass; break;
        case Outcome::Fail: ++c.fail; break;
        case Outcome::Skip: ++c.skip; break;
        case Outcome::Reported: ++c.reported; break;
      }
      c.details.push_back(std::move(d));
    }
  }
  if (config.timing)
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const Detail& d) {
  Json j{{"instance", d.instance}, {"claim", d.claim}, {"outcome", to_string(d.outcome)}};
  if (!d.expected.is_null()) j["expected"] = d.expected;
  if (!d.actual.is_null()) j["actual"] = d.actual;
  if (d.agrees) j["agrees"] = *d.agrees;
  if (!d.note.empty()) j["note"] = d.note;
  if (!d.witness.is_null()) j["witness"] = d.witness;
  return j;
}

Json to_json(const TheoremReport& r) {
  Json suite{{"seed", r.seed},
             {"caps",
              {{"coloring", r.caps.coloring},
               {"subset", r.caps.subset},
               {"partition", r.caps.partition},
               {"roman", r.caps.roman}}},
             {"checks", r.checks.size()},
             {"clean", r.clean()}};
  if (r.wall_seconds) suite["wall_seconds"] = *r.wall_seconds;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json details = Json::array();
    for (const auto& d : c.details) details.push_back(to_json(d));
    checks.push_back({{"id", c.spec.id},
                      {"anchor", c.spec.anchor},
                      {"kind", to_string(c.spec.kind)},
                      {"description", c.spec.description},
                      {"instances", c.instances},
                      {"pass", c.pass},
                      {"fail", c.fail},
                      {"skip", c.skip},
                      {"reported", c.reported},
                      {"vacuous", c.vacuous()},
                      {"details", std::move(details)}});
  }
  return {{"suite", std::move(suite)}, {"checks", std::move(checks)}};
}

}  // namespace coronalab
