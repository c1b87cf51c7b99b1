#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coronalab/caps.hpp"
#include "coronalab/graph.hpp"

namespace coronalab {

using Json = nlohmann::ordered_json;

enum class CheckKind { Equality, Bound, Biconditional, ReportedOnly };
enum class Outcome { Pass, Fail, Skip, Reported };

std::string to_string(CheckKind kind);
std::string to_string(Outcome outcome);

struct CheckSpec {
  std::string id;      // "T1" .. "T21"
  std::string anchor;  // the formula or phrase being checked
  CheckKind kind = CheckKind::Equality;
  std::string description;
};

/// T1..T21 in order.
const std::vector<CheckSpec>& check_catalog();
const CheckSpec& find_check(const std::string& id);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// One unit of work for a check: a graph, or a pair (G, H) standing for G⊙H,
/// plus the distance parameter where the check has one.
struct Instance {
  NamedGraph g;
  std::optional<NamedGraph> h;
  std::size_t k = 0;

  std::string name() const;
};

/// One evaluated claim. Hard claims end Pass or Fail; reported-only claims
/// end Reported with `agrees` set.
struct Detail {
  std::string instance;
  std::string claim;
  Outcome outcome = Outcome::Pass;
  Json expected;
  Json actual;
  std::string note;
  std::optional<bool> agrees;
  Json witness;  // filled on failures of constructions
};

/// Evaluates every claim of check `id` on one instance. Cap overruns become
/// Skip details; nothing else is swallowed.
std::vector<Detail> check_instance(const std::string& id, const Instance& inst,
                                   const Caps& caps);

struct Families {
  std::vector<NamedGraph> g;
  std::vector<NamedGraph> h;
};

/// G in {P2..P6, C3..C8, K2..K4, K1,3, K2,3, two random trees},
/// H in {K1, K2, K3, P3, C4, N2}.
Families default_families(std::uint64_t seed);

/// Instances of check `id`. With `custom` the check runs on the pairs and
/// graphs of those families instead of its own default list.
std::vector<Instance> check_instances(const std::string& id, const Families& fam,
                                      bool custom, std::uint64_t seed);

struct SuiteConfig {
  // Corona orders reach 40 in the default families.
  Caps caps{64, 48, 48, 48};
  std::uint64_t seed = 7;
  std::vector<std::string> checks;  // empty = all
  std::optional<Families> families;
  int jobs = 1;
  bool timing = false;
};

struct CheckReport {
  CheckSpec spec;
  int instances = 0;
  int pass = 0;
  int fail = 0;
  int skip = 0;
  int reported = 0;
  std::vector<Detail> details;

  /// No hard claim was evaluated.
  bool vacuous() const { return pass + fail == 0; }
};

struct TheoremReport {
  std::uint64_t seed = 0;
  Caps caps;
  std::vector<CheckReport> checks;
  std::optional<double> wall_seconds;  // only with SuiteConfig::timing

  bool clean() const;
};

/// Runs the selected checks. Instances run on up to `jobs` OpenMP threads;
/// the report does not depend on the thread count.
TheoremReport run_suite(const SuiteConfig& config);

Json to_json(const Detail& d);
Json to_json(const TheoremReport& r);

}  // namespace coronalab
