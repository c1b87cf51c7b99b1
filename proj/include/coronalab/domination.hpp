#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coronalab/caps.hpp"
#include "coronalab/graph.hpp"

namespace coronalab {

enum class Parameter {
  Chi,
  ChiK,
  Gamma,
  GammaC,
  GammaK,
  GammaDistK,
  IndependentDomination,  // i
  Independence,           // beta_0
  GammaR,
  Dim,
  GammaLd,   // resolving and dominating
  GammaL_D,  // locating-dominating
  Domatic,
  Idomatic,
};

/// Stable tag used in JSON ("gamma", "gamma_l_d", ...).
std::string to_string(Parameter p);
/// Inverse of to_string; throws PreconditionError on unknown tags.
Parameter parse_parameter(const std::string& tag);

/// Certified value of a set-valued parameter with one optimal witness.
struct DominationResult {
  Parameter parameter = Parameter::Gamma;
  std::size_t k = 0;          // only for GammaK / GammaDistK
  int value = 0;
  std::vector<Vertex> set;    // sorted
  std::uint64_t nodes = 0;    // search nodes
};

/// f : V -> {0, 1, 2}.
struct RomanAssignment {
  std::vector<int> values;

  int weight() const;
  int count(int label) const;  // b_label
};

struct RomanResult {
  int value = 0;
  RomanAssignment witness;  // a minimum-weight function with b2 = b2max
  int b2max = 0;            // max b2 over all minimum-weight functions
  std::uint64_t nodes = 0;
};

struct PartitionResult {
  Parameter parameter = Parameter::Domatic;
  int value = 0;
  std::vector<std::vector<Vertex>> classes;
  std::uint64_t nodes = 0;
};

struct LocationNumbers {
  DominationResult dim;
  DominationResult resolving_dominating;   // gamma_ld
  DominationResult locating_dominating;    // gamma_l-d
};

/// Classification of H by its minimum locating-dominating sets.
struct LdCase {
  enum class Kind { CaseI, CaseII };
  Kind kind = Kind::CaseI;
  int min_size = 0;
  /// CaseI: a minimum set A whose outside traces are all proper subsets of A.
  std::vector<Vertex> evidence;
  /// CaseII: every minimum set B with a vertex u outside B and N_B(u) = B.
  std::vector<std::pair<std::vector<Vertex>, Vertex>> witnesses;
};

// Set parameters. All results are exact; search is bounded by caps.subset.
// The witness is the lexicographically first optimal set.

DominationResult domination_number(const Graph& g, const Caps& caps = {});
/// Requires g connected.
DominationResult connected_domination_number(const Graph& g, const Caps& caps = {});
/// Maximum independent set size.
DominationResult independence_number(const Graph& g, const Caps& caps = {});
DominationResult independent_domination_number(const Graph& g, const Caps& caps = {});
/// Every vertex outside S has at least k neighbors in S.
DominationResult k_domination_number(const Graph& g, std::size_t k, const Caps& caps = {});
/// Every vertex within distance k of S. Requires g connected.
DominationResult distance_k_domination_number(const Graph& g, std::size_t k,
                                              const Caps& caps = {});

/// gamma_R with b2max from full enumeration at the optimum weight (caps.roman).
RomanResult roman_domination(const Graph& g, const Caps& caps = {});

/// dim, gamma_ld and gamma_l-d. Requires g connected.
LocationNumbers location_numbers(const Graph& g, const Caps& caps = {});
DominationResult metric_dimension(const Graph& g, const Caps& caps = {});
DominationResult resolving_domination_number(const Graph& g, const Caps& caps = {});
DominationResult locating_domination_number(const Graph& g, const Caps& caps = {});
/// Every minimum locating-dominating set, in lexicographic order.
std::vector<std::vector<Vertex>> minimum_locating_dominating_sets(const Graph& g,
                                                                  const Caps& caps = {});
LdCase ld_case_classify(const Graph& h, const Caps& caps = {});

/// Maximum partition into dominating sets (caps.partition).
PartitionResult domatic_number(const Graph& g, const Caps& caps = {});
/// Maximum partition into independent dominating sets; nullopt when none exists.
std::optional<PartitionResult> idomatic_number(const Graph& g, const Caps& caps = {});
/// True iff V splits into t independent sets, empty classes allowed (chi <= t).
bool independent_partition_exists(const Graph& g, std::size_t t, const Caps& caps = {});

// Constructive witnesses on G⊙H

enum class WitnessKind { RomanK1, KDom, DistKDom, IndepDom, Ld, Domatic, Idomatic };

std::string to_string(WitnessKind kind);

struct CoronaWitness {
  WitnessKind kind = WitnessKind::RomanK1;
  std::size_t k = 0;
  int value = 0;                               // size, weight or class count
  std::vector<Vertex> set;                     // KDom, DistKDom, IndepDom, Ld
  RomanAssignment roman;                       // RomanK1
  std::vector<std::vector<Vertex>> partition;  // Domatic, Idomatic
};

/// Builds the witness on corona(g, h) from optimal witnesses of the factors
/// and re-checks it with the defining predicate. Its value equals the closed
/// form for the kind. Throws InapplicableError outside the hypothesis.
CoronaWitness construct_corona_witness(WitnessKind kind, const Graph& g, const Graph& h,
                                       std::size_t k = 0, const Caps& caps = {});

}  // namespace coronalab
