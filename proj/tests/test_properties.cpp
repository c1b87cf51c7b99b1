#include <gtest/gtest.h>

#include <omp.h>

#include <random>
#include <sstream>

#include "coronalab/coloring.hpp"
#include "coronalab/dimacs.hpp"
#include "coronalab/domination.hpp"
#include "coronalab/predicates.hpp"
#include "support/support.hpp"

using namespace coronalab;

namespace {

// Seeded random graphs of order 1..max_n, half of them forced connected by
// adding a random spanning tree first.
std::vector<Graph> random_graphs(std::uint64_t seed, int count, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    const double p = double(rng() % 100) / 100.0;
    std::vector<Edge> edges = generate(FamilySpec::random_gnp(n, p, rng())).edges();
    if (i % 2 == 0) {
      const auto tree = generate(FamilySpec::random_tree(n, rng())).edges();
      edges.insert(edges.end(), tree.begin(), tree.end());
    }
    out.push_back(build_graph(n, edges));
  }
  return out;
}

std::vector<Graph> connected_graphs(std::uint64_t seed, int count, std::size_t max_n) {
  std::vector<Graph> out;
  for (auto& g : random_graphs(seed, count, max_n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::string dump(const Graph& g) {
  std::ostringstream s;
  write_dimacs(s, g);
  return s.str();
}

}  // namespace

TEST(Properties, ParallelKernelsMatchReference) {
  for (const auto& g : random_graphs(101, 20, 60)) {
    for (int threads : {1, 3}) {
      omp_set_num_threads(threads);
      EXPECT_EQ(distances(g), reference::distances(g)) << dump(g);
      for (std::size_t k : {1u, 2u, 3u}) EXPECT_EQ(power(g, k), reference::power(g, k));
    }
  }
  omp_set_num_threads(1);
}

TEST(Properties, DimacsRoundTrip) {
  for (const auto& g : random_graphs(202, 30, 20)) {
    std::stringstream s;
    write_dimacs(s, g);
    EXPECT_EQ(read_dimacs(s), g);
  }
}

TEST(Properties, ColoringWitnessesAndMonotonicity) {
  for (const auto& g : random_graphs(303, 40, 9)) {
    int prev = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto r = distance_k_chromatic(g, k);
      EXPECT_TRUE(validate_coloring(g, k, r.witness)) << dump(g);
      EXPECT_GE(r.value, prev) << dump(g);
      prev = r.value;
    }
  }
}

TEST(Properties, DominationWitnessesAndMonotonicity) {
  for (const auto& g : connected_graphs(404, 40, 9)) {
    const std::size_t n = g.order();
    int prev_k = 0;
    int prev_dist = int(n) + 1;
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto gk = k_domination_number(g, k);
      EXPECT_TRUE(is_k_dominating(g, make_set(n, gk.set), k));
      EXPECT_GE(gk.value, prev_k) << dump(g);
      prev_k = gk.value;
      const auto gd = distance_k_domination_number(g, k);
      EXPECT_TRUE(is_distance_k_dominating(g, make_set(n, gd.set), k));
      EXPECT_LE(gd.value, prev_dist) << dump(g);
      prev_dist = gd.value;
    }
    const auto gamma = domination_number(g);
    EXPECT_EQ(gamma.value, k_domination_number(g, 1).value);
    EXPECT_EQ(gamma.value, distance_k_domination_number(g, 1).value);
    const auto i = independent_domination_number(g);
    EXPECT_TRUE(is_independent(g, make_set(n, i.set)) && is_dominating(g, make_set(n, i.set)));
    EXPECT_LE(gamma.value, i.value);
    EXPECT_LE(i.value, independence_number(g).value);
    const auto c = connected_domination_number(g);
    EXPECT_TRUE(is_connected_set(g, make_set(n, c.set)));
    EXPECT_LE(gamma.value, c.value);
  }
}

TEST(Properties, RomanSandwichAndWeight) {
  for (const auto& g : random_graphs(505, 40, 9)) {
    const auto r = roman_domination(g);
    const int gamma = domination_number(g).value;
    EXPECT_LE(gamma, r.value);
    EXPECT_LE(r.value, 2 * gamma);
    EXPECT_EQ(r.witness.weight(), 2 * r.witness.count(2) + r.witness.count(1));
    EXPECT_TRUE(is_roman(g, r.witness.values));
  }
}

TEST(Properties, LocationChain) {
  for (const auto& g : connected_graphs(606, 40, 9)) {
    const auto l = location_numbers(g);
    EXPECT_LE(l.dim.value, l.resolving_dominating.value) << dump(g);
    EXPECT_LE(l.resolving_dominating.value, l.locating_dominating.value) << dump(g);
    const std::size_t n = g.order();
    EXPECT_TRUE(is_resolving(g, make_set(n, l.dim.set)));
    EXPECT_TRUE(is_locating_dominating(g, make_set(n, l.locating_dominating.set)));
  }
}

TEST(Properties, PartitionWitnesses) {
  for (const auto& g : random_graphs(707, 30, 8)) {
    const auto d = domatic_number(g);
    EXPECT_TRUE(is_domatic_partition(g, d.classes));
    EXPECT_GE(d.value, 1);
    EXPECT_LE(d.value, int(g.min_degree()) + 1);
    if (const auto id = idomatic_number(g)) {
      EXPECT_TRUE(is_idomatic_partition(g, id->classes));
      EXPECT_LE(id->value, d.value);
    }
  }
}

TEST(Properties, CoronaShape) {
  const auto gs = connected_graphs(808, 16, 6);
  const auto hs = random_graphs(809, 16, 4);
  for (std::size_t i = 0; i < gs.size() && i < hs.size(); ++i) {
    const auto& g = gs[i];
    const auto& h = hs[i];
    const auto c = corona(g, h);
    const std::size_t n1 = g.order(), n2 = h.order();
    EXPECT_EQ(c.graph.order(), n1 * (1 + n2));
    EXPECT_EQ(c.graph.size(), g.size() + n1 * h.size() + n1 * n2);
    if (n1 >= 2) {
      EXPECT_EQ(diameter(c.graph), diameter(g) + 2);
    }
    EXPECT_EQ(chromatic_number(c.graph).value,
              std::max(chromatic_number(g).value, chromatic_number(h).value + 1));
    EXPECT_EQ(domination_number(c.graph, Caps{64, 48, 48, 48}).value, int(n1));
  }
}

TEST(Properties, ConstructedColoringsAreValid) {
  const auto gs = connected_graphs(909, 20, 6);
  const auto hs = random_graphs(910, 20, 3);
  for (std::size_t i = 0; i < gs.size() && i < hs.size(); ++i)
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto a = construct_corona_coloring(gs[i], hs[i], k);
      EXPECT_TRUE(validate_coloring(support::corona_graph(gs[i], hs[i]), k, a));
    }
}

TEST(Properties, OracleAgreementOnRandomGraphs) {
  int index = 0;
  for (const auto& g : random_graphs(1001, 30, 8)) {
    const auto bad = support::oracle_mismatches({"random#" + std::to_string(index++), g});
    for (const auto& line : bad) ADD_FAILURE() << line << "\n" << dump(g);
  }
}
