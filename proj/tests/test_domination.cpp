#include <gtest/gtest.h>

#include "coronalab/domination.hpp"
#include "coronalab/errors.hpp"
#include "coronalab/predicates.hpp"
#include "support/support.hpp"

using namespace coronalab;
using support::complete;
using support::corona_graph;
using support::cycle;
using support::empty;
using support::path;
using support::star;

TEST(Domination, Examples) {
  EXPECT_EQ(domination_number(path(5)).value, 2);
  EXPECT_EQ(connected_domination_number(path(5)).value, 3);
  EXPECT_EQ(independence_number(cycle(5)).value, 2);
  EXPECT_EQ(independent_domination_number(corona_graph(path(3), empty(2))).value, 4);
  EXPECT_EQ(k_domination_number(cycle(4), 2).value, 2);
  EXPECT_EQ(k_domination_number(corona_graph(path(2), cycle(4)), 2).value, 4);
  EXPECT_EQ(distance_k_domination_number(path(5), 2).value, 1);
  EXPECT_EQ(distance_k_domination_number(corona_graph(path(5), complete(1)), 2).value, 2);
}

TEST(Domination, WitnessesAreLexFirstAndFeasible) {
  const auto r = domination_number(path(5));
  EXPECT_EQ(r.set, (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(is_dominating(path(5), make_set(5, r.set)));
  const auto b = independence_number(cycle(5));
  EXPECT_EQ(b.set, (std::vector<Vertex>{0, 2}));
}

TEST(Domination, Preconditions) {
  const Graph split = empty(3);
  EXPECT_THROW(connected_domination_number(split), PreconditionError);
  EXPECT_THROW(metric_dimension(split), PreconditionError);
  EXPECT_THROW(k_domination_number(path(3), 0), PreconditionError);
  Caps caps;
  caps.subset = 4;
  EXPECT_THROW(domination_number(path(5), caps), SizeLimitError);
  EXPECT_EQ(domination_number(empty(3)).value, 3);
}

TEST(Roman, Examples) {
  const auto p3 = roman_domination(path(3));
  EXPECT_EQ(p3.value, 2);
  EXPECT_EQ(p3.b2max, 1);
  EXPECT_EQ(roman_domination(corona_graph(cycle(4), complete(2))).value, 8);
  EXPECT_EQ(roman_domination(complete(1)).value, 1);
}

TEST(Roman, WitnessWeightMatchesCounts) {
  const Graph g = corona_graph(path(3), complete(1));
  const auto r = roman_domination(g);
  EXPECT_TRUE(is_roman(g, r.witness.values));
  EXPECT_EQ(r.witness.weight(), r.value);
  EXPECT_EQ(r.witness.weight(), 2 * r.witness.count(2) + r.witness.count(1));
  EXPECT_EQ(r.witness.count(2), r.b2max);
  EXPECT_THROW(is_roman(g, {0, 1}), MalformedWitnessError);
}

TEST(Location, PathNumbers) {
  const auto l = location_numbers(path(4));
  EXPECT_EQ(l.dim.value, 1);
  EXPECT_EQ(l.locating_dominating.value, 2);
  EXPECT_LE(l.dim.value, l.resolving_dominating.value);
  EXPECT_LE(l.resolving_dominating.value, l.locating_dominating.value);
  EXPECT_EQ(locating_domination_number(corona_graph(path(3), complete(2))).value, 4);
}

TEST(Location, SingleVertex) {
  EXPECT_EQ(metric_dimension(complete(1)).value, 0);
  EXPECT_EQ(resolving_domination_number(complete(1)).value, 1);
}

TEST(Location, CaseClassification) {
  EXPECT_EQ(ld_case_classify(path(3)).kind, LdCase::Kind::CaseI);
  EXPECT_EQ(ld_case_classify(complete(2)).kind, LdCase::Kind::CaseII);
  EXPECT_EQ(ld_case_classify(complete(1)).kind, LdCase::Kind::CaseI);
}

TEST(Location, MinimumSetsAreAllLocatingDominating) {
  const Graph g = path(4);
  const auto sets = minimum_locating_dominating_sets(g);
  ASSERT_FALSE(sets.empty());
  for (const auto& s : sets) {
    EXPECT_EQ(int(s.size()), locating_domination_number(g).value);
    EXPECT_TRUE(is_locating_dominating(g, make_set(4, s)));
  }
}

TEST(Partitions, Domatic) {
  EXPECT_EQ(domatic_number(cycle(4)).value, 2);
  const Graph g = corona_graph(path(3), cycle(4));
  const auto d = domatic_number(g, Caps{64, 20, 16, 14});
  EXPECT_EQ(d.value, 3);
  EXPECT_TRUE(is_domatic_partition(g, d.classes));
}

TEST(Partitions, Idomatic) {
  const auto k2 = idomatic_number(complete(2));
  ASSERT_TRUE(k2);
  EXPECT_EQ(k2->value, 2);
  EXPECT_FALSE(idomatic_number(cycle(5)));
  const Graph g = corona_graph(path(4), complete(2));
  const auto d = idomatic_number(g);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->value, 3);
  EXPECT_TRUE(is_idomatic_partition(g, d->classes));
}

TEST(Partitions, IndependentPartitionExists) {
  EXPECT_TRUE(independent_partition_exists(path(4), 3));
  EXPECT_FALSE(independent_partition_exists(complete(4), 3));
  EXPECT_TRUE(independent_partition_exists(complete(2), 3));
}

TEST(Partitions, CapIsEnforced) {
  Caps caps;
  caps.partition = 6;
  EXPECT_THROW(domatic_number(path(7), caps), SizeLimitError);
}

TEST(Witness, RomanK1) {
  const auto w = construct_corona_witness(WitnessKind::RomanK1, path(3), complete(1));
  EXPECT_EQ(w.value, 4);
  EXPECT_EQ(w.roman.weight(), 4);
  EXPECT_EQ(roman_domination(corona_graph(path(3), complete(1))).value, 4);
  EXPECT_THROW(construct_corona_witness(WitnessKind::RomanK1, path(3), complete(2)),
               InapplicableError);
}

TEST(Witness, DistanceKDomination) {
  const auto w = construct_corona_witness(WitnessKind::DistKDom, path(5), complete(1), 2);
  EXPECT_EQ(w.value, 2);
  EXPECT_EQ(w.set.size(), 2u);
  const Graph g = corona_graph(path(5), complete(1));
  EXPECT_TRUE(is_distance_k_dominating(g, make_set(g.order(), w.set), 2));
}

TEST(Witness, KDominationNeedsLargeCopies) {
  EXPECT_THROW(construct_corona_witness(WitnessKind::KDom, path(3), complete(1), 2),
               InapplicableError);
  const auto w = construct_corona_witness(WitnessKind::KDom, path(3), cycle(4), 2);
  const Graph g = corona_graph(path(3), cycle(4));
  EXPECT_TRUE(is_k_dominating(g, make_set(g.order(), w.set), 2));
  EXPECT_EQ(w.value, k_domination_number(g, 2).value);
}

TEST(Witness, IndependentAndLocating) {
  const Graph g = corona_graph(cycle(4), path(3));
  const auto i = construct_corona_witness(WitnessKind::IndepDom, cycle(4), path(3));
  EXPECT_EQ(i.value, independent_domination_number(g).value);
  const auto ld = construct_corona_witness(WitnessKind::Ld, cycle(4), path(3));
  EXPECT_EQ(ld.value, locating_domination_number(g).value);
  EXPECT_TRUE(is_locating_dominating(g, make_set(g.order(), ld.set)));
}

TEST(Witness, Partitions) {
  const auto d = construct_corona_witness(WitnessKind::Domatic, path(3), complete(2));
  const Graph g = corona_graph(path(3), complete(2));
  EXPECT_TRUE(is_domatic_partition(g, d.partition));
  EXPECT_EQ(d.value, domatic_number(g).value);
  const auto id = construct_corona_witness(WitnessKind::Idomatic, path(4), complete(2));
  EXPECT_TRUE(is_idomatic_partition(corona_graph(path(4), complete(2)), id.partition));
}
