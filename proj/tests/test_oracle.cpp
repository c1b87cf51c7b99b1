#include <gtest/gtest.h>

#include "oracle/oracle.hpp"
#include "support/support.hpp"

using support::complete;
using support::cycle;
using support::path;

// The oracle itself on values known by hand.
TEST(Oracle, HandValues) {
  EXPECT_EQ(oracle::domination(path(5)).value, 2);
  EXPECT_EQ(oracle::connected_domination(path(5)).value, 3);
  EXPECT_EQ(oracle::distance_k_chromatic(cycle(5), 1), 3);
  EXPECT_EQ(oracle::distance_k_chromatic(cycle(6), 2), 3);
  EXPECT_EQ(oracle::metric_dimension(path(4)).value, 1);
  EXPECT_EQ(oracle::metric_dimension(complete(4)).value, 3);
  EXPECT_EQ(oracle::roman(path(3)).value, 2);
  EXPECT_EQ(oracle::domatic(cycle(4)), 2);
  EXPECT_FALSE(oracle::idomatic(cycle(5)));
  EXPECT_EQ(oracle::distances(support::empty(2))[0][1], -1);
}

TEST(Oracle, DefaultFamilyGraphsAgree) {
  const auto graphs = support::default_family_graphs(9);
  ASSERT_GT(graphs.size(), 25u);
  for (const auto& g : graphs)
    for (const auto& line : support::oracle_mismatches(g)) ADD_FAILURE() << line;
}
