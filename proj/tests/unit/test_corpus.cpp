#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "outvcd/bounds.hpp"
#include "outvcd/corpus.hpp"

using namespace outvcd;

namespace {

std::size_t automorphism_count(const DefiningGraph& t) {
  std::vector<NodeId> perm(t.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const auto& e : t.edges()) ok = ok && t.adjacent(perm[e.u], perm[e.v]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(Corpus, FreeTreeCounts) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    const auto trees = free_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << n;
    for (const auto& t : trees) {
      EXPECT_EQ(t.node_count(), n);
      EXPECT_EQ(t.edge_count() + 1, n);
      EXPECT_EQ(oracle::components(t, n), 1u);
    }
  }
}

// Orbit counting: the classes account for all n^(n-2) labelled trees exactly
// when none is missing or repeated.
TEST(Corpus, FreeTreesCoverLabelledTrees) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::size_t factorial = 1, cayley = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    std::size_t labelled = 0;
    for (const auto& t : free_trees(n)) labelled += factorial / automorphism_count(t);
    EXPECT_EQ(labelled, cayley) << n;
  }
}

TEST(Corpus, NonStarTrees) {
  std::size_t total = 0;
  for (const auto& ng : nonstar_trees(9)) {
    const ValidationReport r = validate(ng.graph);
    EXPECT_TRUE(r.eligible) << ng.name;
    ++total;
  }
  // free trees on 4..9 nodes, minus one star each
  EXPECT_EQ(total, (2 + 3 + 6 + 11 + 23 + 47) - 6u);
}

TEST(Corpus, FixturesAreEligible) {
  for (const auto& g : {fixture_p5(), fixture_c5_leaf(), fixture_spider()}) EXPECT_TRUE(validate(g).eligible);
  EXPECT_EQ(fixture_spider().node_count(), 7u);
}

TEST(Corpus, CycleFixtures) {
  const auto fixtures = cycle_with_trees(8, 2024);
  EXPECT_EQ(fixtures.size(), 24u);
  std::set<std::size_t> lengths;
  for (const auto& ng : fixtures) {
    EXPECT_TRUE(validate(ng.graph).eligible) << ng.name;
    EXPECT_EQ(ng.graph.euler_characteristic(), 0) << ng.name;
    lengths.insert(*unique_cycle_length(ng.graph));
  }
  EXPECT_EQ(lengths, (std::set<std::size_t>{5, 6, 7}));
}

TEST(Corpus, GirthAndSquares) {
  for (const auto& ng : girth5_graphs()) {
    const ValidationReport r = validate(ng.graph);
    EXPECT_TRUE(r.eligible && r.square_free) << ng.name;
    EXPECT_LT(ng.graph.euler_characteristic(), 0) << ng.name;
  }
  for (const auto& ng : square_graphs()) {
    const ValidationReport r = validate(ng.graph);
    EXPECT_TRUE(r.eligible) << ng.name;
    EXPECT_FALSE(r.square_free) << ng.name;
  }
}

TEST(Corpus, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& ng : verification_corpus(9)) EXPECT_TRUE(names.insert(ng.name).second) << ng.name;
}
