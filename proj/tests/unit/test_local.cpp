#include <gtest/gtest.h>

#include <random>

#include "outvcd/bounds.hpp"
#include "outvcd/corpus.hpp"
#include "outvcd/local.hpp"

using namespace outvcd;

class LocalP5 : public ::testing::Test {
 protected:
  ArtinGroupPtr group = make_group(fixture_p5());
  NodeId id(const char* name) const { return group->graph().id(name); }
  Word w(const char* text) const { return group->parse(text); }
  // image of a link node in the local free group, in Γ names
  std::string local_image(const LocalAutomorphism& l, const char* node) const {
    return l.free_group->format(l.map.image(*l.local_id(id(node))));
  }
};

TEST_F(LocalP5, ProjectPartialConjugation) {
  const RaagAutomorphism phi = partial_conjugation(group, std::vector<NodeId>{id("d"), id("e")}, id("b"));
  const LocalAutomorphism at_c = project_local(phi, id("c"));
  EXPECT_EQ(local_image(at_c, "b"), "b");
  EXPECT_EQ(local_image(at_c, "d"), "b d b^-1");
  EXPECT_TRUE(at_c.invertibility_certified);
  EXPECT_TRUE(is_trivial_outer(at_c));  // conjugation by b in F(b, d)

  const LocalAutomorphism at_b = project_local(phi, id("b"));
  EXPECT_TRUE(at_b.map.is_identity());
  EXPECT_TRUE(is_trivial_outer(at_b));
}

TEST(Local, ProjectionAtAValenceThreeNode) {
  const ArtinGroupPtr group = make_group(fixture_spider());
  const auto& g = group->graph();
  const RaagAutomorphism phi = partial_conjugation(group, std::vector<NodeId>{g.id("x1"), g.id("y1")}, g.id("x2"));
  const LocalAutomorphism at_c = project_local(phi, g.id("c"));
  EXPECT_EQ(at_c.free_group->format(at_c.map.image(*at_c.local_id(g.id("x1")))), "x2 x1 x2^-1");
  EXPECT_FALSE(is_trivial_outer(at_c));
}

TEST_F(LocalP5, ProjectIdentity) {
  for (NodeId v = 0; v < group->rank(); ++v)
    EXPECT_TRUE(project_local(RaagAutomorphism::identity(group), v).map.is_identity());
}

TEST_F(LocalP5, LiftExamples) {
  const RaagAutomorphism lifted = lift_local(group, id("c"), {{id("d"), w("b")}});
  EXPECT_TRUE(lifted.equals(partial_conjugation(group, std::vector<NodeId>{id("d"), id("e")}, id("b"))));

  EXPECT_TRUE(lift_local(group, id("c"), {}).is_identity());

  const RaagAutomorphism other = lift_local(group, id("c"), {{id("b"), w("d")}});
  EXPECT_EQ(group->format(other.image(id("b"))), "d b d^-1");
  EXPECT_EQ(group->format(other.image(id("a"))), "d a d^-1");
  EXPECT_EQ(group->format(other.image(id("c"))), "c");
  EXPECT_EQ(group->format(other.image(id("d"))), "d");
  EXPECT_EQ(group->format(other.image(id("e"))), "e");
  const LocalAutomorphism back = project_local(other, id("c"));
  EXPECT_EQ(local_image(back, "b"), "d b d^-1");
  EXPECT_EQ(local_image(back, "d"), "d");
}

TEST_F(LocalP5, LiftRejectsBadInput) {
  EXPECT_THROW(lift_local(group, id("c"), {{id("d"), w("a")}}), std::invalid_argument);
  const ArtinGroupPtr cyc = make_group(fixture_c5_leaf());
  EXPECT_THROW(lift_local(cyc, cyc->graph().id("v1"), {}), std::invalid_argument);
}

TEST(Local, ConjugatorsRoundTrip) {
  const ArtinGroupPtr group = make_group(fixture_spider());
  const NodeId c = group->graph().id("c");
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto data = random_local_conjugators(group, c, rng, 4);
    const LocalAutomorphism local = local_from_conjugators(group, c, data);
    const auto read = local_conjugators(local);
    ASSERT_TRUE(read);
    EXPECT_TRUE(local_from_conjugators(group, c, *read).map.equals(local.map));
  }
}

TEST(Local, LiftRoundTripOnTrees) {
  std::mt19937 rng(2024);
  for (const auto& ng : nonstar_trees(7)) {
    const GraphAnalysis a = analyze_structure(ng.graph);
    const ArtinGroupPtr group = make_group(ng.graph);
    for (NodeId v : a.gamma0.nodes) {
      const auto data = random_local_conjugators(group, v, rng, 3);
      const RaagAutomorphism lift = lift_local(group, v, data);
      EXPECT_TRUE(lift.respects_relations());
      EXPECT_TRUE(lift_anomalies(lift, v, data, a.gamma0.nodes).empty()) << ng.name;
      // checked here directly as well
      const LocalAutomorphism expected = local_from_conjugators(group, v, data);
      EXPECT_TRUE(project_local(lift, v).map.equals(expected.map)) << ng.name;
      for (NodeId u : a.gamma0.nodes)
        if (u != v) EXPECT_TRUE(is_trivial_outer(project_local(lift, u))) << ng.name;
    }
  }
}
