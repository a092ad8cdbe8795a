#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "outvcd/corpus.hpp"
#include "outvcd/generators.hpp"
#include "outvcd/lattice.hpp"

using namespace outvcd;

namespace {

std::vector<std::string> labels(const GeneratorSet& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs.generators) out.push_back(g.label);
  return out;
}

GeneratorSet build(const DefiningGraph& g, const char* v0, const char* w0, GeneratorOptions options = {}) {
  const GraphAnalysis a = analyze_structure(g);
  return build_generator_set(a, make_choices(a, a.graph.id(v0), a.graph.id(w0)), options);
}

// Inverse of generator_product: the factors undone in reverse order.
RaagAutomorphism inverse_product(const GeneratorSet& gs, const IntVector& e) {
  RaagAutomorphism out = RaagAutomorphism::identity(gs.group);
  for (std::size_t i = e.size(); i-- > 0;)
    for (long k = 0; k < std::labs(e[i]); ++k)
      out = compose(out, e[i] > 0 ? gs.generators[i].inverse : gs.generators[i].automorphism);
  return out;
}

}  // namespace

TEST(Generators, PathOfFive) {
  const GeneratorSet gs = build(fixture_p5(), "b", "c");
  EXPECT_EQ(labels(gs), (std::vector<std::string>{"conj({a}) by c", "conj({d,e}) by b", "conj({e}) by c", "a -> a b",
                                                  "a -> a c", "e -> e d", "e -> e c"}));
  EXPECT_EQ(gs.inner_lattice_rank(), 2u);
  EXPECT_EQ(gs.outer_rank(), 5u);
  EXPECT_EQ(gs.uncertified_pairs(), 0u);
  EXPECT_EQ(gs.certificates.size(), 21u);
}

TEST(Generators, CycleWithLeaf) {
  const GeneratorSet gs = build(fixture_c5_leaf(), "v3", "v4");
  EXPECT_EQ(labels(gs), (std::vector<std::string>{"conj({u}) by v2", "u -> u v1", "u -> u v2"}));
  EXPECT_EQ(gs.inner_lattice_rank(), 0u);
  EXPECT_EQ(gs.outer_rank(), 3u);
  const auto& g = gs.group->graph();
  EXPECT_EQ(gs.choices.hat[g.id("v1")], g.id("v2"));
}

TEST(Generators, Spider) {
  const GraphAnalysis a = analyze_structure(fixture_spider());
  const GeneratorSet gs = build_generator_set(a, default_choices(a));
  EXPECT_EQ(gs.generators.size(), 11u);
  EXPECT_EQ(std::count_if(gs.generators.begin(), gs.generators.end(),
                          [](const Generator& g) { return g.kind == GeneratorKind::PartialConjugation; }),
            5);
  EXPECT_EQ(gs.inner_lattice_rank(), 2u);
  EXPECT_EQ(gs.outer_rank(), 9u);
}

TEST(Generators, DefaultEdgePrefersNonHubs) {
  const GraphAnalysis a = analyze_structure(fixture_c5_leaf());
  const GeneratorChoices c = default_choices(a);
  EXPECT_FALSE(a.pieces.is_hub(c.v0));
  EXPECT_FALSE(a.pieces.is_hub(c.w0));
}

TEST(Generators, RejectsBadChoices) {
  const GraphAnalysis a = analyze_structure(fixture_p5());
  const auto& g = a.graph;
  EXPECT_THROW(make_choices(a, g.id("a"), g.id("b")), std::invalid_argument);
  EXPECT_THROW(make_choices(a, g.id("b"), g.id("d")), std::invalid_argument);
  EXPECT_THROW(make_choices(a, g.id("b"), g.id("c"), std::vector<Edge>{{g.id("b"), g.id("c")}}), std::invalid_argument);
  const GraphAnalysis c = analyze_structure(fixture_c5_leaf());
  const auto& h = c.graph;
  const Edge e34{h.id("v3"), h.id("v4")};
  EXPECT_THROW(make_choices(c, h.id("v3"), h.id("v4"),
                            std::vector<Edge>{{h.id("v1"), h.id("v2")}, {h.id("v2"), h.id("v3")},
                                              {h.id("v4"), h.id("v5")}, {h.id("v1"), h.id("v5")}}),
               std::invalid_argument);
  const GeneratorChoices ok = make_choices(
      c, h.id("v3"), h.id("v4"),
      std::vector<Edge>{{h.id("v1"), h.id("v2")}, {h.id("v2"), h.id("v3")}, e34, {h.id("v4"), h.id("v5")}});
  EXPECT_EQ(ok.hat[h.id("v1")], h.id("v2"));
  EXPECT_EQ(ok.hat[h.id("v5")], h.id("v4"));
}

TEST(Generators, ChoicesInvariants) {
  for (const auto& ng : verification_corpus(8)) {
    const GraphAnalysis a = analyze_structure(ng.graph);
    const GeneratorChoices c = default_choices(a);
    const auto& g = a.graph;
    EXPECT_EQ(c.tree.size() + 1, a.gamma0.nodes.size()) << ng.name;
    EXPECT_EQ(c.hat[c.v0], c.w0);
    EXPECT_EQ(c.hat[c.w0], c.v0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (a.gamma0.contains(v)) {
        ASSERT_TRUE(c.hat[v]) << ng.name;
        const Edge e{std::min(v, *c.hat[v]), std::max(v, *c.hat[v])};
        EXPECT_TRUE(std::find(c.tree.begin(), c.tree.end(), e) != c.tree.end()) << ng.name;
      } else {
        ASSERT_TRUE(c.bar[v]) << ng.name;
        EXPECT_TRUE(a.order.leq(v, *c.bar[v])) << ng.name;
        EXPECT_FALSE(g.adjacent(v, *c.bar[v])) << ng.name;
        EXPECT_TRUE(a.gamma0.contains(*c.bar[v])) << ng.name;
      }
    }
    // orienting towards e0 leaves no cycles: following hats reaches {v0, w0}
    for (NodeId v : a.gamma0.nodes) {
      NodeId x = v;
      for (std::size_t step = 0; step <= g.node_count() && x != c.v0 && x != c.w0; ++step) x = *c.hat[x];
      EXPECT_TRUE(x == c.v0 || x == c.w0) << ng.name;
    }
  }
}

TEST(Generators, CountsAndInverses) {
  GeneratorOptions quick;
  quick.certify_commutation = false;
  quick.compute_lattice = false;
  for (const auto& ng : verification_corpus(8)) {
    const GraphAnalysis a = analyze_structure(ng.graph);
    const GeneratorSet gs = build_generator_set(a, default_choices(a), quick);
    const std::size_t nu = a.graph.node_count(), nu0 = a.gamma0.nodes.size();
    EXPECT_EQ(gs.generators.size(), a.pieces.count() - 1 + 2 * (nu - nu0)) << ng.name;
    for (const auto& g : gs.generators) {
      EXPECT_TRUE(g.automorphism.respects_relations()) << ng.name << " " << g.label;
      EXPECT_TRUE(compose(g.automorphism, g.inverse).is_identity()) << ng.name << " " << g.label;
      EXPECT_TRUE(compose(g.inverse, g.automorphism).is_identity()) << ng.name << " " << g.label;
    }
  }
}

TEST(Generators, CommutatorsCertifiedOnSmallTrees) {
  for (const auto& ng : nonstar_trees(7)) {
    const GraphAnalysis a = analyze_structure(ng.graph);
    GeneratorOptions o;
    o.compute_lattice = false;
    const GeneratorSet gs = build_generator_set(a, default_choices(a), o);
    EXPECT_EQ(gs.uncertified_pairs(), 0u) << ng.name;
    for (const auto& c : gs.certificates) {
      ASSERT_TRUE(c.conjugator);
      const auto& x = gs.generators[c.first];
      const auto& y = gs.generators[c.second];
      const RaagAutomorphism comm = commutator(x.automorphism, x.inverse, y.automorphism, y.inverse);
      EXPECT_TRUE(is_conjugation_by(comm, *c.conjugator)) << ng.name;
    }
  }
}

TEST(Generators, ProductsOfDistinctVectorsDifferInOut) {
  std::mt19937 rng(41);
  for (const auto& [graph, v0, w0] :
       std::vector<std::tuple<DefiningGraph, const char*, const char*>>{{fixture_c5_leaf(), "v3", "v4"},
                                                                        {fixture_p5(), "b", "c"}}) {
    const GeneratorSet gs = build(graph, v0, w0);
    ASSERT_TRUE(gs.lattice);
    std::vector<IntVector> lattice;
    for (const auto& wit : gs.lattice->witnesses) lattice.push_back(wit.exponents);
    const std::size_t n = gs.generators.size();
    for (int trial = 0; trial < 150; ++trial) {
      IntVector e(n), f(n), diff(n);
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = static_cast<long>(rng() % 3) - 1;
        f[i] = static_cast<long>(rng() % 3) - 1;
        diff[i] = e[i] - f[i];
      }
      if (e == f) continue;
      auto with_diff = lattice;
      with_diff.push_back(diff);
      const bool in_span = integer_rank(with_diff) == integer_rank(lattice);
      const RaagAutomorphism quotient = compose(generator_product(gs, e), inverse_product(gs, f));
      if (!in_span) EXPECT_FALSE(is_inner_bounded(quotient, 3));
    }
  }
}

TEST(Generators, InnerWitnessesAreConjugations) {
  const GeneratorSet gs = build(fixture_p5(), "b", "c");
  ASSERT_TRUE(gs.lattice);
  for (const auto& wit : gs.lattice->witnesses) {
    Word g;
    for (int i = 0; i < std::abs(wit.a); ++i) g.push_back({gs.choices.v0, wit.a > 0 ? 1 : -1});
    for (int i = 0; i < std::abs(wit.b); ++i) g.push_back({gs.choices.w0, wit.b > 0 ? 1 : -1});
    EXPECT_TRUE(is_conjugation_by(generator_product(gs, wit.exponents), g));
  }
}
