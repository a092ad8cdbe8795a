#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "outvcd/corpus.hpp"
#include "outvcd/words.hpp"

using namespace outvcd;

namespace {

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back({rng() % rank, rng() % 2 ? 1 : -1});
  return w;
}

// Applies random defining relations: commuting swaps and inserted x x⁻¹ pairs.
Word scramble(const ArtinGroup& group, Word w, std::mt19937& rng, int moves) {
  for (int m = 0; m < moves; ++m) {
    if (rng() % 3 == 0) {
      const Letter l{rng() % group.rank(), rng() % 2 ? 1 : -1};
      const std::size_t at = w.empty() ? 0 : rng() % (w.size() + 1);
      w.insert(w.begin() + static_cast<long>(at), {l, l.inverse()});
    } else if (w.size() >= 2) {
      const std::size_t i = rng() % (w.size() - 1);
      if (group.commute(w[i].gen, w[i + 1].gen)) std::swap(w[i], w[i + 1]);
    }
  }
  return w;
}

}  // namespace

class WordsP5 : public ::testing::Test {
 protected:
  ArtinGroup group{fixture_p5()};
  Word w(const char* text) const { return group.parse(text); }
  std::string f(const Word& x) const { return group.format(x); }
};

TEST_F(WordsP5, ReduceExamples) {
  EXPECT_EQ(f(group.reduce(w("a b a^-1"))), "b");
  EXPECT_EQ(f(group.reduce(w("a c a^-1 c^-1"))), "a c a^-1 c^-1");
  EXPECT_EQ(f(group.reduce(w("b d c c^-1 d^-1 b^-1"))), "");
}

TEST_F(WordsP5, EqualExamples) {
  EXPECT_TRUE(group.equal(w("a b"), w("b a")));
  EXPECT_FALSE(group.equal(w("a c"), w("c a")));
  EXPECT_NE(group.canonical(w("a c")), group.canonical(w("c a")));
}

TEST_F(WordsP5, CyclicReduceExamples) {
  auto cr = group.cyclic_reduce(w("c b c^-1"));
  EXPECT_EQ(f(cr.conjugator), "");
  EXPECT_EQ(f(cr.core), "b");
  cr = group.cyclic_reduce(w("c e c^-1"));
  EXPECT_EQ(f(cr.conjugator), "c");
  EXPECT_EQ(f(cr.core), "e");
  cr = group.cyclic_reduce(Word{});
  EXPECT_TRUE(cr.conjugator.empty());
  EXPECT_TRUE(cr.core.empty());
}

TEST_F(WordsP5, ParseAndFormat) {
  EXPECT_EQ(w("a^3").size(), 3u);
  EXPECT_EQ(f(w("a^-2 b")), "a^-1 a^-1 b");
  EXPECT_THROW(w("q"), std::invalid_argument);
  EXPECT_THROW(w("a^x"), std::invalid_argument);
  EXPECT_TRUE(w("").empty());
}

TEST(Words, MatchesPilingOracle) {
  std::mt19937 rng(3);
  for (const auto& ng : verification_corpus(6)) {
    const ArtinGroup group(ng.graph);
    for (int trial = 0; trial < 40; ++trial) {
      const Word a = random_word(rng, group.rank(), rng() % 12);
      // half the time compare against a relation-scrambled copy
      const Word b = trial % 2 ? scramble(group, a, rng, 20) : random_word(rng, group.rank(), rng() % 12);
      EXPECT_EQ(group.equal(a, b), oracle::equal_in_raag(ng.graph, a, b)) << ng.name;
      EXPECT_TRUE(oracle::equal_in_raag(ng.graph, a, group.reduce(a))) << ng.name;
      EXPECT_TRUE(oracle::equal_in_raag(ng.graph, a, group.canonical(a))) << ng.name;
    }
  }
}

TEST(Words, ReduceProperties) {
  std::mt19937 rng(17);
  for (const auto& ng : verification_corpus(6)) {
    const ArtinGroup group(ng.graph);
    for (int trial = 0; trial < 30; ++trial) {
      const Word a = random_word(rng, group.rank(), rng() % 16);
      const Word r = group.reduce(a);
      EXPECT_LE(r.size(), a.size());
      EXPECT_TRUE(group.is_reduced(r));
      EXPECT_EQ(group.reduce(r), r);
      // confluence: any relation-equivalent spelling has the same canonical form and length
      const Word b = scramble(group, a, rng, 30);
      EXPECT_EQ(group.canonical(a), group.canonical(b)) << ng.name;
      EXPECT_EQ(group.reduce(b).size(), r.size()) << ng.name;
    }
  }
}

TEST(Words, Congruence) {
  std::mt19937 rng(23);
  const ArtinGroup group(fixture_c5_leaf());
  for (int trial = 0; trial < 200; ++trial) {
    const Word x = random_word(rng, group.rank(), rng() % 8);
    const Word y = scramble(group, x, rng, 15);
    const Word z = random_word(rng, group.rank(), rng() % 8);
    ASSERT_TRUE(group.equal(x, y));
    EXPECT_TRUE(group.equal(concat(x, z), concat(y, z)));
    EXPECT_TRUE(group.equal(concat(z, x), concat(z, y)));
    EXPECT_TRUE(group.is_identity(concat(x, inverse(y))));
  }
}

TEST(Words, FreeGroupIsFreeReduction) {
  std::mt19937 rng(29);
  const ArtinGroupPtr free = make_free_group({"x", "y", "z"});
  for (int trial = 0; trial < 300; ++trial) {
    const Word a = random_word(rng, 3, rng() % 20);
    EXPECT_EQ(free->reduce(a), oracle::free_reduce(a));
  }
}

TEST(Words, CyclicReduceProperty) {
  std::mt19937 rng(31);
  for (const auto& ng : verification_corpus(6)) {
    const ArtinGroup group(ng.graph);
    for (int trial = 0; trial < 20; ++trial) {
      const Word a = random_word(rng, group.rank(), rng() % 14);
      const CyclicReduction cr = group.cyclic_reduce(a);
      EXPECT_TRUE(group.equal(concat({cr.conjugator, cr.core, inverse(cr.conjugator)}), a)) << ng.name;
      // no cancellation across the wrap
      const Word core2 = group.reduce(concat(cr.core, cr.core));
      EXPECT_EQ(core2.size(), 2 * cr.core.size()) << ng.name;
    }
  }
}
