#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "outvcd/ideal_edges.hpp"

using namespace outvcd;

namespace {

IdealEdge inside(const HalfEdgeSet& h, std::initializer_list<std::uint32_t> ids) {
  IdealEdge e;
  for (auto id : ids) e.inside |= 1u << id;
  (void)h;
  return e;
}

// pairs (a_i, ā_i) split by the bipartition, counted directly from the masks
int split_by_hand(const HalfEdgeSet& h, std::uint32_t mask) {
  int n = 0;
  for (int i = 0; i < h.r; ++i) n += ((mask >> (2 * i)) & 1u) != ((mask >> (2 * i + 1)) & 1u);
  return n;
}

}  // namespace

TEST(IdealEdges, EnumerationCounts) {
  const HalfEdgeSet h20{2, 0}, h21{2, 1}, h04{0, 4};
  EXPECT_EQ(enumerate_ideal_edges(h20, false).size(), 3u);
  const auto legal20 = enumerate_ideal_edges(h20, true);
  ASSERT_EQ(legal20.size(), 1u);
  EXPECT_EQ(format(h20, legal20[0]), "{a1,abar1 | a2,abar2}");
  EXPECT_EQ(enumerate_ideal_edges(h21, false).size(), 10u);
  EXPECT_EQ(enumerate_ideal_edges(h21, true).size(), 6u);
  EXPECT_EQ(enumerate_ideal_edges(h04, false).size(), 3u);
  EXPECT_EQ(enumerate_ideal_edges(h04, true).size(), 3u);
}

TEST(IdealEdges, TooFewHalfEdgesWarns) {
  std::vector<std::string> warnings;
  EXPECT_TRUE(enumerate_ideal_edges({1, 1}, false, &warnings).empty());
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_THROW(enumerate_ideal_edges({5, 1}, false), CapExceeded);
}

TEST(IdealEdges, EnumerationMatchesAllBipartitions) {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; r * 2 + s <= 10; ++s) {
      const HalfEdgeSet h{r, s};
      const std::uint32_t n = h.size();
      if (n < 4) continue;
      std::set<std::uint32_t> all, legal;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int in = __builtin_popcount(mask);
        if (!(mask & 1u) || in < 2 || static_cast<int>(n) - in < 2) continue;
        all.insert(mask);
        if (split_by_hand(h, mask) <= 1) legal.insert(mask);
      }
      std::set<std::uint32_t> got_all, got_legal;
      for (auto e : enumerate_ideal_edges(h, false)) got_all.insert(e.inside);
      for (auto e : enumerate_ideal_edges(h, true)) got_legal.insert(e.inside);
      EXPECT_EQ(got_all, all) << r << "," << s;
      EXPECT_EQ(got_legal, legal) << r << "," << s;
      EXPECT_EQ(all.size(), (1u << (n - 1)) - n - 1) << r << "," << s;
      for (auto e : enumerate_ideal_edges(h, false)) EXPECT_EQ(is_legal(h, e), split_pairs(h, e) <= 1);
    }
}

TEST(IdealEdges, CompatibilityExamples) {
  const HalfEdgeSet h21{2, 1};
  const IdealEdge pair1 = inside(h21, {h21.a(1), h21.abar(1)});
  const IdealEdge pair1b = inside(h21, {h21.a(1), h21.abar(1), h21.b(1)});
  EXPECT_TRUE(compatible(h21, pair1, pair1b));
  const HalfEdgeSet h20{2, 0};
  EXPECT_FALSE(compatible(h20, inside(h20, {h20.a(1), h20.abar(1)}), inside(h20, {h20.a(1), h20.a(2)})));
  for (auto e : enumerate_ideal_edges(h21, false)) EXPECT_TRUE(compatible(h21, e, e));
}

TEST(IdealEdges, CompatibilityMatchesTreeRealizability) {
  for (std::uint32_t m = 4; m <= 7; ++m) {
    const HalfEdgeSet h{0, static_cast<int>(m)};
    const auto trees = oracle::trivalent_tree_splits(m);
    std::set<std::pair<std::uint32_t, std::uint32_t>> together;
    for (const auto& t : trees)
      for (auto x : t)
        for (auto y : t) together.insert({x, y});
    const auto edges = enumerate_ideal_edges(h, false);
    for (auto x : edges)
      for (auto y : edges)
        EXPECT_EQ(compatible(h, x, y), together.count({x.inside, y.inside}) == 1) << format(h, x) << " " << format(h, y);
  }
}

TEST(IdealEdges, MaximalSimplicesAreTrivalentTrees) {
  for (std::uint32_t m = 4; m <= 7; ++m) {
    const HalfEdgeSet h{0, static_cast<int>(m)};
    const auto trees = oracle::trivalent_tree_splits(m);
    EXPECT_EQ(trees.size(), oracle::double_factorial(2 * static_cast<long>(m) - 5));
    const IdealEdgeComplex c = build_complex(h, false);
    std::set<std::set<std::uint32_t>> facets;
    for (const auto& s : c.complex.maximal_simplices()) {
      std::set<std::uint32_t> splits;
      for (auto v : s) splits.insert(c.vertices[v].inside);
      facets.insert(splits);
    }
    EXPECT_EQ(c.complex.maximal_simplices().size(), trees.size()) << m;
    EXPECT_EQ(facets, trees) << m;
    EXPECT_EQ(c.complex.dimension(), static_cast<int>(m) - 4) << m;
  }
}

TEST(IdealEdges, SmallComplexes) {
  const IdealEdgeComplex b4 = build_complex({0, 4}, false);
  EXPECT_EQ(b4.complex.f_vector(), (std::vector<std::size_t>{3}));
  const IdealEdgeComplex b5 = build_complex({0, 5}, false);
  EXPECT_EQ(b5.complex.f_vector(), (std::vector<std::size_t>{10, 15}));
  const IdealEdgeComplex l20 = build_complex({2, 0}, true);
  EXPECT_EQ(l20.complex.f_vector(), (std::vector<std::size_t>{1}));
}

TEST(IdealEdges, FlagComplexIsClosedUnderFaces) {
  const IdealEdgeComplex c = build_complex({2, 2}, true);
  for (int d = 1; d <= c.complex.dimension(); ++d)
    for (const auto& s : c.complex.simplices(d)) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        auto face = s;
        face.erase(face.begin() + static_cast<long>(drop));
        EXPECT_TRUE(c.complex.index_of(face));
      }
      for (auto x : s)
        for (auto y : s) EXPECT_TRUE(compatible(c.half_edges, c.vertices[x], c.vertices[y]));
    }
}

TEST(IdealEdges, SimplexCap) {
  EXPECT_THROW(build_complex({0, 9}, false, 1000), CapExceeded);
}

TEST(IdealEdges, Names) {
  const HalfEdgeSet h{2, 2};
  EXPECT_EQ(h.name(h.a(2)), "a2");
  EXPECT_EQ(h.name(h.abar(1)), "abar1");
  EXPECT_EQ(h.name(h.b(2)), "b2");
  EXPECT_THROW(h.name(6), std::out_of_range);
}
