#include <gtest/gtest.h>

#include "outvcd/homology.hpp"
#include "outvcd/morse.hpp"

using namespace outvcd;

TEST(Morse, SingleVertex) {
  const MorseCertificate m = morse_collapse_certificate(2, 0);
  EXPECT_TRUE(m.certified);
  EXPECT_EQ(m.vertices, 1u);
  EXPECT_EQ(m.verdict, "collapsible per proof order");
}

TEST(Morse, RecursionBottomsOut) {
  const MorseCertificate m = morse_collapse_certificate(2, 1);
  EXPECT_TRUE(m.certified) << (m.failures.empty() ? "" : m.failures[0]);
  EXPECT_EQ(m.vertices, 6u);
  bool saw = false;
  for (auto [r, s] : m.recursion) saw = saw || (r == 2 && s == 0);
  EXPECT_TRUE(saw);
}

TEST(Morse, ThreePairs) {
  const MorseCertificate m = morse_collapse_certificate(3, 0);
  EXPECT_TRUE(m.certified);
  EXPECT_TRUE(reduced_homology(build_complex({3, 0}, true).complex).trivial());
}

TEST(Morse, EveryTieOrderPasses) {
  for (int r = 2; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) {
      const MorseCertificate m = morse_collapse_certificate(r, s, 6, 77);
      EXPECT_TRUE(m.certified) << r << "," << s;
      EXPECT_EQ(m.tie_orders_tried, 6u);
      EXPECT_EQ(m.tie_orders_passed, 6u) << r << "," << s;
      EXPECT_EQ(m.vertices, build_complex({r, s}, true).vertices.size());
    }
}

TEST(Morse, HypothesisEnforced) {
  EXPECT_THROW(morse_collapse_certificate(1, 3), std::invalid_argument);
  EXPECT_THROW(morse_collapse_certificate(0, 4), std::invalid_argument);
}
