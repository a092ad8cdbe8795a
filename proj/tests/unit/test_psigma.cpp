#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "outvcd/psigma.hpp"

using namespace outvcd;

namespace {

std::string image(const RaagAutomorphism& phi, NodeId x) { return phi.group().format(phi.image(x)); }

ExponentVector random_vector(const PsigmaSpec& spec, std::mt19937& rng, int spread) {
  std::vector<long> values(static_cast<std::size_t>(2 * spec.n - spec.k - 1));
  for (long& v : values) v = static_cast<long>(rng() % (2 * spread + 1)) - spread;
  return ExponentVector::unflatten(spec, values);
}

RaagAutomorphism power(const RaagAutomorphism& g, long e, const RaagAutomorphism& inv) {
  RaagAutomorphism out = RaagAutomorphism::identity(g.group_ptr());
  for (long i = 0; i < std::labs(e); ++i) out = compose(out, e > 0 ? g : inv);
  return out;
}

}  // namespace

TEST(Psigma, Formula) {
  EXPECT_EQ(psigma_vcd(3, 1), 3);
  EXPECT_EQ(psigma_vcd(4, 0), 5);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(psigma_vcd(n, n), n - 2);
    EXPECT_EQ(psigma_vcd(n, 0), 2 * n - 3);
  }
  EXPECT_THROW(psigma_vcd(1, 0), std::invalid_argument);
  EXPECT_THROW(validate(PsigmaSpec{3, 4}), std::invalid_argument);
  EXPECT_THROW(validate(PsigmaSpec{3, -1}), std::invalid_argument);
}

TEST(Psigma, GeneratorExamples) {
  const auto g31 = psigma_generators(3, 1);
  ASSERT_EQ(g31.size(), 4u);
  EXPECT_EQ(g31[0].label, "lambda2");
  EXPECT_EQ(g31[1].label, "rho2");
  EXPECT_EQ(image(g31[0].automorphism, 1), "x1 x2");
  EXPECT_EQ(image(g31[1].automorphism, 1), "x2 x1");

  const auto g22 = psigma_generators(2, 2);
  ASSERT_EQ(g22.size(), 1u);
  EXPECT_EQ(g22[0].label, "gamma2");
  const Word x1 = g22[0].automorphism.group().parse("x1^-1");
  EXPECT_TRUE(is_conjugation_by(g22[0].automorphism, x1));

  EXPECT_EQ(psigma_generators(4, 2).size(), 5u);
  EXPECT_THROW(psigma_generators(4, 0), std::invalid_argument);
}

TEST(Psigma, GeneratorCountAndCommutation) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto gens = psigma_generators(n, k);
      EXPECT_EQ(gens.size(), static_cast<std::size_t>(2 * n - k - 1));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
          const auto& a = gens[i].automorphism;
          const auto& b = gens[j].automorphism;
          const RaagAutomorphism ab = compose(a, b), ba = compose(b, a);
          for (NodeId x = 0; x < static_cast<NodeId>(n); ++x)
            EXPECT_EQ(oracle::free_reduce(ab.image(x)), oracle::free_reduce(ba.image(x)))
                << gens[i].label << " " << gens[j].label;
        }
    }
}

TEST(Psigma, ApplyExponentsExamples) {
  EXPECT_TRUE(apply_exponents({3, 1}, {}).is_identity());
  EXPECT_EQ(image(apply_exponents({2, 2}, {{{2, 1}}, {}, {}}), 1), "x1^-1 x2 x1");
  const RaagAutomorphism v = apply_exponents({3, 1}, {{}, {{2, 1}, {3, 0}}, {{2, 0}, {3, 2}}});
  EXPECT_EQ(image(v, 0), "x1");
  EXPECT_EQ(image(v, 1), "x1 x2");
  EXPECT_EQ(image(v, 2), "x3 x1 x1");
}

TEST(Psigma, ApplyExponentsIsAHomomorphism) {
  std::mt19937 rng(19);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const PsigmaSpec spec{n, k};
      const auto gens = psigma_generators(n, k);
      for (int trial = 0; trial < 10; ++trial) {
        const ExponentVector u = random_vector(spec, rng, 2), w = random_vector(spec, rng, 2);
        auto fu = u.flatten(spec), fw = w.flatten(spec), sum = fu;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += fw[i];
        const ExponentVector s = ExponentVector::unflatten(spec, sum);
        EXPECT_TRUE(compose(apply_exponents(spec, u), apply_exponents(spec, w)).equals(apply_exponents(spec, s)));
        // and it agrees with the product of generator powers
        RaagAutomorphism prod = RaagAutomorphism::identity(psigma_free_group(n));
        for (std::size_t i = 0; i < gens.size(); ++i) {
          std::vector<long> unit(gens.size(), 0);
          unit[i] = -1;
          const RaagAutomorphism g_inv = apply_exponents(spec, ExponentVector::unflatten(spec, unit));
          prod = compose(prod, power(gens[i].automorphism, fu[i], g_inv));
        }
        EXPECT_TRUE(prod.equals(apply_exponents(spec, u)));
      }
    }
}

TEST(Psigma, InnerDecisionExamples) {
  EXPECT_EQ(inner_decision({3, 1}, {}), 0);
  EXPECT_EQ(inner_decision({2, 2}, {{{2, 1}}, {}, {}}), 1);
  EXPECT_EQ(inner_decision({3, 1}, {{}, {{2, 1}}, {}}), std::nullopt);
  EXPECT_EQ(inner_decision({3, 1}, {{}, {{2, -2}, {3, -2}}, {{2, 2}, {3, 2}}}), 2);
}

TEST(Psigma, InnerDecisionMatchesImages) {
  std::mt19937 rng(37);
  const ArtinGroupPtr f = psigma_free_group(4);
  for (int k = 1; k <= 4; ++k) {
    const PsigmaSpec spec{4, k};
    for (int trial = 0; trial < 200; ++trial) {
      const ExponentVector v = random_vector(spec, rng, 1);
      const RaagAutomorphism phi = apply_exponents(spec, v);
      const auto m = inner_decision(spec, v);
      const auto conj = free_inner_conjugator(phi);
      EXPECT_EQ(m.has_value(), conj.has_value());
      if (m) {
        Word g;
        for (long i = 0; i < std::labs(*m); ++i) g.push_back({0, *m > 0 ? -1 : 1});
        EXPECT_TRUE(is_conjugation_by(phi, g));
      }
    }
  }
}

TEST(Psigma, OuterRank) {
  EXPECT_EQ(outer_rank({3, 1}).outer_rank, 3u);
  EXPECT_EQ(outer_rank({2, 2}).outer_rank, 0u);
  EXPECT_EQ(outer_rank({5, 3}).outer_rank, 5u);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) {
      const PsigmaRank r = outer_rank({n, k});
      EXPECT_EQ(r.inner_rank, 1u);
      EXPECT_EQ(static_cast<int>(r.outer_rank), 2 * n - k - 2);
      EXPECT_EQ(static_cast<int>(r.outer_rank), psigma_vcd(n, k));
    }
  EXPECT_THROW(outer_rank({3, 0}), std::invalid_argument);
}

TEST(Psigma, FlattenRoundTrip) {
  std::mt19937 rng(43);
  const PsigmaSpec spec{5, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const ExponentVector v = random_vector(spec, rng, 3);
    EXPECT_EQ(ExponentVector::unflatten(spec, v.flatten(spec)).flatten(spec), v.flatten(spec));
  }
}
