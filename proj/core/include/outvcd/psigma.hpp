#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "outvcd/automorphism.hpp"

namespace outvcd {

/// Automorphisms of F_n = F(x1..xn) sending x1..xk to conjugates of
/// themselves. In this module "conjugation by g" is x -> g⁻¹ x g.
struct PsigmaSpec {
  int n = 2;
  int k = 0;
};

/// Throws std::invalid_argument unless n >= 2 and 0 <= k <= n.
void validate(const PsigmaSpec& spec);

/// 2n − k − 2 for k >= 1, 2n − 3 for k = 0.
int psigma_vcd(int n, int k);

/// Exponents of γ_i (1 < i <= k) and of λ_i, ρ_i (k < i <= n), keyed by i.
struct ExponentVector {
  std::map<int, long> a;
  std::map<int, long> b;
  std::map<int, long> c;

  /// Flattened in generator order: a_2..a_k, then b_i, c_i for each i > k.
  std::vector<long> flatten(const PsigmaSpec& spec) const;
  static ExponentVector unflatten(const PsigmaSpec& spec, const std::vector<long>& values);
};

struct PsigmaGenerator {
  std::string label;  // "gamma2", "lambda3", "rho3"
  RaagAutomorphism automorphism;
};

ArtinGroupPtr psigma_free_group(int n);

/// γ_i: x_i -> x1⁻¹ x_i x1; λ_i: x_i -> x1 x_i; ρ_i: x_i -> x_i x1.
/// Order: γ_2..γ_k, then λ_i, ρ_i for i = k+1..n. Throws unless n >= 2, k >= 1.
std::vector<PsigmaGenerator> psigma_generators(int n, int k);

/// x_i -> x1^-a x_i x1^a (i <= k), x_i -> x1^b x_i x1^c (i > k), x1 fixed.
RaagAutomorphism apply_exponents(const PsigmaSpec& spec, const ExponentVector& v);

/// m when the vector gives conjugation by x1^m, i.e. all a_i = m, b_i = −m, c_i = m.
std::optional<long> inner_decision(const PsigmaSpec& spec, const ExponentVector& v);

struct PsigmaRank {
  std::size_t generators = 0;
  std::size_t inner_rank = 0;
  std::size_t outer_rank = 0;
  std::size_t searched = 0;
};

/// Rank of the generator lattice modulo the inner vectors found in [-1, 1]^count.
/// Throws std::invalid_argument for k = 0 or more than 12 generators.
PsigmaRank outer_rank(const PsigmaSpec& spec);

}  // namespace outvcd
