#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "outvcd/words.hpp"

namespace outvcd {

/// An endomorphism of A_Γ given by the (reduced) image of every generator.
///
/// Composition is right-to-left: compose(phi, psi) applies psi first.
/// "Conjugation by g" in this module is x -> g x g^-1.
class RaagAutomorphism {
 public:
  RaagAutomorphism() = default;
  RaagAutomorphism(ArtinGroupPtr group, std::vector<Word> images);

  static RaagAutomorphism identity(ArtinGroupPtr group);

  const ArtinGroup& group() const { return *group_; }
  const ArtinGroupPtr& group_ptr() const noexcept { return group_; }

  const Word& image(NodeId x) const { return images_.at(x); }
  const std::vector<Word>& images() const noexcept { return images_; }

  /// Image of an arbitrary word, reduced.
  Word apply(std::span<const Letter> w) const;

  /// Adjacent generators are sent to commuting elements.
  bool respects_relations() const;
  bool is_identity() const;
  /// Same context and equal images in A_Γ.
  bool equals(const RaagAutomorphism& other) const;

  /// "x -> image" for every generator that moves, separated by "; ".
  std::string describe() const;

 private:
  ArtinGroupPtr group_;
  std::vector<Word> images_;
};

bool same_context(const ArtinGroup& a, const ArtinGroup& b);

/// (phi ∘ psi)(x) = reduce(phi(psi(x))). Throws std::invalid_argument on a context mismatch.
RaagAutomorphism compose(const RaagAutomorphism& phi, const RaagAutomorphism& psi);

RaagAutomorphism conjugation(ArtinGroupPtr group, std::span<const Letter> g);
/// x -> by^e x by^-e for x in support, identity elsewhere.
RaagAutomorphism partial_conjugation(ArtinGroupPtr group, std::span<const NodeId> support, NodeId by,
                                     int exp = 1);
/// target -> target by^e
RaagAutomorphism right_transvection(ArtinGroupPtr group, NodeId target, NodeId by, int exp = 1);
/// target -> by^e target
RaagAutomorphism left_transvection(ArtinGroupPtr group, NodeId target, NodeId by, int exp = 1);

/// phi psi phi^-1 psi^-1, with the inverses supplied by the caller.
RaagAutomorphism commutator(const RaagAutomorphism& phi, const RaagAutomorphism& phi_inv,
                            const RaagAutomorphism& psi, const RaagAutomorphism& psi_inv);

/// Outcome of a bounded search for g with phi(x) = g x g^-1 for all x.
struct InnerSearch {
  std::optional<Word> conjugator;
  std::size_t bound = 0;
  std::size_t candidates = 0;
  bool exhaustive = false;  // every reduced word of length <= bound was tried
};

/// Tries conjugators extracted from cyclic reductions of the images first,
/// then every reduced word of length <= bound. Sound but incomplete: a
/// missing conjugator only means none exists up to the bound.
InnerSearch find_inner_conjugator(const RaagAutomorphism& phi, std::size_t bound);

inline std::optional<Word> is_inner_bounded(const RaagAutomorphism& phi, std::size_t bound) {
  return find_inner_conjugator(phi, bound).conjugator;
}

/// True when phi(x) = g x g^-1 for every generator x.
bool is_conjugation_by(const RaagAutomorphism& phi, std::span<const Letter> g);

/// Exact innerness for automorphisms of a free group (edgeless context).
/// Throws std::invalid_argument if the context has edges.
std::optional<Word> free_inner_conjugator(const RaagAutomorphism& phi);

/// Nielsen length reduction on the images of a free-group endomorphism.
/// Returns true when the images reduce to a permutation of the generators
/// (up to inversion), which certifies the endomorphism is invertible. A
/// false result means "not certified", not "not invertible".
bool nielsen_certifies_basis(const ArtinGroup& free_group, std::vector<Word> images);

}  // namespace outvcd
