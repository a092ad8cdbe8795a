#pragma once

#include <optional>
#include <string>
#include <vector>

#include "outvcd/automorphism.hpp"
#include "outvcd/bounds.hpp"
#include "outvcd/lattice.hpp"

namespace outvcd {

/// The data the commuting family depends on: the base edge e₀ = (v₀, w₀)
/// of Γ₀, a spanning tree T₀ of Γ₀ through e₀, the tree-parent map
/// v -> v̂ (edges of T₀ − e₀ oriented towards e₀, with v̂₀ = w₀ and
/// ŵ₀ = v₀), and for nodes outside Γ₀ a dominating node v̄ in Γ₀.
struct GeneratorChoices {
  NodeId v0 = 0;
  NodeId w0 = 0;
  std::vector<Edge> tree;
  std::vector<std::optional<NodeId>> hat;  // indexed by NodeId; set on V₀
  std::vector<std::optional<NodeId>> bar;  // indexed by NodeId; set outside V₀
};

/// e₀ prefers an edge of Γ₀ with two non-hub endpoints, then one, then the
/// lexicographically least edge; T₀ grows breadth-first from e₀.
GeneratorChoices default_choices(const GraphAnalysis& a);

/// Explicit e₀ (and optionally T₀). Throws std::invalid_argument when e₀ is
/// not an edge of Γ₀ or the tree is not a spanning tree of Γ₀ containing e₀.
GeneratorChoices make_choices(const GraphAnalysis& a, NodeId v0, NodeId w0,
                              std::optional<std::vector<Edge>> tree = std::nullopt);

enum class GeneratorKind {
  PartialConjugation,   // components of Γ − {v} away from v̂, conjugated by v̂
  LeafTransvection,     // u -> u v, v the neighbour of leaf u
  LeafTransvectionHat,  // u -> u v̂
  RightTransvection,    // v -> v v̄
  LeftTransvection,     // v -> v̄ v
};

std::string to_string(GeneratorKind kind);

struct Generator {
  GeneratorKind kind = GeneratorKind::PartialConjugation;
  RaagAutomorphism automorphism;
  RaagAutomorphism inverse;
  NodeId anchor = 0;  // separating node v for partial conjugations, moved node otherwise
  NodeId by = 0;      // conjugating / multiplying generator
  std::vector<NodeId> support;
  std::string label;
};

struct CommutationCertificate {
  std::size_t first = 0;
  std::size_t second = 0;
  bool trivial_in_aut = false;
  std::optional<Word> conjugator;  // commutator = conjugation by this word
  std::size_t bound = 0;
  bool exhaustive = false;  // absence certified up to the bound

  bool certified() const { return conjugator.has_value(); }
};

struct InnerWitness {
  IntVector exponents;
  int a = 0;  // the product equals conjugation by v₀^a w₀^b
  int b = 0;
};

struct InnerLattice {
  std::size_t rank = 0;
  std::vector<InnerWitness> witnesses;
  int exponent_bound = 1;
  std::size_t searched = 0;
  bool partial = false;  // the search cap cut the enumeration short
};

struct GeneratorOptions {
  std::size_t conjugator_bound = 4;
  bool certify_commutation = true;
  bool compute_lattice = true;
  int exponent_bound = 1;
  std::size_t search_cap = 1'594'323;  // 3^13
};

struct GeneratorSet {
  ArtinGroupPtr group;
  GeneratorChoices choices;
  std::vector<Generator> generators;
  std::vector<CommutationCertificate> certificates;
  std::optional<InnerLattice> lattice;

  std::size_t inner_lattice_rank() const { return lattice ? lattice->rank : 0; }
  std::size_t outer_rank() const { return generators.size() - inner_lattice_rank(); }
  std::size_t uncertified_pairs() const;
};

GeneratorSet build_generator_set(const GraphAnalysis& a, const GeneratorChoices& choices,
                                 const GeneratorOptions& options = {});

std::vector<CommutationCertificate> verify_commuting(const GeneratorSet& gs, std::size_t bound);

/// Searches exponent vectors in [-bound, bound]^n for products of the
/// generators (applied in list order) that equal conjugation by v₀^a w₀^b
/// with |a|, |b| <= 1, and returns the rank of the lattice they span.
InnerLattice inner_lattice(const GeneratorSet& gs, int exponent_bound = 1, std::size_t cap = 1'594'323);

/// Product g_0^{e_0} ∘ g_1^{e_1} ∘ ... for an exponent vector.
RaagAutomorphism generator_product(const GeneratorSet& gs, const IntVector& exponents);

}  // namespace outvcd
