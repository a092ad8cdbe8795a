#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "outvcd/graph.hpp"

namespace outvcd {

/// A generator of A_Γ raised to ±1.
struct Letter {
  NodeId gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> a, std::span<const Letter> b);
Word concat(std::initializer_list<std::span<const Letter>> parts);

/// w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
struct CyclicReduction {
  Word conjugator;
  Word core;
};

/// The right-angled Artin group on a defining graph: x and y commute
/// exactly when {x, y} is an edge. Provides the word problem and the
/// normal forms used to compare automorphism images.
class ArtinGroup {
 public:
  explicit ArtinGroup(DefiningGraph g);

  const DefiningGraph& graph() const noexcept { return graph_; }
  std::size_t rank() const noexcept { return graph_.node_count(); }

  /// Distinct adjacent generators commute; a generator never "commutes past" itself.
  bool commute(NodeId a, NodeId b) const { return a != b && graph_.adjacent(a, b); }

  /// Freely reduces modulo the commutation relations. The result has no
  /// pair x^e ... x^-e whose intervening letters all commute with x.
  Word reduce(std::span<const Letter> w) const;
  bool is_reduced(std::span<const Letter> w) const;

  /// Reduced form, then the lexicographically least arrangement reachable by
  /// commuting swaps (letters ordered by generator name, x before x^-1).
  Word canonical(std::span<const Letter> w) const;

  /// True iff w1 = w2 in A_Γ (reduce(w1 w2⁻¹) is empty). Throws std::logic_error
  /// if the canonical-form cross-check disagrees.
  bool equal(std::span<const Letter> w1, std::span<const Letter> w2) const;
  bool is_identity(std::span<const Letter> w) const { return reduce(w).empty(); }

  CyclicReduction cyclic_reduce(std::span<const Letter> w) const;

  /// reduce(g · w · g⁻¹)
  Word conjugate(std::span<const Letter> g, std::span<const Letter> w) const;
  Word product(std::span<const Letter> a, std::span<const Letter> b) const { return reduce(concat(a, b)); }

  /// Letter order used by canonical().
  bool letter_less(const Letter& a, const Letter& b) const;

  /// Whitespace-separated `x`, `x^-1`, `x^k`; powers are expanded.
  /// Throws std::invalid_argument for letters outside the graph.
  Word parse(std::string_view text) const;
  /// Inverse of parse(); the empty word formats as "".
  std::string format(std::span<const Letter> w) const;

 private:
  DefiningGraph graph_;
  std::vector<std::size_t> name_rank_;
};

using ArtinGroupPtr = std::shared_ptr<const ArtinGroup>;

inline ArtinGroupPtr make_group(DefiningGraph g) { return std::make_shared<const ArtinGroup>(std::move(g)); }

/// The free group on names[0..n): an ArtinGroup over the edgeless graph.
ArtinGroupPtr make_free_group(const std::vector<std::string>& names);

}  // namespace outvcd
