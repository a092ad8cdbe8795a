#pragma once

#include <cstddef>
#include <vector>

#include "outvcd/ideal_edges.hpp"

namespace outvcd {

struct HomologyResult {
  std::vector<std::size_t> reduced_betti;  // indexed by dimension 0..dim
  std::vector<std::vector<long>> torsion;  // invariant factors > 1, same indexing
  bool empty = false;                      // the empty complex (reduced H_{-1} = Z)
  bool dense_fallback = false;             // a non-unit pivot forced a Smith normal form

  /// All reduced homology groups vanish.
  bool trivial() const;
};

/// Integral reduced homology from the augmented chain complex. Throws
/// CapExceeded when the complex has more than `cap` simplices.
HomologyResult reduced_homology(const SimplicialComplex& c, std::size_t cap = kDefaultSimplexCap);

}  // namespace outvcd
