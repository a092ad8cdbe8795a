#pragma once

#include <cstddef>
#include <vector>

namespace outvcd {

using IntVector = std::vector<long>;

/// Rank over Q of a set of integer vectors of equal length.
std::size_t integer_rank(const std::vector<IntVector>& rows);

/// Invariant factors (nonzero diagonal of the Smith normal form) of a dense
/// integer matrix given row-major. Throws std::overflow_error if an entry
/// leaves the 64-bit range.
std::vector<long> smith_invariants(std::vector<IntVector> matrix);

}  // namespace outvcd
