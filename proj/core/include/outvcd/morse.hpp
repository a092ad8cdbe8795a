#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "outvcd/ideal_edges.hpp"

namespace outvcd {

/// Replay of the size Morse function on L(r, s): starting from the star of
/// the base edge, vertices are added by increasing size and each descending
/// link must be a cone on the prescribed apex, or (for maximal vertices when
/// s >= 1) isomorphic to L(r, s − 1), which is certified recursively.
struct MorseCertificate {
  int r = 0;
  int s = 0;
  bool certified = false;
  std::string verdict;
  IdealEdge base;
  std::size_t vertices = 0;
  std::size_t star_vertices = 0;
  std::size_t cone_checks = 0;
  std::size_t link_isomorphisms = 0;
  std::size_t tie_orders_tried = 0;
  std::size_t tie_orders_passed = 0;
  std::vector<std::pair<int, int>> recursion;  // (r, s') certificates relied on
  std::vector<std::string> failures;           // offending vertices, first failing order
};

/// Throws std::invalid_argument when r < 2. `tie_orders` >= 1 orders are
/// tried for vertices of equal size: ascending mask, descending mask, then
/// shuffles seeded from `seed`. The certificate holds when every order passes.
MorseCertificate morse_collapse_certificate(int r, int s, std::size_t tie_orders = 5, std::uint32_t seed = 1);

}  // namespace outvcd
