#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outvcd/graph.hpp"

namespace outvcd {

struct NamedGraph {
  std::string name;
  DefiningGraph graph;
};

/// One representative per isomorphism class of trees on n nodes (n >= 1),
/// nodes named n0, n1, ...
std::vector<DefiningGraph> free_trees(std::size_t n);

/// Trees with 4..max_nodes nodes that are not stars.
std::vector<NamedGraph> nonstar_trees(std::size_t max_nodes);

/// Path a-b-c-d-e.
DefiningGraph fixture_p5();
/// 5-cycle v1..v5 with a leaf u at v1.
DefiningGraph fixture_c5_leaf();
/// Centre c with three legs c-x_i-y_i.
DefiningGraph fixture_spider();

/// Cycles of length 5, 6 and 7 with random trees attached (`per_length` each).
std::vector<NamedGraph> cycle_with_trees(std::size_t per_length, std::uint32_t seed);

/// Connected graphs of girth at least 5 with χ < 0.
std::vector<NamedGraph> girth5_graphs();

/// Connected triangle-free graphs containing a 4-cycle.
std::vector<NamedGraph> square_graphs();

/// Every eligible graph above, trees capped at `max_tree_nodes`.
std::vector<NamedGraph> verification_corpus(std::size_t max_tree_nodes, std::uint32_t seed = 2024);

}  // namespace outvcd
