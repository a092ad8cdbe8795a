#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "outvcd/graph.hpp"

namespace outvcd {

/// Thrown when a graph fails the connected / triangle-free / not-a-star hypotheses.
class IneligibleGraph : public std::runtime_error {
 public:
  explicit IneligibleGraph(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Short human-readable reason for ineligibility ("star", "triangle", ...).
std::string ineligibility_reason(const ValidationReport& report);

/// Everything derived from Γ that the bound formulas and the witness
/// constructions need. Built once per graph.
struct GraphAnalysis {
  DefiningGraph graph;
  ValidationReport validation;
  DominationOrder order;
  GammaZero gamma0;
  PieceDecomposition pieces;
  std::vector<std::string> anomalies;
};

/// Validates g and derives Γ₀ and the piece decomposition. Throws IneligibleGraph.
GraphAnalysis analyze_structure(DefiningGraph g,
                                const RepresentativePolicy& policy = lexicographic_representative);

enum class LowerCase { Base, NonhubNode, NonhubEdge };
enum class UpperCase { General, UEqualsV0, PrunedLeaves };

std::string to_string(LowerCase c);
std::string to_string(UpperCase c);

struct LowerBound {
  long value = 0;
  LowerCase bound_case = LowerCase::Base;
  long base = 0;  // (π−1) + 2(ν−ν₀) − 2
  std::optional<NodeId> witness_node;
  std::optional<Edge> witness_edge;
};

struct UpperTerm {
  NodeId node = 0;
  long value = 0;  // 2|v| − 3 − max(|v|_U − 1, 0)
};

struct UpperBound {
  long value = 0;
  UpperCase bound_case = UpperCase::General;
  std::vector<UpperTerm> terms;  // one per node of V₀
  std::optional<long> u_equals_v0_value;
  std::optional<long> pruned_leaves_value;
};

LowerBound lower_bound(const GraphAnalysis& a);
UpperBound upper_bound(const GraphAnalysis& a);

struct TheoremTag {
  enum class Kind { Tree, NoShortCycles, Cycle };
  Kind kind = Kind::Tree;
  std::size_t cycle_length = 0;  // only for Cycle

  friend bool operator==(const TheoremTag&, const TheoremTag&) = default;
};

std::string to_string(const TheoremTag& tag);

struct GraphCounts {
  std::size_t nodes = 0;        // ν
  std::size_t gamma0_nodes = 0;  // ν₀
  std::size_t edges = 0;        // e
  std::size_t leaves = 0;       // ℓ
  std::size_t pieces = 0;       // π
  long euler = 0;               // χ
  std::optional<std::size_t> cycle_length;  // when χ = 0
};

struct VcdReport {
  GraphAnalysis analysis;
  GraphCounts counts;
  LowerBound lower;
  UpperBound upper;
  std::optional<long> exact;
  long kernel_rank = 0;  // π − 1
  std::vector<TheoremTag> theorems;
  std::vector<std::string> anomalies;  // structural + formula cross-checks that failed

  bool has(TheoremTag::Kind kind) const;
};

/// Length of the unique cycle of a connected graph with χ = 0, found by peeling leaves.
std::optional<std::size_t> unique_cycle_length(const DefiningGraph& g);

VcdReport vcd_report(GraphAnalysis analysis);
VcdReport vcd_report(const DefiningGraph& g);

}  // namespace outvcd
