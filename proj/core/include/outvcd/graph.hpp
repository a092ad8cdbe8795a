#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace outvcd {

/// Index of a node in a DefiningGraph (position in first-appearance order).
using NodeId = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number of the offending directive (0 when the whole input is at fault).
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A finite simple graph with named nodes. Immutable once built.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Builds a graph from node names and edges between them. Throws
  /// std::invalid_argument on self-loops, repeated edges, duplicate or
  /// malformed names.
  static DefiningGraph from_edges(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& edges);
  static DefiningGraph from_edges(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t node_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(NodeId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<NodeId> find(std::string_view name) const;
  /// Like find(), but throws std::out_of_range for unknown names.
  NodeId id(std::string_view name) const;

  /// Neighbours of v, sorted by id.
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool adjacent(NodeId a, NodeId b) const { return matrix_[a * names_.size() + b] != 0; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<std::size_t> edge_index(NodeId a, NodeId b) const;

  bool is_leaf(NodeId v) const { return degree(v) == 1; }
  std::size_t leaf_count() const;
  /// ν − e.
  long euler_characteristic() const {
    return static_cast<long>(node_count()) - static_cast<long>(edge_count());
  }

  /// Node ids sorted by name (code-point order).
  std::vector<NodeId> nodes_by_name() const;
  bool name_less(NodeId a, NodeId b) const { return names_[a] < names_[b]; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<char> matrix_;
  std::vector<Edge> edges_;
};

bool is_valid_node_name(std::string_view name);

/// Reads the line-oriented graph format (`# comment`, `node <name>`, `edge <a> <b>`).
DefiningGraph parse_graph(std::string_view text);
/// Emits the graph in the same format; parse_graph(to_graph_text(g)) reproduces g.
std::string to_graph_text(const DefiningGraph& g);

struct ValidationReport {
  bool is_connected = false;
  bool triangle_free = false;
  bool square_free = false;
  bool is_star = false;
  bool eligible = false;

  std::optional<NodeId> star_center;
  std::vector<NodeId> triangle;  // a witness triangle when !triangle_free
  std::vector<NodeId> square;    // a witness 4-cycle when !square_free
};

ValidationReport validate(const DefiningGraph& g);

/// Link-containment preorder: v <= w iff lk(v) is a subset of lk(w).
class DominationOrder {
 public:
  DominationOrder() = default;
  explicit DominationOrder(const DefiningGraph& g);

  bool leq(NodeId v, NodeId w) const { return leq_[v * n_ + w] != 0; }
  bool equivalent(NodeId v, NodeId w) const { return class_of_[v] == class_of_[w]; }

  /// Equivalence classes (equal links); members sorted by id, classes by smallest id.
  const std::vector<std::vector<NodeId>>& classes() const noexcept { return classes_; }
  std::size_t class_of(NodeId v) const { return class_of_.at(v); }
  /// Indices into classes() of the maximal classes.
  const std::vector<std::size_t>& maximal_classes() const noexcept { return maximal_; }
  bool is_maximal(NodeId v) const { return maximal_node_.at(v) != 0; }
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<char> leq_;
  std::vector<std::vector<NodeId>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> maximal_;
  std::vector<char> maximal_node_;
};

DominationOrder domination_order(const DefiningGraph& g);

/// Picks one member of a maximal equivalence class to stand for it in Γ₀.
using RepresentativePolicy =
    std::function<NodeId(const DefiningGraph&, std::span<const NodeId> members)>;

/// Default policy: the member with the lexicographically least name.
NodeId lexicographic_representative(const DefiningGraph& g, std::span<const NodeId> members);

struct NodeStats {
  std::size_t valence = 0;    // |v|
  std::size_t valence0 = 0;   // valence inside Γ₀
  std::size_t valence_u = 0;  // |L_v ∩ U|
};

struct GammaZero {
  std::vector<NodeId> representatives;  // one per maximal class, in class order
  std::vector<NodeId> nodes;            // V₀, sorted by id
  std::vector<Edge> edges;              // E₀, induced
  std::vector<NodeId> u;                // maximal nodes alone in their class, sorted by id
  std::vector<NodeStats> stats;         // indexed by NodeId
  std::vector<char> in_v0;
  std::vector<char> in_u;
  bool pruned_leaves = false;  // V₀ is exactly the set of non-leaves
  bool connected = false;

  bool contains(NodeId v) const { return in_v0.at(v) != 0; }
  bool in_U(NodeId v) const { return in_u.at(v) != 0; }
};

GammaZero gamma_zero(const DefiningGraph& g, const DominationOrder& order,
                     const RepresentativePolicy& policy = lexicographic_representative);

struct HubData {
  std::vector<NodeId> delta;  // nodes of Δ(v), the union of pieces through v
  bool is_hub = false;
};

/// Maximal 2-connected subgraphs (bridges count as single-edge pieces).
struct PieceDecomposition {
  std::vector<std::vector<std::size_t>> pieces;  // edge indices, sorted
  std::vector<std::vector<NodeId>> piece_nodes;  // sorted
  std::vector<std::size_t> delta_c;              // components of Γ − {v}
  std::vector<std::size_t> membership;           // number of pieces containing v
  std::vector<HubData> hubs;                     // indexed by NodeId

  std::size_t count() const noexcept { return pieces.size(); }
  bool is_hub(NodeId v) const { return hubs.at(v).is_hub; }
};

PieceDecomposition pieces(const DefiningGraph& g, const DominationOrder& order);

/// Number of connected components of g with node `removed` deleted
/// (pass std::nullopt to count components of g itself).
std::size_t component_count(const DefiningGraph& g, std::optional<NodeId> removed = std::nullopt);

/// Components of Γ − {removed}, each sorted by id, ordered by smallest member.
std::vector<std::vector<NodeId>> components_without(const DefiningGraph& g, NodeId removed);

/// Checks the structural facts the bound formulas rely on and returns one
/// message per violation (empty when everything holds).
std::vector<std::string> structural_anomalies(const DefiningGraph& g, const DominationOrder& order,
                                              const GammaZero& g0, const PieceDecomposition& p);

}  // namespace outvcd
