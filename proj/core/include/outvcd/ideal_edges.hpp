#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace outvcd {

/// Half-edges at a vertex: r pairs (a_i, ā_i) lying on cycles and s singles
/// b_j. Ids: a_i = 2(i−1), ā_i = 2(i−1)+1, b_j = 2r + j − 1. The basepoint is a_1.
struct HalfEdgeSet {
  int r = 0;
  int s = 0;

  static constexpr std::uint32_t basepoint = 0;

  std::uint32_t size() const { return static_cast<std::uint32_t>(2 * r + s); }
  std::uint32_t full_mask() const { return size() >= 32 ? ~0u : (1u << size()) - 1u; }
  std::uint32_t a(int i) const { return static_cast<std::uint32_t>(2 * (i - 1)); }
  std::uint32_t abar(int i) const { return static_cast<std::uint32_t>(2 * (i - 1) + 1); }
  std::uint32_t b(int j) const { return static_cast<std::uint32_t>(2 * r + j - 1); }
  bool is_single(std::uint32_t id) const { return id >= static_cast<std::uint32_t>(2 * r); }
  /// "a1", "abar1", "b2"
  std::string name(std::uint32_t id) const;
};

/// A bipartition of H into two sides of size >= 2, stored by its inside
/// (the side holding the basepoint) as a bitmask.
struct IdealEdge {
  std::uint32_t inside = 0;

  std::uint32_t size() const;
  std::uint32_t outside(const HalfEdgeSet& h) const { return h.full_mask() & ~inside; }

  friend bool operator==(const IdealEdge&, const IdealEdge&) = default;
  friend auto operator<=>(const IdealEdge&, const IdealEdge&) = default;
};

/// Valid inside mask for H: contains the basepoint, both sides of size >= 2.
bool is_ideal_edge(const HalfEdgeSet& h, std::uint32_t inside);

/// Number of pairs (a_i, ā_i) separated by the edge.
int split_pairs(const HalfEdgeSet& h, IdealEdge e);
/// Splits at most one pair.
bool is_legal(const HalfEdgeSet& h, IdealEdge e);
/// Some side of one is disjoint from some side of the other (nested or co-nested).
bool compatible(const HalfEdgeSet& h, IdealEdge x, IdealEdge y);

/// "{a1,abar1 | a2,abar2,b1}"
std::string format(const HalfEdgeSet& h, IdealEdge e);

/// All ideal edges (or only the legal ones), sorted by inside mask. For |H| < 4
/// there are none; a warning is appended when `warnings` is given.
std::vector<IdealEdge> enumerate_ideal_edges(const HalfEdgeSet& h, bool legal_only,
                                             std::vector<std::string>* warnings = nullptr);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite abstract simplicial complex on vertices 0..n−1, with the simplices
/// of each dimension kept as sorted vertex lists in lexicographic order.
class SimplicialComplex {
 public:
  using Simplex = std::vector<std::uint32_t>;

  SimplicialComplex() = default;

  /// Clique complex of a graph. Throws CapExceeded once more than `cap` simplices appear.
  static SimplicialComplex flag(std::size_t vertices, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                                std::size_t cap);
  /// Downward closure of the given facets on vertices 0..vertices−1.
  static SimplicialComplex from_facets(std::size_t vertices, std::vector<Simplex> facets, std::size_t cap);

  std::size_t vertex_count() const noexcept { return n_; }
  /// −1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t simplex_count() const;
  /// Number of simplices in each dimension 0..dimension().
  std::vector<std::size_t> f_vector() const;
  const std::vector<Simplex>& maximal_simplices() const noexcept { return maximal_; }
  /// Position of a sorted simplex in simplices(simplex.size() − 1).
  std::optional<std::size_t> index_of(const Simplex& simplex) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<Simplex> maximal_;
};

struct IdealEdgeComplex {
  HalfEdgeSet half_edges;
  bool legal_only = false;
  std::vector<IdealEdge> vertices;
  SimplicialComplex complex;
};

constexpr std::uint32_t kMaxHalfEdges = 10;
constexpr std::size_t kDefaultSimplexCap = 200'000;

/// B(v) (all ideal edges) or L(v) (legal ones) as a flag complex on
/// compatibility. Throws CapExceeded when |H| > 10 or the simplex cap is hit.
IdealEdgeComplex build_complex(const HalfEdgeSet& h, bool legal_only, std::size_t simplex_cap = kDefaultSimplexCap);

}  // namespace outvcd
