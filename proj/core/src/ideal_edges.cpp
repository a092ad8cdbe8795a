#include "outvcd/ideal_edges.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace outvcd {

std::string HalfEdgeSet::name(std::uint32_t id) const {
  if (id >= size()) throw std::out_of_range("half-edge id out of range");
  if (is_single(id)) return "b" + std::to_string(id - 2 * static_cast<std::uint32_t>(r) + 1);
  return (id % 2 ? "abar" : "a") + std::to_string(id / 2 + 1);
}

std::uint32_t IdealEdge::size() const { return static_cast<std::uint32_t>(std::popcount(inside)); }

bool is_ideal_edge(const HalfEdgeSet& h, std::uint32_t inside) {
  if ((inside & ~h.full_mask()) != 0 || (inside & 1u) == 0) return false;
  const auto in = static_cast<std::uint32_t>(std::popcount(inside));
  return in >= 2 && h.size() - in >= 2;
}

int split_pairs(const HalfEdgeSet& h, IdealEdge e) {
  int count = 0;
  for (int i = 1; i <= h.r; ++i) {
    const bool x = (e.inside >> h.a(i)) & 1u;
    const bool y = (e.inside >> h.abar(i)) & 1u;
    count += x != y;
  }
  return count;
}

bool is_legal(const HalfEdgeSet& h, IdealEdge e) { return split_pairs(h, e) <= 1; }

bool compatible(const HalfEdgeSet& h, IdealEdge x, IdealEdge y) {
  // both insides hold the basepoint, so only three of the four side pairs can be disjoint
  const std::uint32_t ox = x.outside(h), oy = y.outside(h);
  return (x.inside & oy) == 0 || (y.inside & ox) == 0 || (ox & oy) == 0;
}

std::string format(const HalfEdgeSet& h, IdealEdge e) {
  std::string in, out;
  for (std::uint32_t id = 0; id < h.size(); ++id) {
    std::string& side = ((e.inside >> id) & 1u) ? in : out;
    if (!side.empty()) side += ",";
    side += h.name(id);
  }
  return "{" + in + " | " + out + "}";
}

std::vector<IdealEdge> enumerate_ideal_edges(const HalfEdgeSet& h, bool legal_only, std::vector<std::string>* warnings) {
  std::vector<IdealEdge> out;
  if (h.r < 0 || h.s < 0) throw std::invalid_argument("negative half-edge counts");
  if (h.size() > kMaxHalfEdges) throw CapExceeded("more than 10 half-edges");
  if (h.size() < 4) {
    if (warnings) warnings->push_back("fewer than 4 half-edges: no ideal edges");
    return out;
  }
  for (std::uint32_t mask = 1; mask <= h.full_mask(); mask += 2) {
    if (!is_ideal_edge(h, mask)) continue;
    const IdealEdge e{mask};
    if (!legal_only || is_legal(h, e)) out.push_back(e);
  }
  return out;
}

SimplicialComplex SimplicialComplex::flag(std::size_t vertices,
                                          const std::function<bool(std::size_t, std::size_t)>& adjacent,
                                          std::size_t cap) {
  SimplicialComplex c;
  c.n_ = vertices;
  const std::size_t words = (vertices + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<Bits> adj(vertices, Bits(words, 0));
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j)
      if (adjacent(i, j)) {
        adj[i][j / 64] |= 1ull << (j % 64);
        adj[j][i / 64] |= 1ull << (i % 64);
      }

  std::size_t total = 0;
  Simplex clique;
  // `common` holds every vertex adjacent to the whole clique
  std::function<void(const Bits&)> grow = [&](const Bits& common) {
    const std::size_t d = clique.size() - 1;
    if (c.by_dim_.size() <= d) c.by_dim_.resize(d + 1);
    c.by_dim_[d].push_back(clique);
    if (++total > cap) throw CapExceeded("simplex cap of " + std::to_string(cap) + " exceeded");
    bool maximal = true;
    for (std::size_t w = 0; w < words; ++w) maximal = maximal && common[w] == 0;
    if (maximal) c.maximal_.push_back(clique);
    for (std::size_t v = clique.back() + 1; v < vertices; ++v) {
      if (!((common[v / 64] >> (v % 64)) & 1ull)) continue;
      Bits next(words);
      for (std::size_t w = 0; w < words; ++w) next[w] = common[w] & adj[v][w];
      clique.push_back(static_cast<std::uint32_t>(v));
      grow(next);
      clique.pop_back();
    }
  };
  for (std::size_t v = 0; v < vertices; ++v) {
    clique = {static_cast<std::uint32_t>(v)};
    grow(adj[v]);
  }
  std::sort(c.maximal_.begin(), c.maximal_.end());
  return c;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices, std::vector<Simplex> facets, std::size_t cap) {
  SimplicialComplex c;
  c.n_ = vertices;
  std::set<Simplex> all;
  for (Simplex& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty() || f.back() >= vertices || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("bad facet");
    if (f.size() > 20) throw CapExceeded("facet too large");
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((mask >> i) & 1u) face.push_back(f[i]);
      all.insert(std::move(face));
      if (all.size() > cap) throw CapExceeded("simplex cap of " + std::to_string(cap) + " exceeded");
    }
  }
  for (const Simplex& s : all) {
    if (c.by_dim_.size() < s.size()) c.by_dim_.resize(s.size());
    c.by_dim_[s.size() - 1].push_back(s);
  }
  for (const Simplex& s : all) {
    bool maximal = true;
    for (const Simplex& f : facets)
      if (f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end())) maximal = false;
    if (maximal) c.maximal_.push_back(s);
  }
  return c;
}

const std::vector<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::simplex_count() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_dim_) out.push_back(level.size());
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& simplex) const {
  if (simplex.empty()) return std::nullopt;
  const auto& level = simplices(static_cast<int>(simplex.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), simplex);
  if (it == level.end() || *it != simplex) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

IdealEdgeComplex build_complex(const HalfEdgeSet& h, bool legal_only, std::size_t simplex_cap) {
  IdealEdgeComplex out;
  out.half_edges = h;
  out.legal_only = legal_only;
  out.vertices = enumerate_ideal_edges(h, legal_only);
  const auto& v = out.vertices;
  out.complex = SimplicialComplex::flag(
      v.size(), [&](std::size_t i, std::size_t j) { return compatible(h, v[i], v[j]); }, simplex_cap);
  return out;
}

}  // namespace outvcd
