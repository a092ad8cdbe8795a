#include "outvcd/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "outvcd/lattice.hpp"

namespace outvcd {

namespace {

using Column = std::vector<std::pair<std::uint32_t, long>>;  // (row, coefficient), rows ascending

long checked_mul_sub(long a, long f, long b) {
  long prod = 0, out = 0;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("boundary coefficient overflow");
  return out;
}

// col -= f * other
void axpy(Column& col, long f, const Column& other) {
  Column out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || other[j].first < col[i].first) {
      out.push_back({other[j].first, checked_mul_sub(0, f, other[j].second)});
      ++j;
    } else {
      const long v = checked_mul_sub(col[i].second, f, other[j].second);
      if (v != 0) out.push_back({col[i].first, v});
      ++i;
      ++j;
    }
  }
  col = std::move(out);
}

Column boundary(const SimplicialComplex& c, int d, std::size_t idx) {
  if (d == 0) return {{0u, 1}};  // augmentation
  const auto& s = c.simplices(d)[idx];
  Column col;
  for (std::size_t i = 0; i < s.size(); ++i) {
    SimplicialComplex::Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) face.push_back(s[j]);
    col.push_back({static_cast<std::uint32_t>(*c.index_of(face)), i % 2 ? -1 : 1});
  }
  std::sort(col.begin(), col.end());
  return col;
}

struct Reduction {
  std::size_t rank = 0;
  std::vector<long> invariants;  // > 1
  std::vector<std::uint32_t> lows;
  bool dense = false;
};

std::optional<Reduction> reduce_unit(const SimplicialComplex& c, int d, const std::vector<char>& cleared) {
  Reduction r;
  std::unordered_map<std::uint32_t, Column> pivots;
  const std::size_t cols = c.simplices(d).size();
  for (std::size_t j = 0; j < cols; ++j) {
    if (!cleared.empty() && cleared[j]) continue;
    Column col = boundary(c, d, j);
    while (!col.empty()) {
      auto it = pivots.find(col.back().first);
      if (it == pivots.end()) break;
      const long f = col.back().second * it->second.back().second;  // pivot is ±1
      axpy(col, f, it->second);
    }
    if (col.empty()) continue;
    if (std::labs(col.back().second) != 1) return std::nullopt;
    r.lows.push_back(col.back().first);
    pivots.emplace(col.back().first, std::move(col));
    ++r.rank;
  }
  return r;
}

Reduction reduce_dense(const SimplicialComplex& c, int d) {
  const std::size_t rows = d == 0 ? 1 : c.simplices(d - 1).size();
  const std::size_t cols = c.simplices(d).size();
  if (rows * cols > 25'000'000) throw CapExceeded("boundary matrix too large for a dense Smith normal form");
  std::vector<IntVector> m(rows, IntVector(cols, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (auto [row, v] : boundary(c, d, j)) m[row][j] = v;
  Reduction r;
  r.dense = true;
  for (long f : smith_invariants(std::move(m))) {
    ++r.rank;
    if (f > 1) r.invariants.push_back(f);
  }
  return r;
}

}  // namespace

bool HomologyResult::trivial() const {
  if (empty) return false;
  for (std::size_t b : reduced_betti)
    if (b) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

HomologyResult reduced_homology(const SimplicialComplex& c, std::size_t cap) {
  if (c.simplex_count() > cap) throw CapExceeded("homology cap of " + std::to_string(cap) + " simplices exceeded");
  HomologyResult out;
  const int top = c.dimension();
  if (top < 0) {
    out.empty = true;
    return out;
  }

  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);  // rank[d] = rank of ∂_d
  out.torsion.assign(static_cast<std::size_t>(top) + 1, {});
  std::vector<char> cleared;
  for (int d = top; d >= 0; --d) {
    std::optional<Reduction> r = reduce_unit(c, d, cleared);
    if (!r) {
      r = reduce_dense(c, d);
      out.dense_fallback = true;
    }
    rank[static_cast<std::size_t>(d)] = r->rank;
    if (d >= 1) out.torsion[static_cast<std::size_t>(d - 1)] = r->invariants;
    // a column of ∂_{d-1} indexed by a low of ∂_d reduces to zero
    cleared.assign(d >= 1 ? c.simplices(d - 1).size() : 0, 0);
    if (d >= 1 && !r->dense)
      for (std::uint32_t low : r->lows) cleared[low] = 1;
  }
  for (int d = 0; d <= top; ++d) {
    const auto n = c.simplices(d).size();
    out.reduced_betti.push_back(n - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d) + 1]);
  }
  return out;
}

}  // namespace outvcd
