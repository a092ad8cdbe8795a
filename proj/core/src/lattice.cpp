#include "outvcd/lattice.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace outvcd {

namespace {

__extension__ typedef __int128 Wide;

long checked(Wide value) {
  if (value > std::numeric_limits<long>::max() || value < std::numeric_limits<long>::min())
    throw std::overflow_error("integer matrix entry overflow");
  return static_cast<long>(value);
}

}  // namespace

std::size_t integer_rank(const std::vector<IntVector>& input) {
  std::vector<IntVector> rows = input;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const long a = rows[rank][c];
      const long b = rows[r][c];
      long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = checked(static_cast<Wide>(a) * rows[r][k] - static_cast<Wide>(b) * rows[rank][k]);
        g = std::gcd(g, rows[r][k]);
      }
      if (g > 1)
        for (auto& x : rows[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

std::vector<long> smith_invariants(std::vector<IntVector> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::vector<long> diagonal;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::labs(m[i][j]) < std::labs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diagonal;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      const long p = m[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long q = m[i][t] / p;
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] = checked(m[i][j] - static_cast<Wide>(q) * m[t][j]);
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long q = m[t][j] / p;
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] = checked(m[i][j] - static_cast<Wide>(q) * m[i][t]);
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;

      // divisibility: the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % p != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] = checked(static_cast<Wide>(m[t][k]) + m[i][k]);
            divides = false;
          }
      if (divides) break;
    }
    diagonal.push_back(std::labs(m[t][t]));
  }
  return diagonal;
}

}  // namespace outvcd
