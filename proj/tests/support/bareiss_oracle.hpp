#pragma once

// Fraction-free (Bareiss) elimination over the Gaussian integers. Slow but
// independent of the modular rank code.

#include "susygraph/linear_map.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

using susygraph::BigInt;
using susygraph::GaussInt;

inline GaussInt exact_divide(const GaussInt& a, const GaussInt& b) {
  const GaussInt num = a * b.conj();
  const BigInt n = b.norm();
  if (num.real() % n != 0 || num.imag() % n != 0) throw std::logic_error("bareiss: inexact division");
  return GaussInt(BigInt(num.real() / n), BigInt(num.imag() / n));
}

using Dense = std::vector<std::vector<GaussInt>>;

inline Dense dense(const susygraph::LinearMap& m) {
  Dense a(m.rows(), std::vector<GaussInt>(m.cols()));
  for (const auto& e : m.entries()) a[e.row][e.col] = e.value;
  return a;
}

inline std::size_t bareiss_rank(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  GaussInt prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = exact_divide(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      }
      a[i][c] = GaussInt(0);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

inline std::size_t bareiss_rank(const susygraph::LinearMap& m) { return bareiss_rank(dense(m)); }

}  // namespace oracle
