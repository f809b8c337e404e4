#pragma once

#include "susygraph/linear_map.hpp"

#include <cstddef>
#include <vector>

namespace susygraph {

/// Rank over Q(i) together with a set of rows and columns whose square
/// submatrix is nonsingular.
///
/// Ranks are computed modulo primes p ≡ 1 (mod 4), where i maps to a square
/// root of -1, so reduction is a ring homomorphism from Z[i] and every
/// modular rank is a lower bound. If the true rank exceeded the largest
/// modular rank r, some (r+1)-minor would be a nonzero Gaussian integer of
/// modulus at most the Hadamard bound H. Primes are added until their product
/// exceeds H (H^2 for complex maps), at which point that minor could not
/// vanish modulo all of them.
struct RankCertificate {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t primes_used = 0;
};

RankCertificate exact_rank_certificate(const LinearMap& m);

std::size_t exact_rank(const LinearMap& m);

/// Exact kernel basis of a map with real integer entries, as the rows of the
/// returned map (domain = m.domain(), one row per basis vector). Each row is
/// a primitive integer vector. Throws std::invalid_argument for complex maps.
LinearMap exact_kernel(const LinearMap& m);

/// Vertical concatenation of maps sharing a domain.
LinearMap stack_rows(const LinearMap& top, const LinearMap& bottom);

}  // namespace susygraph
