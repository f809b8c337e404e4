#pragma once

#include "susygraph/gaussian.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace susygraph {

/// Vertex space H0, edge space H1, or their direct sum H = H0 ⊕ H1
/// (vertex block first).
enum class Space { vertex, edge, super };

std::string_view to_string(Space space);

struct SpaceTag {
  Space kind = Space::vertex;
  std::size_t dim = 0;

  friend bool operator==(const SpaceTag&, const SpaceTag&) = default;
};

std::string to_string(const SpaceTag& tag);

class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  GaussInt value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse operator with exact Gaussian-integer entries, stored as nonzero
/// triplets sorted by (row, col).
class LinearMap {
 public:
  /// The zero map.
  LinearMap(SpaceTag domain, SpaceTag codomain);

  /// Sums repeated coordinates and drops zeros.
  static LinearMap from_entries(SpaceTag domain, SpaceTag codomain, std::vector<Entry> entries);
  static LinearMap identity(SpaceTag space);

  const SpaceTag& domain() const noexcept { return domain_; }
  const SpaceTag& codomain() const noexcept { return codomain_; }
  std::size_t rows() const noexcept { return codomain_.dim; }
  std::size_t cols() const noexcept { return domain_.dim; }

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::span<const Entry> row(std::size_t r) const;
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  GaussInt at(std::size_t r, std::size_t c) const;
  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_real() const;
  /// Largest |entry|^2, zero for the zero map.
  BigInt max_norm() const;

  /// Rows/columns restricted to the given index lists (in the order given).
  /// The result keeps the space kinds with the new dimensions.
  LinearMap submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.entries_ == b.entries_;
  }

 private:
  LinearMap(SpaceTag domain, SpaceTag codomain, std::vector<Entry> sorted_entries);
  void index_rows();

  SpaceTag domain_;
  SpaceTag codomain_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> row_start_;
};

LinearMap add(const LinearMap& a, const LinearMap& b);
LinearMap subtract(const LinearMap& a, const LinearMap& b);
LinearMap scale(const GaussInt& c, const LinearMap& m);
/// a ∘ b (b applied first).
LinearMap compose(const LinearMap& a, const LinearMap& b);
LinearMap adjoint(const LinearMap& m);
/// ab - ba
LinearMap commutator(const LinearMap& a, const LinearMap& b);
/// ab + ba
LinearMap anticommutator(const LinearMap& a, const LinearMap& b);
/// m / 2, exact. Throws std::domain_error on an odd entry.
LinearMap halve(const LinearMap& m);

inline LinearMap operator+(const LinearMap& a, const LinearMap& b) { return add(a, b); }
inline LinearMap operator-(const LinearMap& a, const LinearMap& b) { return subtract(a, b); }
inline LinearMap operator*(const LinearMap& a, const LinearMap& b) { return compose(a, b); }
inline LinearMap operator*(const GaussInt& c, const LinearMap& m) { return scale(c, m); }

/// Block operator on H from its four blocks:
///   [[vv : H0->H0, ve : H1->H0],
///    [ev : H0->H1, ee : H1->H1]]
LinearMap assemble_blocks(const LinearMap& vv, const LinearMap& ve, const LinearMap& ev, const LinearMap& ee);

/// Coordinate lines "(row, col, re, im)" sorted by (row, col).
std::string to_triplet_text(const LinearMap& m);

/// Dense complex coefficient vector over a tagged space.
struct StateVector {
  SpaceTag space;
  std::vector<std::complex<double>> coefficients;

  StateVector(SpaceTag tag, std::vector<std::complex<double>> coeffs);
  static StateVector zero(SpaceTag tag) { return StateVector(tag, std::vector<std::complex<double>>(tag.dim)); }

  std::size_t size() const noexcept { return coefficients.size(); }
  std::complex<double>& operator[](std::size_t k) { return coefficients[k]; }
  const std::complex<double>& operator[](std::size_t k) const { return coefficients[k]; }
};

StateVector apply(const LinearMap& m, const StateVector& v);

}  // namespace susygraph
