#pragma once

#include "susygraph/graph.hpp"
#include "susygraph/linear_map.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace susygraph {

inline constexpr double default_spectral_tol = 1e-8;
inline constexpr double default_vector_tol = 1e-6;

class NotSelfAdjoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnEigenpair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Eigen::MatrixXd to_dense_real(const LinearMap& m);
Eigen::MatrixXcd to_dense(const LinearMap& m);

// ---------------------------------------------------------------------------
// Exact dimensions

struct ComponentKernel {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t dim_ker_d = 0;
  std::size_t dim_rg_d = 0;
  std::size_t dim_ker_d_star = 0;
  /// dim Ker d = 1, dim Rg d = n_c - 1, dim Ker d* = m_c - (n_c - 1).
  bool matches_formula = false;
};

struct KernelReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;

  std::size_t dim_ker_d = 0;
  std::size_t dim_rg_d = 0;
  std::size_t dim_ker_d_star = 0;
  std::size_t dim_rg_d_star = 0;
  std::size_t dim_ker_q1 = 0;
  std::size_t dim_ker_q2 = 0;
  std::size_t dim_ker_hs = 0;

  std::vector<ComponentKernel> per_component;

  bool rank_nullity = false;        ///< for d and d*
  bool adjoint_rank = false;        ///< dim Rg d = dim Rg d*
  bool ker_q_splits = false;        ///< Ker Q_i = Ker d ⊕ Ker d*
  bool ker_q_equals_ker_hs = false; ///< Ker Q_i = Ker Q_i^2
  bool degree_sums = false;         ///< sum of in-degrees = sum of out-degrees = m
  bool component_formulas = false;
  /// Only for connected graphs: dim Ker Q = m - (n - 2).
  std::optional<bool> connected_formula;

  bool all_pass() const;
};

KernelReport kernel_report(const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Floating-point spectra

struct Spectrum {
  std::string source;
  std::vector<double> eigenvalues;  ///< ascending, with multiplicity
};

/// Eigenvalues of a self-adjoint map. Complex Hermitian maps go through the
/// real embedding [[A, -B], [B, A]], whose doubled spectrum is halved.
/// Throws NotSelfAdjoint unless m equals its adjoint exactly.
Spectrum symmetric_spectrum(const LinearMap& m, std::string source = {});

/// |a - b| / max(1, |a|, |b|): absolute below unit magnitude, relative above.
double scaled_deviation(double a, double b);

struct MultisetComparison {
  bool match = false;
  double max_deviation = 0.0;
};

/// Sorts both lists and compares them pointwise with scaled_deviation.
MultisetComparison compare_multisets(std::vector<double> a, std::vector<double> b, double tol);

struct PairingReport {
  std::size_t rank_d = 0;
  std::vector<double> singular_values;  ///< of d, descending
  Spectrum laplacian;                   ///< d*d
  Spectrum edge_laplacian;              ///< dd*
  Spectrum hamiltonian;                 ///< H_S
  double max_zero_magnitude = 0.0;      ///< largest |λ| among the exact-kernel eigenvalues
  double pair_deviation = 0.0;
  double singular_deviation = 0.0;
  double hamiltonian_deviation = 0.0;
  bool zero_counts = false;       ///< exactly rank(d) eigenvalues of each block are above tol
  bool nonzero_spectra_pair = false;
  bool match_singular_values = false;
  bool hamiltonian_is_union = false;
  bool even_multiplicity = false;
  double tol = default_spectral_tol;

  bool pass() const;
};

/// Nonzero spectra of d*d and dd* against each other and against σ_i(d)^2.
PairingReport pairing_check(const DirectedGraph& g, double tol = default_spectral_tol);

struct DiracReport {
  Spectrum q1;
  Spectrum q2;
  Spectrum hamiltonian;
  double q1_symmetry_deviation = 0.0;
  double q2_symmetry_deviation = 0.0;
  double q1_q2_deviation = 0.0;
  double squares_deviation = 0.0;
  bool q1_symmetric = false;
  bool q2_symmetric = false;
  bool q1_equals_q2 = false;
  bool squares_match_hamiltonian = false;

  bool pass() const;
};

DiracReport dirac_spectrum(const DirectedGraph& g, double tol = default_spectral_tol);

// ---------------------------------------------------------------------------
// Polar decomposition d = S|d|

struct PolarResiduals {
  double d_eq_s_absd = 0.0;                ///< ‖d - S|d|‖
  double d_star_eq_absd_s_star = 0.0;      ///< ‖d* - |d|S*‖
  double d_eq_abs_d_star_s = 0.0;          ///< ‖d - |d*|S‖
  double abs_d_star_eq_s_absd_s_star = 0.0;///< ‖|d*| - S|d|S*‖
  double intertwining = 0.0;               ///< ‖S(d*d)S* - dd*‖
  double dirac_factorization = 0.0;        ///< ‖Q1 - [[0,S*],[S,0]] diag(|d|,|d*|)‖
  double s_star_s_projector = 0.0;         ///< ‖S*S - (1 - P_Ker d)‖
  double s_s_star_projector = 0.0;         ///< SS* idempotent and fixing Rg d

  double max() const;
};

struct PolarParts {
  std::vector<double> singular_values;  ///< positive, descending
  Eigen::MatrixXd s;                    ///< partial isometry H0 -> H1
  Eigen::MatrixXd abs_d;                ///< (d*d)^{1/2}
  Eigen::MatrixXd abs_d_star;           ///< (dd*)^{1/2}
  PolarResiduals residuals;             ///< max-abs entry norms
  double tol = default_spectral_tol;

  bool pass() const { return residuals.max() < tol; }
};

PolarParts polar_decompose(const DirectedGraph& g, double tol = default_spectral_tol);

// ---------------------------------------------------------------------------
// Eigenvector transport between d*d and dd*

struct TransportResiduals {
  double dd_star_g = 0.0;    ///< ‖dd* g - E g‖
  double d_star_g = 0.0;     ///< ‖d* g - λ f‖
  double d_f = 0.0;          ///< ‖d f - λ g‖
  double q1_plus = 0.0;      ///< Q1 (f, g) = λ (f, g)
  double q1_minus = 0.0;     ///< Q1 (f,-g) = -λ (f,-g)
  double q2_plus = 0.0;      ///< Q2 (if, g) = λ (if, g)
  double q2_minus = 0.0;     ///< Q2 (if,-g) = -λ (if,-g)
  double hamiltonian = 0.0;  ///< all four are H_S eigenvectors with E
  double chi_pure = 0.0;     ///< chi (f,0) = (f,0), chi (0,g) = -(0,g)
  double span_excess = 0.0;  ///< third singular value of the four vectors

  double max() const;
};

struct TransportReport {
  double energy = 0.0;
  double lambda = 0.0;
  StateVector g = StateVector::zero(SpaceTag{Space::edge, 0});
  TransportResiduals residuals;
  /// Gram determinant of (f,g), (f,-g); 4 for unit f and g.
  double q1_pair_gram = 0.0;
  bool q1_pair_independent = false;
  double tol = default_vector_tol;

  bool pass() const { return q1_pair_independent && residuals.max() < tol; }
};

/// Maps a unit eigenvector f of d*d with eigenvalue E > tol to g = E^{-1/2} d f
/// and verifies the supersymmetric partner relations. Throws NotAnEigenpair if
/// E <= tol, f is not a unit vector, or ‖d*d f - E f‖ > tol.
TransportReport transport_eigenpair(const DirectedGraph& g, double energy, const StateVector& f,
                                    double tol = default_vector_tol);

// ---------------------------------------------------------------------------
// Zero modes

struct ZeroModeReport {
  std::size_t dim_ker_hs = 0;
  std::size_t bosonic = 0;      ///< chi = +1 kernel vectors
  std::size_t fermionic = 0;    ///< chi = -1 kernel vectors
  std::size_t unclassified = 0; ///< mixed support (never expected)
  std::size_t components = 0;
  std::size_t cycle_count = 0;
  bool bosonic_are_constants = false;    ///< span of component indicators
  bool fermionic_span_cycles = false;    ///< equal span with the cycle basis
  bool counts_match = false;

  bool pass() const;
};

/// Exact basis of Ker H_S split by grading.
ZeroModeReport zero_mode_classification(const DirectedGraph& g);

}  // namespace susygraph
