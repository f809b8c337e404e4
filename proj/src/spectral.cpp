#include "susygraph/spectral.hpp"

#include "susygraph/cycle_space.hpp"
#include "susygraph/exact_rank.hpp"
#include "susygraph/operators.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace susygraph {

Eigen::MatrixXd to_dense_real(const LinearMap& m) {
  if (!m.is_real()) throw std::invalid_argument("to_dense_real: map has non-real entries");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (const auto& e : m.entries()) {
    out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value.real().convert_to<double>();
  }
  return out;
}

Eigen::MatrixXcd to_dense(const LinearMap& m) {
  Eigen::MatrixXcd out =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (const auto& e : m.entries()) {
    out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value.to_complex();
  }
  return out;
}

// ---------------------------------------------------------------------------

bool KernelReport::all_pass() const {
  return rank_nullity && adjoint_rank && ker_q_splits && ker_q_equals_ker_hs && degree_sums && component_formulas &&
         connected_formula.value_or(true);
}

KernelReport kernel_report(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto inc = build_incidence(g);
  const auto ops = build_super_operators(g);
  const auto comps = connected_components(g);

  KernelReport r;
  r.vertices = n;
  r.edges = m;
  r.components = comps.count();
  r.dim_rg_d = exact_rank(inc.d);
  r.dim_ker_d = exact_kernel(inc.d).rows();
  r.dim_rg_d_star = exact_rank(inc.d_star);
  r.dim_ker_d_star = m - r.dim_rg_d_star;
  r.dim_ker_q1 = n + m - exact_rank(ops.q1);
  r.dim_ker_q2 = n + m - exact_rank(ops.q2);
  r.dim_ker_hs = n + m - exact_rank(ops.hamiltonian);

  r.rank_nullity = r.dim_ker_d + r.dim_rg_d == n && r.dim_ker_d_star + r.dim_rg_d_star == m;
  r.adjoint_rank = r.dim_rg_d == r.dim_rg_d_star;
  r.ker_q_splits = r.dim_ker_q1 == r.dim_ker_d + r.dim_ker_d_star && r.dim_ker_q2 == r.dim_ker_q1;
  r.ker_q_equals_ker_hs = r.dim_ker_hs == r.dim_ker_q1;

  std::size_t in_sum = 0;
  std::size_t out_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    in_sum += g.in_degree(v);
    out_sum += g.out_degree(v);
  }
  r.degree_sums = in_sum == m && out_sum == m;

  std::vector<std::vector<std::size_t>> comp_edges(comps.count());
  for (std::size_t k = 0; k < m; ++k) comp_edges[comps.label[g.edge(k).tail]].push_back(k);
  bool all_match = true;
  std::size_t sum_ker_d = 0;
  std::size_t sum_rg_d = 0;
  std::size_t sum_ker_d_star = 0;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    const auto& verts = comps.members[c];
    const auto& edges = comp_edges[c];
    const std::size_t rank = exact_rank(inc.d.submatrix(edges, verts));
    ComponentKernel ck{
        .vertices = verts.size(),
        .edges = edges.size(),
        .dim_ker_d = verts.size() - rank,
        .dim_rg_d = rank,
        .dim_ker_d_star = edges.size() - rank,
        .matches_formula = false,
    };
    ck.matches_formula =
        ck.dim_ker_d == 1 && ck.dim_rg_d + 1 == ck.vertices && ck.dim_ker_d_star + ck.vertices == ck.edges + 1;
    all_match = all_match && ck.matches_formula;
    sum_ker_d += ck.dim_ker_d;
    sum_rg_d += ck.dim_rg_d;
    sum_ker_d_star += ck.dim_ker_d_star;
    r.per_component.push_back(ck);
  }
  r.component_formulas =
      all_match && sum_ker_d == r.dim_ker_d && sum_rg_d == r.dim_rg_d && sum_ker_d_star == r.dim_ker_d_star;

  if (comps.count() == 1) {
    const auto ker_q = static_cast<long long>(r.dim_ker_q1);
    const auto expected_q = static_cast<long long>(m) - (static_cast<long long>(n) - 2);
    const auto expected_cycles = static_cast<long long>(in_sum) - (static_cast<long long>(n) - 1);
    r.connected_formula = ker_q == expected_q && static_cast<long long>(r.dim_ker_d_star) == expected_cycles;
  }
  return r;
}

// ---------------------------------------------------------------------------

Spectrum symmetric_spectrum(const LinearMap& m, std::string source) {
  if (m.domain() != m.codomain() || !(m == adjoint(m))) {
    throw NotSelfAdjoint("symmetric_spectrum: " + (source.empty() ? std::string("map") : source) +
                         " is not self-adjoint");
  }
  Spectrum out{std::move(source), {}};
  const auto N = static_cast<Eigen::Index>(m.rows());
  if (N == 0) return out;

  if (m.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense_real(m), Eigen::EigenvaluesOnly);
    out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + N);
  } else {
    const Eigen::MatrixXcd dense = to_dense(m);
    Eigen::MatrixXd embedded(2 * N, 2 * N);
    embedded << dense.real(), -dense.imag(), dense.imag(), dense.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(embedded, Eigen::EigenvaluesOnly);
    std::vector<double> doubled(es.eigenvalues().data(), es.eigenvalues().data() + 2 * N);
    std::sort(doubled.begin(), doubled.end());
    for (Eigen::Index k = 0; k < N; ++k) out.eigenvalues.push_back(doubled[static_cast<std::size_t>(2 * k)]);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

double scaled_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

MultisetComparison compare_multisets(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return {false, std::numeric_limits<double>::infinity()};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, scaled_deviation(a[k], b[k]));
  return {worst <= tol, worst};
}

namespace {

std::vector<double> head(const std::vector<double>& v, std::size_t count) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<double> tail(const std::vector<double>& v, std::size_t count) {
  return {v.end() - static_cast<std::ptrdiff_t>(count), v.end()};
}

double max_magnitude(const std::vector<double>& v) {
  double worst = 0.0;
  for (double x : v) worst = std::max(worst, std::abs(x));
  return worst;
}

double min_value(const std::vector<double>& v) {
  return v.empty() ? std::numeric_limits<double>::infinity() : *std::min_element(v.begin(), v.end());
}

std::vector<double> singular_values(const Eigen::MatrixXd& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace

bool PairingReport::pass() const {
  return zero_counts && nonzero_spectra_pair && match_singular_values && hamiltonian_is_union && even_multiplicity;
}

PairingReport pairing_check(const DirectedGraph& g, double tol) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto inc = build_incidence(g);
  const auto ops = build_super_operators(g);

  PairingReport r;
  r.tol = tol;
  r.rank_d = exact_rank(inc.d);
  const std::size_t rank = r.rank_d;
  r.laplacian = symmetric_spectrum(inc.d_star * inc.d, "d*d");
  r.edge_laplacian = symmetric_spectrum(inc.d * inc.d_star, "dd*");
  r.hamiltonian = symmetric_spectrum(ops.hamiltonian, "H_S");
  r.singular_values = head(singular_values(to_dense_real(inc.d)), rank);

  const auto& lap = r.laplacian.eigenvalues;
  const auto& edge = r.edge_laplacian.eigenvalues;
  const auto& hs = r.hamiltonian.eigenvalues;
  const auto lap_nonzero = tail(lap, rank);
  const auto edge_nonzero = tail(edge, rank);
  const auto hs_nonzero = tail(hs, 2 * rank);

  r.max_zero_magnitude = std::max({max_magnitude(head(lap, n - rank)), max_magnitude(head(edge, m - rank)),
                                   max_magnitude(head(hs, n + m - 2 * rank))});
  r.zero_counts = r.max_zero_magnitude <= tol &&
                  std::min({min_value(lap_nonzero), min_value(edge_nonzero), min_value(hs_nonzero)}) > tol;

  const auto pair = compare_multisets(lap_nonzero, edge_nonzero, tol);
  r.pair_deviation = pair.max_deviation;
  r.nonzero_spectra_pair = pair.match;

  std::vector<double> sigma_sq;
  for (double s : r.singular_values) sigma_sq.push_back(s * s);
  const auto sv_lap = compare_multisets(lap_nonzero, sigma_sq, tol);
  const auto sv_edge = compare_multisets(edge_nonzero, sigma_sq, tol);
  r.singular_deviation = std::max(sv_lap.max_deviation, sv_edge.max_deviation);
  r.match_singular_values = sv_lap.match && sv_edge.match;

  std::vector<double> both = lap_nonzero;
  both.insert(both.end(), edge_nonzero.begin(), edge_nonzero.end());
  const auto uni = compare_multisets(hs_nonzero, both, tol);
  r.hamiltonian_deviation = uni.max_deviation;
  r.hamiltonian_is_union = uni.match;

  // A doubled multiset sorts into equal neighbours (x1, x1, x2, x2, ...).
  r.even_multiplicity = hs_nonzero.size() % 2 == 0;
  for (std::size_t k = 0; k + 1 < hs_nonzero.size(); k += 2) {
    r.even_multiplicity = r.even_multiplicity && scaled_deviation(hs_nonzero[k], hs_nonzero[k + 1]) <= tol;
  }
  return r;
}

// ---------------------------------------------------------------------------

bool DiracReport::pass() const { return q1_symmetric && q2_symmetric && q1_equals_q2 && squares_match_hamiltonian; }

DiracReport dirac_spectrum(const DirectedGraph& g, double tol) {
  const auto ops = build_super_operators(g);
  DiracReport r;
  r.q1 = symmetric_spectrum(ops.q1, "Q1");
  r.q2 = symmetric_spectrum(ops.q2, "Q2");
  r.hamiltonian = symmetric_spectrum(ops.hamiltonian, "H_S");

  auto negated = [](std::vector<double> v) {
    for (double& x : v) x = -x;
    return v;
  };
  const auto s1 = compare_multisets(r.q1.eigenvalues, negated(r.q1.eigenvalues), tol);
  const auto s2 = compare_multisets(r.q2.eigenvalues, negated(r.q2.eigenvalues), tol);
  const auto same = compare_multisets(r.q1.eigenvalues, r.q2.eigenvalues, tol);
  std::vector<double> squares;
  for (double x : r.q1.eigenvalues) squares.push_back(x * x);
  const auto sq = compare_multisets(squares, r.hamiltonian.eigenvalues, tol);

  r.q1_symmetry_deviation = s1.max_deviation;
  r.q2_symmetry_deviation = s2.max_deviation;
  r.q1_q2_deviation = same.max_deviation;
  r.squares_deviation = sq.max_deviation;
  r.q1_symmetric = s1.match;
  r.q2_symmetric = s2.match;
  r.q1_equals_q2 = same.match;
  r.squares_match_hamiltonian = sq.match;
  return r;
}

// ---------------------------------------------------------------------------

double PolarResiduals::max() const {
  return std::max({d_eq_s_absd, d_star_eq_absd_s_star, d_eq_abs_d_star_s, abs_d_star_eq_s_absd_s_star, intertwining,
                   dirac_factorization, s_star_s_projector, s_s_star_projector});
}

namespace {

double max_abs(const Eigen::MatrixXd& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

// Square root of a PSD matrix whose kernel dimension is known exactly; the
// kernel eigenvalues are set to zero instead of being square-rooted.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd& a, std::size_t kernel_dim) {
  if (a.size() == 0) return a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  Eigen::VectorXd roots = es.eigenvalues();
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    roots(k) = static_cast<std::size_t>(k) < kernel_dim ? 0.0 : std::sqrt(std::max(0.0, roots(k)));
  }
  return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

PolarParts polar_decompose(const DirectedGraph& g, double tol) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto inc = build_incidence(g);
  const std::size_t rank = exact_rank(inc.d);
  const Eigen::MatrixXd d = to_dense_real(inc.d);
  const Eigen::MatrixXd lap = d.transpose() * d;
  const Eigen::MatrixXd edge_lap = d * d.transpose();

  PolarParts out;
  out.tol = tol;
  out.abs_d = psd_sqrt(lap, n - rank);
  out.abs_d_star = psd_sqrt(edge_lap, m - rank);
  out.s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  if (rank > 0) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto r = static_cast<Eigen::Index>(rank);
    out.s = svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).transpose();
    out.singular_values.assign(svd.singularValues().data(), svd.singularValues().data() + r);
  }

  const Eigen::MatrixXd& s = out.s;
  auto& res = out.residuals;
  res.d_eq_s_absd = max_abs(d - s * out.abs_d);
  res.d_star_eq_absd_s_star = max_abs(d.transpose() - out.abs_d * s.transpose());
  res.d_eq_abs_d_star_s = max_abs(d - out.abs_d_star * s);
  res.abs_d_star_eq_s_absd_s_star = max_abs(out.abs_d_star - s * out.abs_d * s.transpose());
  res.intertwining = max_abs(s * lap * s.transpose() - edge_lap);

  const auto nn = static_cast<Eigen::Index>(n);
  const auto mm = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd isometry = Eigen::MatrixXd::Zero(nn + mm, nn + mm);
  isometry.topRightCorner(nn, mm) = s.transpose();
  isometry.bottomLeftCorner(mm, nn) = s;
  Eigen::MatrixXd modulus = Eigen::MatrixXd::Zero(nn + mm, nn + mm);
  modulus.topLeftCorner(nn, nn) = out.abs_d;
  modulus.bottomRightCorner(mm, mm) = out.abs_d_star;
  res.dirac_factorization = max_abs(to_dense_real(build_super_operators(g).q1) - isometry * modulus);

  // Ker d is spanned by the component indicators.
  Eigen::MatrixXd coimage = Eigen::MatrixXd::Identity(nn, nn);
  for (const auto& members : connected_components(g).members) {
    const double w = 1.0 / static_cast<double>(members.size());
    for (std::size_t a : members) {
      for (std::size_t b : members) coimage(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) -= w;
    }
  }
  res.s_star_s_projector = max_abs(s.transpose() * s - coimage);
  const Eigen::MatrixXd range = s * s.transpose();
  res.s_s_star_projector = std::max(max_abs(range * range - range), max_abs(range * d - d));
  return out;
}

// ---------------------------------------------------------------------------

double TransportResiduals::max() const {
  return std::max({dd_star_g, d_star_g, d_f, q1_plus, q1_minus, q2_plus, q2_minus, hamiltonian, chi_pure,
                   span_excess});
}

namespace {

using Complex = std::complex<double>;

double max_abs_diff(const StateVector& a, const StateVector& b, Complex scale_b = 1.0) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - scale_b * b[k]));
  return worst;
}

double norm2(const StateVector& v) {
  double s = 0.0;
  for (const auto& c : v.coefficients) s += std::norm(c);
  return std::sqrt(s);
}

StateVector join(const StateVector& f, const StateVector& g, Complex f_scale, Complex g_scale) {
  std::vector<Complex> coeffs;
  coeffs.reserve(f.size() + g.size());
  for (const auto& c : f.coefficients) coeffs.push_back(f_scale * c);
  for (const auto& c : g.coefficients) coeffs.push_back(g_scale * c);
  return StateVector(SpaceTag{Space::super, f.size() + g.size()}, std::move(coeffs));
}

}  // namespace

TransportReport transport_eigenpair(const DirectedGraph& g, double energy, const StateVector& f, double tol) {
  if (f.space != vertex_space(g)) throw SpaceMismatch("transport_eigenpair: f must lie in the vertex space");
  if (!(energy > tol)) throw NotAnEigenpair("transport_eigenpair: eigenvalue must exceed the tolerance");
  if (std::abs(norm2(f) - 1.0) > tol) throw NotAnEigenpair("transport_eigenpair: f is not a unit vector");

  const auto inc = build_incidence(g);
  const auto ops = build_super_operators(g);
  const LinearMap lap = inc.d_star * inc.d;
  const double eigen_residual = max_abs_diff(apply(lap, f), f, energy);
  if (eigen_residual > tol) {
    throw NotAnEigenpair("transport_eigenpair: |d*d f - E f| = " + std::to_string(eigen_residual));
  }

  TransportReport r;
  r.tol = tol;
  r.energy = energy;
  r.lambda = std::sqrt(energy);
  const double lambda = r.lambda;
  const StateVector df = apply(inc.d, f);
  r.g = df;
  for (auto& c : r.g.coefficients) c /= lambda;
  const StateVector& gv = r.g;

  auto& res = r.residuals;
  res.dd_star_g = max_abs_diff(apply(inc.d * inc.d_star, gv), gv, energy);
  res.d_star_g = max_abs_diff(apply(inc.d_star, gv), f, lambda);
  res.d_f = max_abs_diff(df, gv, lambda);

  const Complex i{0.0, 1.0};
  const StateVector q1_plus = join(f, gv, 1.0, 1.0);
  const StateVector q1_minus = join(f, gv, 1.0, -1.0);
  const StateVector q2_plus = join(f, gv, i, 1.0);
  const StateVector q2_minus = join(f, gv, i, -1.0);
  res.q1_plus = max_abs_diff(apply(ops.q1, q1_plus), q1_plus, lambda);
  res.q1_minus = max_abs_diff(apply(ops.q1, q1_minus), q1_minus, -lambda);
  res.q2_plus = max_abs_diff(apply(ops.q2, q2_plus), q2_plus, lambda);
  res.q2_minus = max_abs_diff(apply(ops.q2, q2_minus), q2_minus, -lambda);
  for (const auto* v : {&q1_plus, &q1_minus, &q2_plus, &q2_minus}) {
    res.hamiltonian = std::max(res.hamiltonian, max_abs_diff(apply(ops.hamiltonian, *v), *v, energy));
  }

  const StateVector boson = join(f, gv, 1.0, 0.0);
  const StateVector fermion = join(f, gv, 0.0, 1.0);
  res.chi_pure = std::max(max_abs_diff(apply(ops.chi, boson), boson, 1.0),
                          max_abs_diff(apply(ops.chi, fermion), fermion, -1.0));

  // (f,g), (f,-g) are independent; the Q2 pair lies in their span.
  const auto dim = static_cast<Eigen::Index>(q1_plus.size());
  Eigen::MatrixXcd four(4, dim);
  const StateVector* rows[] = {&q1_plus, &q1_minus, &q2_plus, &q2_minus};
  for (Eigen::Index a = 0; a < 4; ++a) {
    for (Eigen::Index k = 0; k < dim; ++k) four(a, k) = (*rows[a])[static_cast<std::size_t>(k)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(four);
  res.span_excess = svd.singularValues()(2);

  Complex overlap = 0.0;
  for (std::size_t k = 0; k < q1_plus.size(); ++k) overlap += std::conj(q1_plus[k]) * q1_minus[k];
  const double a2 = norm2(q1_plus);
  const double b2 = norm2(q1_minus);
  r.q1_pair_gram = a2 * a2 * b2 * b2 - std::norm(overlap);
  r.q1_pair_independent = r.q1_pair_gram > tol;
  return r;
}

// ---------------------------------------------------------------------------

bool ZeroModeReport::pass() const {
  return unclassified == 0 && bosonic_are_constants && fermionic_span_cycles && counts_match;
}

ZeroModeReport zero_mode_classification(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto inc = build_incidence(g);
  const auto ops = build_super_operators(g);
  const auto comps = connected_components(g);
  const LinearMap kernel = exact_kernel(ops.hamiltonian);

  std::vector<Entry> bosonic;
  std::vector<Entry> fermionic;
  ZeroModeReport r;
  r.dim_ker_hs = kernel.rows();
  r.components = comps.count();
  for (std::size_t row = 0; row < kernel.rows(); ++row) {
    const auto terms = kernel.row(row);
    const bool in_vertex = std::all_of(terms.begin(), terms.end(), [&](const Entry& e) { return e.col < n; });
    const bool in_edge = std::all_of(terms.begin(), terms.end(), [&](const Entry& e) { return e.col >= n; });
    if (in_vertex) {
      for (const auto& e : terms) bosonic.push_back(Entry{r.bosonic, e.col, e.value});
      ++r.bosonic;
    } else if (in_edge) {
      for (const auto& e : terms) fermionic.push_back(Entry{r.fermionic, e.col - n, e.value});
      ++r.fermionic;
    } else {
      ++r.unclassified;
    }
  }
  const auto boson_map = LinearMap::from_entries(vertex_space(g), SpaceTag{Space::vertex, r.bosonic}, std::move(bosonic));
  const auto fermion_map = LinearMap::from_entries(edge_space(g), SpaceTag{Space::edge, r.fermionic}, std::move(fermionic));

  std::vector<Entry> indicators;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    for (std::size_t v : comps.members[c]) indicators.push_back(Entry{c, v, GaussInt(1)});
  }
  const auto indicator_map =
      LinearMap::from_entries(vertex_space(g), SpaceTag{Space::vertex, comps.count()}, std::move(indicators));
  r.bosonic_are_constants = r.bosonic == comps.count() && exact_rank(boson_map) == r.bosonic &&
                            exact_rank(stack_rows(boson_map, indicator_map)) == r.bosonic;

  const auto cycles = cycle_matrix(g, fundamental_cycle_basis(g));
  r.cycle_count = cycles.rows();
  r.fermionic_span_cycles = r.fermionic == r.cycle_count && exact_rank(fermion_map) == r.fermionic &&
                            exact_rank(stack_rows(fermion_map, cycles)) == r.fermionic;

  const std::size_t dim_ker_d = n - exact_rank(inc.d);
  const std::size_t dim_ker_d_star = m - exact_rank(inc.d_star);
  r.counts_match = r.bosonic == dim_ker_d && r.fermionic == dim_ker_d_star &&
                   r.dim_ker_hs == n + m - exact_rank(ops.hamiltonian) && r.dim_ker_hs == r.bosonic + r.fermionic;
  return r;
}

}  // namespace susygraph
