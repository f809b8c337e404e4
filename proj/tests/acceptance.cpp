// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "support/random_graphs.hpp"
#include "support/run_command.hpp"
#include "susygraph/cycle_space.hpp"
#include "susygraph/exact_rank.hpp"
#include "susygraph/operators.hpp"
#include "susygraph/spectral.hpp"
#include "susygraph/susy_checks.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace susygraph;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

/// Collects failures with a short description of the first few.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& scope) const {
    std::ostringstream os;
    os << scope << ", " << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed: " << first_;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

DirectedGraph graph(std::string_view text) { return parse_edge_list(text); }

/// The 200 graphs of criterion 1: alternating oriented (directed ER over
/// ordered pairs) and symmetric (undirected ER, symmetrized), fixed seeds.
const std::vector<DirectedGraph>& criterion_one_graphs() {
  static const std::vector<DirectedGraph> graphs = [] {
    std::vector<DirectedGraph> out;
    for (std::uint64_t k = 0; k < 200; ++k) {
      testgen::Rng rng(1000 + k);
      const std::size_t n = testgen::uniform(rng, 2, 60);
      const double p = testgen::uniform_real(rng, 0.05, 0.5);
      out.push_back(k % 2 ? testgen::symmetric_er(rng, n, p) : testgen::directed_er(rng, n, p));
    }
    return out;
  }();
  return graphs;
}

std::vector<DirectedGraph> small_criterion_one_graphs(std::size_t max_size) {
  std::vector<DirectedGraph> out;
  for (const auto& g : criterion_one_graphs()) {
    if (g.vertex_count() + g.edge_count() <= max_size) out.push_back(g);
  }
  return out;
}

std::string describe(const DirectedGraph& g) {
  return "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
}

// ---------------------------------------------------------------------------

Verdict superalgebra_exactness() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  std::size_t relations = 0;
  for (const auto& g : criterion_one_graphs()) {
    for (const auto& report : {verify_superalgebra(g), verify_grading(g)}) {
      for (const auto& r : report.relations) {
        ++relations;
        t.check(r.pass && r.residual == 0, describe(g) + " " + r.name);
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(seconds < 30.0, "runtime " + fmt(seconds) + " s exceeds 30 s");
  return {t.ok(), t.summary("200 graphs, " + std::to_string(relations) + " relations, " + fmt(seconds) + " s")};
}

Verdict kernel_dimensions() {
  Tally t;
  const auto c3 = kernel_report(graph("n=3\n0 1\n1 2\n2 0\n"));
  t.check(c3.dim_ker_d == 1 && c3.dim_rg_d == 2 && c3.dim_rg_d_star == 2 && c3.dim_ker_d_star == 1 &&
              c3.dim_ker_q1 == 2,
          "C3 dimensions");
  testgen::Rng rng(2024);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = testgen::uniform(rng, 2, 50);
    const auto g = testgen::random_connected(rng, n, testgen::uniform_real(rng, 0.0, 0.3), k % 2 ? 0.1 : 0.0);
    const std::size_t m = g.edge_count();
    const auto r = kernel_report(g);
    t.check(r.dim_ker_d == 1 && r.dim_rg_d == n - 1 && r.dim_rg_d_star == n - 1 && r.dim_ker_d_star == m - (n - 1) &&
                r.dim_ker_q1 == m - (n - 2) && r.dim_ker_q2 == r.dim_ker_q1 && r.all_pass(),
            describe(g));
  }
  return {t.ok(), t.summary("100 connected graphs + C3")};
}

Verdict tree_law() {
  Tally t;
  testgen::Rng rng(77);
  for (int k = 0; k < 50; ++k) {
    const auto g = testgen::random_tree(rng, testgen::uniform(rng, 1, 200));
    const auto ops = build_super_operators(g);
    const std::size_t n = g.vertex_count();
    t.check(g.edge_count() - exact_rank(build_incidence(g).d_star) == 0, describe(g) + " Ker d*");
    t.check(n + g.edge_count() - exact_rank(ops.hamiltonian) == 1, describe(g) + " Ker H_S");
    t.check(fundamental_cycle_basis(g).size() == 0, describe(g) + " cycles");
  }
  return {t.ok(), t.summary("50 trees, n <= 200")};
}

Verdict cycle_space() {
  Tally t;
  testgen::Rng rng(4242);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = testgen::uniform(rng, 2, 50);
    const auto g = testgen::random_connected(rng, n, testgen::uniform_real(rng, 0.0, 0.3), k % 2 ? 0.1 : 0.0);
    const auto inc = build_incidence(g);
    const auto basis = fundamental_cycle_basis(g);
    for (const auto& c : basis.cycles) {
      const auto image = apply(inc.d_star, to_state_vector(g, c));
      bool zero = true;
      for (const auto& x : image.coefficients) zero = zero && x == std::complex<double>(0);
      t.check(zero, describe(g) + " cycle " + std::to_string(c.defining_edge));
    }
    const auto cm = cycle_matrix(g, basis);
    t.check(compose(inc.d_star, adjoint(cm)).is_zero(), describe(g) + " exact d*C");
    const std::size_t rank = exact_rank(cm);
    const std::size_t ker = g.edge_count() - exact_rank(inc.d_star);
    t.check(rank == g.edge_count() - n + 1 && rank == ker && rank == basis.size(), describe(g) + " rank");
    t.check(cycle_space_report(g).pass(), describe(g) + " report");
  }
  const auto sym = cycle_space_report(symmetrize(graph("n=3\n0 1\n1 2\n2 0\n")));
  t.check(sym.cycle_count == 4 && sym.cycle_rank == 4 && sym.pass(), "symmetrized C3");
  return {t.ok(), t.summary("100 connected graphs + symmetrized C3")};
}

Verdict spectral_pairing() {
  Tally t;
  double worst = 0.0;
  const auto graphs = small_criterion_one_graphs(400);
  for (const auto& g : graphs) {
    const auto r = pairing_check(g, 1e-8);
    worst = std::max({worst, r.pair_deviation, r.singular_deviation});
    t.check(r.nonzero_spectra_pair && r.match_singular_values, describe(g));
  }
  const auto path = pairing_check(graph("n=3\n0 1\n1 2\n"), 1e-8);
  t.check(compare_multisets(path.laplacian.eigenvalues, {0, 1, 3}, 1e-8).match, "path d*d");
  t.check(compare_multisets(path.edge_laplacian.eigenvalues, {1, 3}, 1e-8).match, "path dd*");
  return {t.ok(), t.summary(std::to_string(graphs.size()) + " graphs with n+m <= 400 + path, max deviation " +
                            fmt(worst))};
}

Verdict dirac_symmetry() {
  Tally t;
  double worst = 0.0;
  const auto graphs = small_criterion_one_graphs(400);
  for (const auto& g : graphs) {
    const auto r = dirac_spectrum(g, 1e-8);
    worst = std::max({worst, r.q1_symmetry_deviation, r.q1_q2_deviation, r.squares_deviation});
    t.check(r.pass(), describe(g));
  }
  const double r2 = std::sqrt(2.0);
  const auto k2 = dirac_spectrum(graph("n=2\n0 1\n"), 1e-8);
  t.check(compare_multisets(k2.q1.eigenvalues, {-r2, 0, r2}, 1e-8).match, "K2 spectrum");
  return {t.ok(), t.summary(std::to_string(graphs.size()) + " graphs + K2, max deviation " + fmt(worst))};
}

Verdict polar_decomposition() {
  Tally t;
  double worst = 0.0;
  const auto graphs = small_criterion_one_graphs(400);
  for (const auto& g : graphs) {
    const auto r = polar_decompose(g, 1e-8).residuals;
    const double m = std::max({r.d_eq_s_absd, r.d_star_eq_absd_s_star, r.abs_d_star_eq_s_absd_s_star, r.intertwining});
    worst = std::max(worst, m);
    t.check(m < 1e-8, describe(g) + " residual " + fmt(m));
  }
  return {t.ok(), t.summary(std::to_string(graphs.size()) + " graphs, max residual " + fmt(worst))};
}

Verdict eigenvector_transport() {
  Tally t;
  double worst = 0.0;
  std::size_t pairs = 0;
  std::size_t graphs = 0;
  for (const auto& g : criterion_one_graphs()) {
    if (g.vertex_count() > 40) continue;
    ++graphs;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense_real(build_vertex_operators(g).laplacian));
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const double e = es.eigenvalues()(k);
      if (e <= 1e-6) continue;
      auto f = StateVector::zero(vertex_space(g));
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = es.eigenvectors()(static_cast<Eigen::Index>(i), k);
      const auto r = transport_eigenpair(g, e, f, 1e-6);
      const auto& res = r.residuals;
      const double m = std::max({res.dd_star_g, res.q1_plus, res.q1_minus, res.q2_plus, res.q2_minus, res.d_star_g,
                                 res.d_f});
      worst = std::max(worst, m);
      ++pairs;
      t.check(m < 1e-6 && r.pass(), describe(g) + " E=" + fmt(e));
    }
  }
  return {t.ok(), t.summary(std::to_string(graphs) + " graphs with n <= 40, " + std::to_string(pairs) +
                            " eigenpairs, max residual " + fmt(worst))};
}

Verdict stencil_fidelity() {
  Tally t;
  std::string text = "n=51\n";
  for (int i = 0; i < 50; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const auto path = graph(text);
  const auto dd = build_edge_laplacian(path);
  for (std::size_t k = 1; k + 1 < 50; ++k) {
    const std::vector<Entry> expected = {{k, k - 1, GaussInt(-1)}, {k, k, GaussInt(2)}, {k, k + 1, GaussInt(-1)}};
    const auto row = dd.row(k);
    t.check(std::vector<Entry>(row.begin(), row.end()) == expected, "path row " + std::to_string(k));
  }
  testgen::Rng rng(909);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = testgen::uniform(rng, 2, 40);
    const double p = testgen::uniform_real(rng, 0.05, 0.5);
    const auto g = k % 2 ? testgen::symmetric_er(rng, n, p) : testgen::directed_er(rng, n, p);
    auto f = StateVector::zero(vertex_space(g));
    for (auto& c : f.coefficients) c = testgen::uniform_real(rng, -1, 1);
    const auto lf = apply(build_vertex_operators(g).laplacian, f);
    const auto st = laplacian_stencil(g, f);
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(lf[i] - st[i]));
    worst = std::max(worst, m);
    t.check(m <= 1e-12, describe(g));
  }
  return {t.ok(), t.summary("path N=50 + 20 random f, max deviation " + fmt(worst))};
}

Verdict orientation_invariance() {
  Tally t;
  testgen::Rng rng(31337);
  double worst = 0.0;
  for (int k = 0; k < 25; ++k) {
    const auto g = testgen::oriented_er(rng, testgen::uniform(rng, 2, 40), testgen::uniform_real(rng, 0.05, 0.5));
    const auto lap = build_vertex_operators(g).laplacian;
    const auto base = symmetric_spectrum(build_edge_laplacian(g)).eigenvalues;
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = reorient(g, testgen::random_flips(rng, g));
      t.check(build_vertex_operators(h).laplacian == lap, describe(g) + " L");
      const auto cmp = compare_multisets(base, symmetric_spectrum(build_edge_laplacian(h)).eigenvalues, 1e-8);
      worst = std::max(worst, cmp.max_deviation);
      t.check(cmp.match, describe(g) + " spectrum of dd*");
    }
  }
  return {t.ok(), t.summary("25 graphs x 20 reorientations, max deviation " + fmt(worst))};
}

Verdict cli_determinism() {
  Tally t;
  const std::string cli = testrun::quoted(SUSYGRAPH_CLI);
  for (const std::string name : {"c3", "tree"}) {
    const std::string cmd = cli + " report " + testrun::quoted(std::string(SUSYGRAPH_DATA_DIR) + "/" + name + ".txt") +
                            " --format json";
    const auto first = testrun::run(cmd);
    const auto second = testrun::run(cmd);
    t.check(first.exit_code == 0, name + " exit code " + std::to_string(first.exit_code));
    t.check(first.out == second.out, name + " differs between runs");
    std::ifstream in(std::string(SUSYGRAPH_GOLDEN_DIR) + "/" + name + "_report.json", std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    t.check(in.good() || !golden.str().empty(), name + " golden file missing");
    t.check(first.out == golden.str(), name + " differs from golden");
  }
  return {t.ok(), t.summary("c3 and tree reports")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"superalgebra exactness", superalgebra_exactness},
      {"kernel dimensions", kernel_dimensions},
      {"tree law", tree_law},
      {"cycle space", cycle_space},
      {"spectral pairing", spectral_pairing},
      {"Dirac symmetry", dirac_symmetry},
      {"polar decomposition", polar_decomposition},
      {"eigenvector transport", eigenvector_transport},
      {"stencil fidelity", stencil_fidelity},
      {"orientation invariance", orientation_invariance},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (k + 1 < 10 ? " " : "") << k + 1 << "  " << criteria[k].first
              << "  (" << v.detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed ? 1 : 0;
}
