#include "susygraph/report.hpp"

#include "susygraph/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>

namespace susygraph {

using nlohmann::json;

std::string_view to_string(Section section) {
  switch (section) {
    case Section::algebra: return "algebra";
    case Section::grading: return "grading";
    case Section::kernel: return "kernel";
    case Section::spectra: return "spectra";
    case Section::pairing: return "pairing";
    case Section::polar: return "polar";
    case Section::cycles: return "cycles";
  }
  return "?";
}

std::set<Section> all_sections() {
  return {Section::algebra, Section::grading, Section::kernel, Section::spectra,
          Section::pairing, Section::polar,   Section::cycles};
}

bool SelfTest::pass() const { return laplacian_invariant && stencil_deviation <= 1e-12; }

bool FullReport::all_pass() const {
  bool ok = self_test.pass();
  if (algebra) ok = ok && algebra->all_pass();
  if (grading) ok = ok && grading->all_pass();
  if (kernel) ok = ok && kernel->all_pass();
  if (zero_modes) ok = ok && zero_modes->pass();
  if (dirac) ok = ok && dirac->pass();
  if (pairing) ok = ok && pairing->pass();
  if (polar) ok = ok && polar->max() < options.tol;
  if (cycles) ok = ok && cycles->pass();
  return ok && zero_count_consistent.value_or(true) && cycle_count_consistent.value_or(true);
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

SelfTest run_self_test(const DirectedGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  SelfTest t;
  t.seed = seed;

  const LinearMap lap = build_vertex_operators(g).laplacian;
  auto f = StateVector::zero(vertex_space(g));
  for (auto& c : f.coefficients) c = coeff(rng);
  const auto exact = apply(lap, f);
  const auto stencil = laplacian_stencil(g, f);
  for (std::size_t k = 0; k < f.size(); ++k) {
    t.stencil_deviation = std::max(t.stencil_deviation, std::abs(exact[k] - stencil[k]));
  }

  // Only edges without a reversal can flip without colliding.
  std::vector<std::size_t> flippable;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!g.reverse_of(k)) flippable.push_back(k);
  }
  std::bernoulli_distribution coin(0.5);
  t.laplacian_invariant = true;
  t.reorientations = 3;
  for (std::size_t trial = 0; trial < t.reorientations; ++trial) {
    std::set<std::size_t> flips;
    for (std::size_t k : flippable) {
      if (coin(rng)) flips.insert(k);
    }
    t.laplacian_invariant = t.laplacian_invariant && build_vertex_operators(reorient(g, flips)).laplacian == lap;
  }
  return t;
}

double round_digits(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json eigenvalues(const std::vector<double>& values, double tol) {
  json out = json::array();
  for (double v : values) out.push_back(std::abs(v) <= tol ? 0.0 : round_digits(v, 15));
  return out;
}

json magnitude(double x) {
  if (!std::isfinite(x)) return "inf";
  return round_digits(x, 6);
}

json big(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::int64_t>::max())) return v.convert_to<std::int64_t>();
  return v.str();
}

json relations(const AlgebraReport& r) {
  json list = json::array();
  for (const auto& c : r.relations) {
    json item = {{"name", c.name}, {"pass", c.pass}, {"residual", big(c.residual)}};
    if (!c.note.empty()) item["note"] = c.note;
    list.push_back(std::move(item));
  }
  return {{"all_pass", r.all_pass()}, {"relations", std::move(list)}};
}

json kernel_json(const KernelReport& k, const std::optional<ZeroModeReport>& zm) {
  json comps = json::array();
  for (const auto& c : k.per_component) {
    comps.push_back({{"vertices", c.vertices},
                     {"edges", c.edges},
                     {"dim_ker_d", c.dim_ker_d},
                     {"dim_rg_d", c.dim_rg_d},
                     {"dim_ker_d_star", c.dim_ker_d_star},
                     {"matches_formula", c.matches_formula}});
  }
  json out = {
      {"dim_ker_d", k.dim_ker_d},
      {"dim_rg_d", k.dim_rg_d},
      {"dim_ker_d_star", k.dim_ker_d_star},
      {"dim_rg_d_star", k.dim_rg_d_star},
      {"dim_ker_Q", k.dim_ker_q1},
      {"dim_ker_Q2", k.dim_ker_q2},
      {"dim_ker_HS", k.dim_ker_hs},
      {"per_component", std::move(comps)},
      {"checks",
       {{"rank_nullity", k.rank_nullity},
        {"adjoint_rank", k.adjoint_rank},
        {"ker_q_splits", k.ker_q_splits},
        {"ker_q_equals_ker_hs", k.ker_q_equals_ker_hs},
        {"degree_sums", k.degree_sums},
        {"component_formulas", k.component_formulas}}},
      {"all_pass", k.all_pass()},
  };
  if (k.connected_formula) out["checks"]["connected_formula"] = *k.connected_formula;
  if (zm) {
    out["zero_modes"] = {{"bosonic", zm->bosonic},
                         {"fermionic", zm->fermionic},
                         {"unclassified", zm->unclassified},
                         {"bosonic_are_constants", zm->bosonic_are_constants},
                         {"fermionic_span_cycles", zm->fermionic_span_cycles},
                         {"counts_match", zm->counts_match},
                         {"pass", zm->pass()}};
  }
  return out;
}

json cycles_json(const CycleSpaceReport& c) {
  json basis = json::array();
  for (const auto& cycle : c.cycles) {
    json terms = json::array();
    for (const auto& [edge, sign] : cycle.terms) terms.push_back({edge, sign});
    basis.push_back({{"defining_edge", cycle.defining_edge}, {"terms", std::move(terms)}});
  }
  json out = {
      {"cycle_count", c.cycle_count},
      {"expected_count", c.expected_count},
      {"dim_ker_d_star", c.dim_ker_d_star},
      {"cycle_rank", c.cycle_rank},
      {"checks",
       {{"all_annihilated", c.all_annihilated},
        {"independent", c.independent},
        {"count_formula", c.count_formula},
        {"spans_kernel", c.spans_kernel},
        {"tree_differences_independent", c.tree_differences_independent}}},
      {"basis", std::move(basis)},
      {"pass", c.pass()},
  };
  if (c.forest_zero_modes) out["checks"]["forest_zero_modes"] = *c.forest_zero_modes;
  return out;
}

}  // namespace

FullReport analyze(const DirectedGraph& g, const std::set<Section>& sections, std::string digest,
                   const ReportOptions& options) {
  auto want = [&](Section s) { return sections.count(s) > 0; };
  FullReport r;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.mode = g.mode();
  r.components = connected_components(g).count();
  r.input_digest = std::move(digest);
  r.options = options;
  r.self_test = run_self_test(g, options.seed);

  if (want(Section::algebra)) r.algebra = verify_superalgebra(g);
  if (want(Section::grading)) r.grading = verify_grading(g);
  if (want(Section::kernel)) {
    r.kernel = kernel_report(g);
    r.zero_modes = zero_mode_classification(g);
  }
  if (want(Section::spectra) || want(Section::pairing)) r.pairing = pairing_check(g, options.tol);
  if (want(Section::spectra)) r.dirac = dirac_spectrum(g, options.tol);
  if (want(Section::polar)) {
    auto parts = polar_decompose(g, options.tol);
    r.polar = parts.residuals;
    r.polar_singular_values = parts.singular_values;
  }
  if (want(Section::cycles)) r.cycles = cycle_space_report(g);

  if (r.kernel && r.pairing) {
    const auto& hs = r.pairing->hamiltonian.eigenvalues;
    const auto near_zero = static_cast<std::size_t>(
        std::count_if(hs.begin(), hs.end(), [&](double x) { return std::abs(x) <= options.tol; }));
    r.zero_count_consistent = near_zero == r.kernel->dim_ker_hs;
  }
  if (r.zero_modes && r.cycles) r.cycle_count_consistent = r.cycles->cycle_count == r.zero_modes->fermionic;
  return r;
}

json to_json(const FullReport& r) {
  const double tol = r.options.tol;
  json doc;
  doc["graph"] = {
      {"n", r.vertices},
      {"m", r.edges},
      {"mode", std::string(to_string(r.mode))},
      {"components", r.components},
      {"self_test",
       {{"seed", r.self_test.seed},
        {"stencil_deviation", magnitude(r.self_test.stencil_deviation)},
        {"reorientations", r.self_test.reorientations},
        {"laplacian_invariant", r.self_test.laplacian_invariant},
        {"pass", r.self_test.pass()}}},
  };
  if (r.algebra) doc["algebra"] = relations(*r.algebra);
  if (r.grading) doc["grading"] = relations(*r.grading);
  if (r.kernel) doc["kernel"] = kernel_json(*r.kernel, r.zero_modes);
  if (r.dirac && r.pairing) {
    const auto& d = *r.dirac;
    doc["spectra"] = {
        {"L", eigenvalues(r.pairing->laplacian.eigenvalues, tol)},
        {"dd_star", eigenvalues(r.pairing->edge_laplacian.eigenvalues, tol)},
        {"H_S", eigenvalues(r.pairing->hamiltonian.eigenvalues, tol)},
        {"Q1", eigenvalues(d.q1.eigenvalues, tol)},
        {"Q2", eigenvalues(d.q2.eigenvalues, tol)},
        {"checks",
         {{"q1_symmetric", d.q1_symmetric},
          {"q2_symmetric", d.q2_symmetric},
          {"q1_equals_q2", d.q1_equals_q2},
          {"squares_match_hamiltonian", d.squares_match_hamiltonian}}},
        {"deviations",
         {{"q1_symmetry", magnitude(d.q1_symmetry_deviation)},
          {"q2_symmetry", magnitude(d.q2_symmetry_deviation)},
          {"q1_q2", magnitude(d.q1_q2_deviation)},
          {"squares", magnitude(d.squares_deviation)}}},
        {"pass", d.pass()},
    };
  }
  if (r.pairing) {
    const auto& p = *r.pairing;
    doc["pairing"] = {
        {"rank_d", p.rank_d},
        {"singular_values", eigenvalues(p.singular_values, tol)},
        {"max_zero_magnitude", magnitude(p.max_zero_magnitude)},
        {"deviations",
         {{"pair", magnitude(p.pair_deviation)},
          {"singular", magnitude(p.singular_deviation)},
          {"hamiltonian", magnitude(p.hamiltonian_deviation)}}},
        {"checks",
         {{"zero_counts", p.zero_counts},
          {"nonzero_spectra_pair", p.nonzero_spectra_pair},
          {"match_singular_values", p.match_singular_values},
          {"hamiltonian_is_union", p.hamiltonian_is_union},
          {"even_multiplicity", p.even_multiplicity}}},
        {"pass", p.pass()},
    };
  }
  if (r.polar) {
    const auto& q = *r.polar;
    doc["polar"] = {
        {"singular_values", eigenvalues(*r.polar_singular_values, tol)},
        {"residuals",
         {{"d_eq_s_absd", magnitude(q.d_eq_s_absd)},
          {"d_star_eq_absd_s_star", magnitude(q.d_star_eq_absd_s_star)},
          {"d_eq_abs_d_star_s", magnitude(q.d_eq_abs_d_star_s)},
          {"abs_d_star_eq_s_absd_s_star", magnitude(q.abs_d_star_eq_s_absd_s_star)},
          {"intertwining", magnitude(q.intertwining)},
          {"dirac_factorization", magnitude(q.dirac_factorization)},
          {"s_star_s_projector", magnitude(q.s_star_s_projector)},
          {"s_s_star_projector", magnitude(q.s_s_star_projector)}}},
        {"max_residual", magnitude(q.max())},
        {"pass", q.max() < tol},
    };
  }
  if (r.cycles) doc["cycles"] = cycles_json(*r.cycles);

  json consistency = json::object();
  if (r.zero_count_consistent) consistency["zero_count"] = *r.zero_count_consistent;
  if (r.cycle_count_consistent) consistency["cycle_count"] = *r.cycle_count_consistent;
  doc["meta"] = {
      {"tool", "susygraph"},
      {"version", std::string(tool_version)},
      {"input_digest", r.input_digest},
      {"tol", r.options.tol},
      {"seed", r.options.seed},
      {"consistency", std::move(consistency)},
      {"all_pass", r.all_pass()},
  };
  return doc;
}

std::string serialize_json(const FullReport& report) { return to_json(report).dump(2) + "\n"; }

namespace {

bool is_scalar_list(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
}

bool is_relation(const json& j) { return j.is_object() && j.contains("name") && j.contains("pass"); }

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostream& os, const json& node, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  for (auto it = node.begin(); it != node.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(os, v, depth + 1);
    } else if (v.is_array() && is_scalar_list(v)) {
      os << pad << it.key() << ": " << v.dump() << "\n";
    } else if (v.is_array()) {
      os << pad << it.key() << ": " << v.size() << (v.size() == 1 ? " entry" : " entries") << "\n";
      for (const auto& item : v) {
        if (is_relation(item)) {
          os << pad << "  " << (item["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << item["name"].get<std::string>()
             << "  residual " << scalar(item["residual"]) << "\n";
        } else if (item.is_object()) {
          std::ostringstream line;
          bool first = true;
          for (auto f = item.begin(); f != item.end(); ++f) {
            line << (first ? "" : ", ") << f.key() << "=" << scalar(f.value());
            first = false;
          }
          os << pad << "  - " << line.str() << "\n";
        } else {
          os << pad << "  - " << item.dump() << "\n";
        }
      }
    } else {
      os << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string serialize_text(const FullReport& report) {
  const json doc = to_json(report);
  std::ostringstream os;
  for (const char* key : {"graph", "algebra", "grading", "kernel", "spectra", "pairing", "polar", "cycles", "meta"}) {
    if (!doc.contains(key)) continue;
    os << "[" << key << "]\n";
    render(os, doc[key], 1);
  }
  return os.str();
}

}  // namespace susygraph
