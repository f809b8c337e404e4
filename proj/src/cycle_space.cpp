#include "susygraph/cycle_space.hpp"

#include "susygraph/exact_rank.hpp"
#include "susygraph/operators.hpp"

#include <algorithm>

namespace susygraph {

namespace {

void validate_tree(const DirectedGraph& g, const SpanningTree& tree) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (tree.vertex_count != n || tree.edge_count != m || tree.parent_edge.size() != n || tree.parent.size() != n ||
      tree.depth.size() != n) {
    throw TreeMismatch("spanning tree was built for a graph of different size");
  }
  auto representative = [&](std::size_t k) {
    if (k >= m) throw TreeMismatch("tree references edge #" + std::to_string(k) + " outside the graph");
    const auto rev = g.reverse_of(k);
    if (rev && *rev < k) throw TreeMismatch("tree edge #" + std::to_string(k) + " is not a pair representative");
  };
  for (std::size_t k : tree.tree_edges) representative(k);
  for (std::size_t k : tree.non_tree_edges) representative(k);
  if (tree.vertices.empty() || tree.tree_edges.size() + 1 != tree.vertices.size()) {
    throw TreeMismatch("tree edge count does not match its vertex count");
  }
  for (std::size_t v : tree.vertices) {
    if (v >= n) throw TreeMismatch("tree vertex outside the graph");
    if (v == tree.root) continue;
    const auto& pe = tree.parent_edge[v];
    if (!pe || *pe >= m) throw TreeMismatch("tree vertex " + std::to_string(v) + " has no parent edge");
    const Edge& e = g.edge(*pe);
    const std::size_t p = tree.parent[v];
    if (!((e.tail == v && e.head == p) || (e.tail == p && e.head == v))) {
      throw TreeMismatch("parent edge of vertex " + std::to_string(v) + " does not join it to its parent");
    }
  }
  std::size_t component_edges = 0;
  for (const auto& u : undirected_edges(g)) {
    if (std::binary_search(tree.vertices.begin(), tree.vertices.end(), g.edge(u.edge).tail)) ++component_edges;
  }
  if (component_edges != tree.tree_edges.size() + tree.non_tree_edges.size()) {
    throw TreeMismatch("tree and non-tree edges do not partition the component's edges");
  }
}

int traversal_sign(const Edge& e, std::size_t from, std::size_t to) {
  if (e.tail == from && e.head == to) return +1;
  if (e.tail == to && e.head == from) return -1;
  throw std::logic_error("traversal_sign: edge does not join the given vertices");
}

Cycle fundamental_cycle(const DirectedGraph& g, const SpanningTree& tree, std::size_t closing) {
  const Edge& e = g.edge(closing);
  Cycle cycle;
  cycle.defining_edge = closing;
  cycle.terms.emplace_back(closing, +1);

  // Tree path head -> tail: climb from both ends to the common ancestor.
  std::size_t up = e.head;
  std::size_t down = e.tail;
  std::vector<std::pair<std::size_t, int>> descent;
  while (up != down) {
    if (tree.depth[up] >= tree.depth[down]) {
      const std::size_t p = tree.parent[up];
      const std::size_t k = *tree.parent_edge[up];
      cycle.terms.emplace_back(k, traversal_sign(g.edge(k), up, p));
      up = p;
    } else {
      const std::size_t p = tree.parent[down];
      const std::size_t k = *tree.parent_edge[down];
      descent.emplace_back(k, traversal_sign(g.edge(k), p, down));
      down = p;
    }
  }
  cycle.terms.insert(cycle.terms.end(), descent.rbegin(), descent.rend());
  return cycle;
}

}  // namespace

CycleBasis fundamental_cycle_basis(const DirectedGraph& g, const SpanningTree& tree) {
  return fundamental_cycle_basis(g, std::span<const SpanningTree>(&tree, 1));
}

CycleBasis fundamental_cycle_basis(const DirectedGraph& g, std::span<const SpanningTree> forest) {
  CycleBasis basis;
  for (const auto& tree : forest) {
    validate_tree(g, tree);
    for (std::size_t k : tree.non_tree_edges) basis.cycles.push_back(fundamental_cycle(g, tree, k));
    for (const auto& [rep, partner] : tree.reciprocal_pairs) {
      basis.cycles.push_back(Cycle{partner, {{rep, +1}, {partner, +1}}});
    }
    basis.forest.push_back(tree);
  }
  std::stable_sort(basis.cycles.begin(), basis.cycles.end(),
                   [](const Cycle& a, const Cycle& b) { return a.defining_edge < b.defining_edge; });
  return basis;
}

CycleBasis fundamental_cycle_basis(const DirectedGraph& g) {
  const auto forest = spanning_forest(g);
  return fundamental_cycle_basis(g, std::span<const SpanningTree>(forest));
}

StateVector to_state_vector(const DirectedGraph& g, const Cycle& cycle) {
  auto v = StateVector::zero(edge_space(g));
  for (const auto& [k, sign] : cycle.terms) v[k] += static_cast<double>(sign);
  return v;
}

LinearMap cycle_matrix(const DirectedGraph& g, const CycleBasis& basis) {
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < basis.cycles.size(); ++r) {
    for (const auto& [k, sign] : basis.cycles[r].terms) entries.push_back(Entry{r, k, GaussInt(sign)});
  }
  return LinearMap::from_entries(edge_space(g), SpaceTag{Space::edge, basis.cycles.size()}, std::move(entries));
}

bool CycleSpaceReport::pass() const {
  return all_annihilated && independent && count_formula && spans_kernel && tree_differences_independent &&
         forest_zero_modes.value_or(true);
}

CycleSpaceReport cycle_space_report(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto components = connected_components(g);
  const auto forest = spanning_forest(g);
  const auto basis = fundamental_cycle_basis(g, std::span<const SpanningTree>(forest));
  const auto inc = build_incidence(g);

  CycleSpaceReport report;
  report.cycle_count = basis.size();
  report.components = components.count();
  report.expected_count = m + components.count() - n;
  report.dim_ker_d_star = m - exact_rank(inc.d_star);

  // Cycles are the rows of C, so d* C^T = 0 checks every cycle at once.
  const LinearMap cycles = cycle_matrix(g, basis);
  report.all_annihilated = compose(inc.d_star, adjoint(cycles)).is_zero();
  report.cycle_rank = exact_rank(cycles);
  report.independent = report.cycle_rank == report.cycle_count;
  report.count_formula = report.cycle_count == report.expected_count;
  // Independent vectors inside Ker d* span it iff there are dim Ker d* of them.
  report.spans_kernel = report.all_annihilated && report.cycle_rank == report.dim_ker_d_star;

  // Rows x_head - x_tail for every tree edge.
  std::vector<Entry> differences;
  std::size_t row = 0;
  for (const auto& tree : forest) {
    for (std::size_t k : tree.tree_edges) {
      const Edge& e = g.edge(k);
      differences.push_back(Entry{row, e.head, GaussInt(1)});
      differences.push_back(Entry{row, e.tail, GaussInt(-1)});
      ++row;
    }
  }
  const auto diff_map = LinearMap::from_entries(vertex_space(g), SpaceTag{Space::vertex, row}, std::move(differences));
  report.tree_differences_independent = row == n - components.count() && exact_rank(diff_map) == row;

  if (basis.cycles.empty()) {
    const auto ops = build_super_operators(g);
    report.forest_zero_modes = (n + m) - exact_rank(ops.hamiltonian) == components.count();
  }
  report.cycles = basis.cycles;
  return report;
}

}  // namespace susygraph
