#include <doctest.h>

#include "support/random_graphs.hpp"
#include "susygraph/graph.hpp"

#include <numeric>

using namespace susygraph;

namespace {

GraphErrorKind parse_error(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  FAIL("no error for: " << text);
  return GraphErrorKind::malformed_line;
}

}  // namespace

TEST_CASE("parse the smallest graph") {
  const auto g = parse_edge_list("n=2\n0 1\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(g.mode() == Mode::oriented);
}

TEST_CASE("parse keeps file order, comments and CRLF") {
  const auto g = parse_edge_list("# triangle\r\n\r\nn=3\r\n1 2\r\n0 1\r\n  2   0  \r\n");
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {0, 1}, {2, 0}});
  const auto s = parse_edge_list("n=2\nmode=symmetric\n0 1\n1 0\n");
  CHECK(s.mode() == Mode::symmetric);
  CHECK(parse_edge_list(format_edge_list(s)) == s);
}

TEST_CASE("parse errors") {
  CHECK(parse_error("n=2\n0 1\n0 1\n") == GraphErrorKind::duplicate_edge);
  CHECK(parse_error("n=2\n1 1\n") == GraphErrorKind::self_loop);
  CHECK(parse_error("n=2\n0 2\n") == GraphErrorKind::index_out_of_range);
  CHECK(parse_error("n=2\n0 x\n") == GraphErrorKind::malformed_line);
  CHECK(parse_error("n=2\n0 1 1\n") == GraphErrorKind::malformed_line);
  CHECK(parse_error("0 1\n") == GraphErrorKind::malformed_line);
  CHECK(parse_error("n=-1\n") == GraphErrorKind::malformed_line);
  CHECK(parse_error("n=3\nmode=symmetric\n0 1\n1 0\n1 2\n") == GraphErrorKind::symmetric_mode_violation);
  CHECK(parse_error("n=3\nmode=sideways\n") == GraphErrorKind::malformed_line);
}

TEST_CASE("parse errors carry the line number") {
  try {
    parse_edge_list("n=3\n# c\n0 1\n2 2\n");
    FAIL("expected an error");
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("reciprocal pairs are allowed in oriented mode") {
  const auto g = parse_edge_list("n=2\n0 1\n1 0\n");
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.reverse_of(0) == 1u);
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize(parse_edge_list("n=2\n0 1\n")).edges() == std::vector<Edge>{{0, 1}, {1, 0}});
  const auto pair = parse_edge_list("n=2\n0 1\n1 0\n");
  CHECK(symmetrize(pair).edges() == pair.edges());
  const auto c3 = symmetrize(parse_edge_list("n=3\n0 1\n1 2\n2 0\n"));
  CHECK(c3.edge_count() == 6);
  CHECK(c3.mode() == Mode::symmetric);
  for (const auto& e : c3.edges()) CHECK(c3.has_edge(e.head, e.tail));
}

TEST_CASE("reorient") {
  const auto k2 = parse_edge_list("n=2\n0 1\n");
  CHECK(reorient(k2, {0}).edges() == std::vector<Edge>{{1, 0}});
  const auto c3 = parse_edge_list("n=3\n0 1\n1 2\n2 0\n");
  CHECK(reorient(c3, {}) == c3);
  try {
    reorient(parse_edge_list("n=2\n0 1\n1 0\n"), {0});
    FAIL("expected a collision");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphErrorKind::duplicate_edge);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(parse_edge_list("n=3\n0 1\n1 2\n2 0\n")).members ==
        std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(connected_components(parse_edge_list("n=4\n0 1\n2 3\n")).members ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
  CHECK(connected_components(parse_edge_list("n=3\n")).count() == 3);
}

TEST_CASE("spanning trees") {
  const auto path = spanning_tree(parse_edge_list("n=3\n0 1\n1 2\n"), 0);
  CHECK(path.tree_edges == std::vector<std::size_t>{0, 1});
  CHECK(path.non_tree_edges.empty());

  const auto c3 = spanning_tree(parse_edge_list("n=3\n0 1\n1 2\n2 0\n"), 0);
  CHECK(c3.tree_edges.size() == 2);
  CHECK(c3.non_tree_edges.size() == 1);

  const auto k2 = spanning_tree(parse_edge_list("n=2\nmode=symmetric\n0 1\n1 0\n"), 0);
  CHECK(k2.tree_edges == std::vector<std::size_t>{0});
  CHECK(k2.non_tree_edges.empty());
  CHECK(k2.reciprocal_pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("bfs spheres") {
  const auto path = bfs_spheres(parse_edge_list("n=3\n0 1\n1 2\n"), 0);
  CHECK(path.layers == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
  const auto c3 = bfs_spheres(parse_edge_list("n=3\n0 1\n1 2\n2 0\n"), 0);
  CHECK(c3.layers == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  const auto split = bfs_spheres(parse_edge_list("n=4\n0 1\n2 3\n"), 0);
  CHECK(split.dist[2] == BfsLayers::unreachable);
  CHECK(split.dist[3] == BfsLayers::unreachable);
}

TEST_CASE("property: graph invariants on random graphs") {
  testgen::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = testgen::uniform(rng, 1, 30);
    const double p = testgen::uniform_real(rng, 0.05, 0.5);
    const auto g = trial % 2 ? testgen::directed_er(rng, n, p) : testgen::symmetric_er(rng, n, p);
    CAPTURE(format_edge_list(g));

    CHECK(symmetrize(symmetrize(g)) == symmetrize(g));
    const auto flips = testgen::random_flips(rng, g);
    CHECK(reorient(reorient(g, flips), flips) == g);

    const auto comps = connected_components(g);
    const auto undirected = undirected_edges(g);
    std::size_t tree_total = 0;
    std::size_t non_tree_total = 0;
    for (const auto& tree : spanning_forest(g)) {
      CHECK(tree.tree_edges.size() + 1 == tree.vertices.size());
      tree_total += tree.tree_edges.size();
      non_tree_total += tree.non_tree_edges.size();
    }
    CHECK(tree_total == n - comps.count());
    CHECK(non_tree_total == undirected.size() - (n - comps.count()));

    const std::size_t root = testgen::uniform(rng, 0, n - 1);
    const auto layers = bfs_spheres(g, root);
    std::size_t covered = 0;
    for (std::size_t l = 0; l < layers.layers.size(); ++l) {
      covered += layers.layers[l].size();
      for (std::size_t v : layers.layers[l]) CHECK(layers.dist[v] == l);
    }
    CHECK(covered == comps.members[comps.label[root]].size());
    // Neighbours differ in distance by at most one.
    for (const auto& e : g.edges()) {
      if (layers.dist[e.tail] == BfsLayers::unreachable) continue;
      const auto a = static_cast<long long>(layers.dist[e.tail]);
      const auto b = static_cast<long long>(layers.dist[e.head]);
      CHECK(std::abs(a - b) <= 1);
    }
  }
}
