#pragma once

#include <cstddef>
#include <istream>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace susygraph {

/// How an unoriented graph is represented: one arbitrary direction per edge
/// (oriented) or both directions for every edge (symmetric).
enum class Mode { oriented, symmetric };

std::string_view to_string(Mode mode);

/// A directed edge (tail -> head).
struct Edge {
  std::size_t tail = 0;
  std::size_t head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrorKind {
  malformed_line,
  self_loop,
  duplicate_edge,
  index_out_of_range,
  symmetric_mode_violation,
};

std::string_view to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  GraphErrorKind kind() const noexcept { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// Finite simple directed graph. Vertices are 0..n-1; the edge order is the
/// basis order of the edge space and is never changed after construction.
class DirectedGraph {
 public:
  /// Throws GraphError if any invariant is violated.
  DirectedGraph(std::size_t n, std::vector<Edge> edges, Mode mode = Mode::oriented);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Mode mode() const noexcept { return mode_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  std::optional<std::size_t> find_edge(std::size_t tail, std::size_t head) const;
  bool has_edge(std::size_t tail, std::size_t head) const { return find_edge(tail, head).has_value(); }

  /// Index of the reversed edge, if present.
  std::optional<std::size_t> reverse_of(std::size_t k) const;

  std::size_t in_degree(std::size_t v) const { return in_degree_.at(v); }
  std::size_t out_degree(std::size_t v) const { return out_degree_.at(v); }

  /// Number of directed edges joining the unordered pair {a, b}: 0, 1 or 2.
  int multiplicity(std::size_t a, std::size_t b) const;

  /// Undirected neighbours of v, sorted, without repetition.
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return neighbours_.at(v); }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  Mode mode_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> out_degree_;
  std::vector<std::vector<std::size_t>> neighbours_;
  // Sorted (edge, index) pairs for lookup.
  std::vector<std::pair<Edge, std::size_t>> lookup_;
};

/// Reads the edge-list text format:
///
///     # comment
///     n=<count>
///     mode=oriented|symmetric      (optional)
///     <tail> <head>                (one per line)
///
/// Blank lines are ignored; CRLF line endings are accepted.
DirectedGraph parse_edge_list(std::istream& in);
DirectedGraph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list.
std::string format_edge_list(const DirectedGraph& g);

/// Adds the reversal of every edge that lacks one. Existing edges keep their
/// positions and each new reversal is inserted right after its edge.
DirectedGraph symmetrize(const DirectedGraph& g);

/// Reverses the listed edges in place. Throws GraphError on collisions.
DirectedGraph reorient(const DirectedGraph& g, const std::set<std::size_t>& flips);

/// Relabels vertex v as perm[v]; edge order is kept.
DirectedGraph relabel(const DirectedGraph& g, const std::vector<std::size_t>& perm);

struct Components {
  /// Vertex sets ordered by their smallest member; each set is sorted.
  std::vector<std::vector<std::size_t>> members;
  /// Component index of every vertex.
  std::vector<std::size_t> label;

  std::size_t count() const noexcept { return members.size(); }
};

/// Components of the underlying undirected graph.
Components connected_components(const DirectedGraph& g);

/// Undirected edge obtained by merging a reciprocal pair (i,j),(j,i).
/// `edge` is the smaller index of the pair and carries the reference direction.
struct UndirectedEdge {
  std::size_t edge = 0;
  std::optional<std::size_t> partner;
};

/// Deduplicated undirected edge set, ordered by representative edge index.
std::vector<UndirectedEdge> undirected_edges(const DirectedGraph& g);

struct SpanningTree {
  std::size_t root = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  /// Vertices of the root's component, sorted.
  std::vector<std::size_t> vertices;
  /// Representative edge towards the root for each vertex in the component.
  std::vector<std::optional<std::size_t>> parent_edge;
  /// Parent vertex (meaningful where parent_edge is set).
  std::vector<std::size_t> parent;
  /// Depth in the BFS tree.
  std::vector<std::size_t> depth;
  /// Representative edge indices (directions ignored), sorted.
  std::vector<std::size_t> tree_edges;
  std::vector<std::size_t> non_tree_edges;
  /// Reciprocal partners of representatives inside the component, keyed by
  /// representative index.
  std::vector<std::pair<std::size_t, std::size_t>> reciprocal_pairs;
};

/// BFS spanning tree of the root's component. A reciprocal pair is one
/// undirected edge represented by its smaller index.
SpanningTree spanning_tree(const DirectedGraph& g, std::size_t root);

/// One BFS tree per component, rooted at each component's smallest vertex.
std::vector<SpanningTree> spanning_forest(const DirectedGraph& g);

struct BfsLayers {
  static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

  std::size_t root = 0;
  /// layers[l] = vertices at graph distance l from the root, sorted.
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> dist;
};

BfsLayers bfs_spheres(const DirectedGraph& g, std::size_t root);

}  // namespace susygraph
