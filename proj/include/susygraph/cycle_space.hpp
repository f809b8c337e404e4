#pragma once

#include "susygraph/graph.hpp"
#include "susygraph/linear_map.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace susygraph {

class TreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signed edge sum along a closed walk: +1 for an edge traversed along its
/// direction, -1 against it. Terms are in traversal order.
struct Cycle {
  std::size_t defining_edge = 0;
  std::vector<std::pair<std::size_t, int>> terms;
};

struct CycleBasis {
  std::vector<Cycle> cycles;  ///< ordered by defining edge
  std::vector<SpanningTree> forest;

  std::size_t size() const noexcept { return cycles.size(); }
};

/// One cycle per non-tree undirected edge, walked from the edge's tail to its
/// head and back along the tree, plus the 2-cycle d_ij + d_ji of every
/// reciprocal pair. Throws TreeMismatch if `tree` was not built from `g`.
CycleBasis fundamental_cycle_basis(const DirectedGraph& g, const SpanningTree& tree);
/// Per-component bases concatenated.
CycleBasis fundamental_cycle_basis(const DirectedGraph& g, std::span<const SpanningTree> forest);
CycleBasis fundamental_cycle_basis(const DirectedGraph& g);

StateVector to_state_vector(const DirectedGraph& g, const Cycle& cycle);

/// Cycles as the rows of a map with domain H1.
LinearMap cycle_matrix(const DirectedGraph& g, const CycleBasis& basis);

struct CycleSpaceReport {
  std::size_t cycle_count = 0;
  std::size_t expected_count = 0;  ///< m - n + #components
  std::size_t components = 0;
  std::size_t dim_ker_d_star = 0;
  std::size_t cycle_rank = 0;
  bool all_annihilated = false;             ///< d* c = 0 for every cycle
  bool independent = false;                 ///< rank = count
  bool count_formula = false;               ///< count = m - n + #components
  bool spans_kernel = false;                ///< span = Ker d*
  bool tree_differences_independent = false;///< (x_i - x_k) over tree edges
  /// Set when the basis is empty: dim Ker H_S = #components.
  std::optional<bool> forest_zero_modes;
  std::vector<Cycle> cycles;

  bool pass() const;
};

CycleSpaceReport cycle_space_report(const DirectedGraph& g);

}  // namespace susygraph
