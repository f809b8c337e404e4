#pragma once

#include "susygraph/graph.hpp"
#include "susygraph/linear_map.hpp"

#include <string>
#include <vector>

namespace susygraph {

struct RelationCheck {
  std::string name;
  /// Largest |entry|^2 of the residual map; zero exactly when the relation holds.
  BigInt residual = 0;
  bool pass = false;
  std::string note;
};

struct AlgebraReport {
  std::vector<RelationCheck> relations;

  bool all_pass() const;
  const RelationCheck& find(std::string_view name) const;
};

/// Residual check of lhs == rhs.
RelationCheck check_equal(std::string name, const LinearMap& lhs, const LinearMap& rhs);
/// Residual check of m == 0.
RelationCheck check_zero(std::string name, const LinearMap& m);

/// N=2 relations: nilpotency of Q±, {Q+,Q-} = H_S, Q1² = Q2² = H_S,
/// {Q1,Q2} = 0, Q± = (Q1 ± iQ2)/2 and conservation of all charges.
AlgebraReport verify_superalgebra(const DirectedGraph& g);

/// Grading relations for chi, the projectors P0/P1 and Q2 = i chi Q1.
AlgebraReport verify_grading(const DirectedGraph& g);

}  // namespace susygraph
