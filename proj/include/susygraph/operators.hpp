#pragma once

#include "susygraph/graph.hpp"
#include "susygraph/linear_map.hpp"

namespace susygraph {

SpaceTag vertex_space(const DirectedGraph& g);
SpaceTag edge_space(const DirectedGraph& g);
SpaceTag super_space(const DirectedGraph& g);

/// Incidence maps H0 -> H1 and the coboundary adjoint H1 -> H0.
///   d1 x_i = sum of edges ending at i
///   d2 x_i = sum of edges starting at i
///   d = d1 - d2,  d* d_ik = x_k - x_i
struct Incidence {
  LinearMap d1;
  LinearMap d2;
  LinearMap d;
  LinearMap d_star;
};

Incidence build_incidence(const DirectedGraph& g);

/// Degree, adjacency and Laplacian maps on H0.
struct VertexOperators {
  LinearMap v_in;
  LinearMap v_out;
  LinearMap v;
  LinearMap a_in;
  LinearMap a_out;
  LinearMap a;
  LinearMap laplacian;  ///< d*d = V - A
};

/// Built from the incidence factors: V_in = d1*d1, A_in = d2*d1, and so on.
VertexOperators build_vertex_operators(const DirectedGraph& g);

/// Built straight from vertex degrees and edge multiplicities.
VertexOperators direct_vertex_operators(const DirectedGraph& g);

/// dd* on H1.
LinearMap build_edge_laplacian(const DirectedGraph& g);

/// Operators on H = H0 ⊕ H1.
struct SuperOperators {
  LinearMap dirac;        ///< [[0, d*], [d, 0]]
  LinearMap q_plus;       ///< [[0, 0], [d, 0]]
  LinearMap q_minus;      ///< [[0, d*], [0, 0]]
  LinearMap q1;           ///< equal to dirac
  LinearMap q2;           ///< [[0, i d*], [-i d, 0]]
  LinearMap chi;          ///< grading diag(1, -1)
  LinearMap p0;           ///< bosonic projector
  LinearMap p1;           ///< fermionic projector
  LinearMap hamiltonian;  ///< diag(d*d, dd*)
};

SuperOperators build_super_operators(const DirectedGraph& g);

/// b_ij = d_ij - d_ji. Both directed edges must exist.
StateVector edge_superposition(const DirectedGraph& g, std::size_t i, std::size_t j);

/// (Lf)_i = -sum_{k~i} eps_ki (f_k - f_i), evaluated from the edge list.
StateVector laplacian_stencil(const DirectedGraph& g, const StateVector& f);

}  // namespace susygraph
