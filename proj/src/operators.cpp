#include "susygraph/operators.hpp"

namespace susygraph {

SpaceTag vertex_space(const DirectedGraph& g) { return {Space::vertex, g.vertex_count()}; }
SpaceTag edge_space(const DirectedGraph& g) { return {Space::edge, g.edge_count()}; }
SpaceTag super_space(const DirectedGraph& g) { return {Space::super, g.vertex_count() + g.edge_count()}; }

Incidence build_incidence(const DirectedGraph& g) {
  std::vector<Entry> in_entries;
  std::vector<Entry> out_entries;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    in_entries.push_back(Entry{k, e.head, GaussInt(1)});
    out_entries.push_back(Entry{k, e.tail, GaussInt(1)});
  }
  const auto h0 = vertex_space(g);
  const auto h1 = edge_space(g);
  LinearMap d1 = LinearMap::from_entries(h0, h1, std::move(in_entries));
  LinearMap d2 = LinearMap::from_entries(h0, h1, std::move(out_entries));
  LinearMap d = d1 - d2;
  LinearMap d_star = adjoint(d);
  return Incidence{std::move(d1), std::move(d2), std::move(d), std::move(d_star)};
}

VertexOperators build_vertex_operators(const DirectedGraph& g) {
  const auto inc = build_incidence(g);
  const auto d1s = adjoint(inc.d1);
  const auto d2s = adjoint(inc.d2);
  VertexOperators ops{
      .v_in = d1s * inc.d1,
      .v_out = d2s * inc.d2,
      .v = LinearMap(vertex_space(g), vertex_space(g)),
      .a_in = d2s * inc.d1,
      .a_out = d1s * inc.d2,
      .a = LinearMap(vertex_space(g), vertex_space(g)),
      .laplacian = inc.d_star * inc.d,
  };
  ops.v = ops.v_in + ops.v_out;
  ops.a = ops.a_in + ops.a_out;
  return ops;
}

VertexOperators direct_vertex_operators(const DirectedGraph& g) {
  const auto h0 = vertex_space(g);
  std::vector<Entry> v_in;
  std::vector<Entry> v_out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    v_in.push_back(Entry{i, i, GaussInt(g.in_degree(i))});
    v_out.push_back(Entry{i, i, GaussInt(g.out_degree(i))});
  }
  // A_in x_i collects the tails of edges ending at i; A_out the heads of edges leaving i.
  std::vector<Entry> a_in;
  std::vector<Entry> a_out;
  for (const auto& e : g.edges()) {
    a_in.push_back(Entry{e.tail, e.head, GaussInt(1)});
    a_out.push_back(Entry{e.head, e.tail, GaussInt(1)});
  }
  std::vector<Entry> a;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t k : g.neighbours(i)) a.push_back(Entry{k, i, GaussInt(g.multiplicity(k, i))});
  }
  VertexOperators ops{
      .v_in = LinearMap::from_entries(h0, h0, std::move(v_in)),
      .v_out = LinearMap::from_entries(h0, h0, std::move(v_out)),
      .v = LinearMap(h0, h0),
      .a_in = LinearMap::from_entries(h0, h0, std::move(a_in)),
      .a_out = LinearMap::from_entries(h0, h0, std::move(a_out)),
      .a = LinearMap::from_entries(h0, h0, std::move(a)),
      .laplacian = LinearMap(h0, h0),
  };
  ops.v = ops.v_in + ops.v_out;
  ops.laplacian = ops.v - ops.a;
  return ops;
}

LinearMap build_edge_laplacian(const DirectedGraph& g) {
  const auto inc = build_incidence(g);
  return inc.d * inc.d_star;
}

SuperOperators build_super_operators(const DirectedGraph& g) {
  const auto inc = build_incidence(g);
  const auto h0 = vertex_space(g);
  const auto h1 = edge_space(g);
  const LinearMap zero_vv(h0, h0);
  const LinearMap zero_ve(h1, h0);
  const LinearMap zero_ev(h0, h1);
  const LinearMap zero_ee(h1, h1);
  const auto id0 = LinearMap::identity(h0);
  const auto id1 = LinearMap::identity(h1);
  const auto i = GaussInt::i();

  SuperOperators ops{
      .dirac = assemble_blocks(zero_vv, inc.d_star, inc.d, zero_ee),
      .q_plus = assemble_blocks(zero_vv, zero_ve, inc.d, zero_ee),
      .q_minus = assemble_blocks(zero_vv, inc.d_star, zero_ev, zero_ee),
      .q1 = LinearMap(super_space(g), super_space(g)),
      .q2 = assemble_blocks(zero_vv, i * inc.d_star, -i * inc.d, zero_ee),
      .chi = assemble_blocks(id0, zero_ve, zero_ev, GaussInt(-1) * id1),
      .p0 = assemble_blocks(id0, zero_ve, zero_ev, zero_ee),
      .p1 = assemble_blocks(zero_vv, zero_ve, zero_ev, id1),
      .hamiltonian = assemble_blocks(inc.d_star * inc.d, zero_ve, zero_ev, inc.d * inc.d_star),
  };
  ops.q1 = ops.dirac;
  return ops;
}

StateVector edge_superposition(const DirectedGraph& g, std::size_t i, std::size_t j) {
  const auto forward = g.find_edge(i, j);
  const auto backward = g.find_edge(j, i);
  if (!forward || !backward) {
    throw std::invalid_argument("edge_superposition: both (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") and its reversal must be edges");
  }
  auto b = StateVector::zero(edge_space(g));
  b[*forward] = 1.0;
  b[*backward] = -1.0;
  return b;
}

StateVector laplacian_stencil(const DirectedGraph& g, const StateVector& f) {
  if (f.space != vertex_space(g)) throw SpaceMismatch("laplacian_stencil: expected a vertex-space vector");
  auto out = StateVector::zero(vertex_space(g));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::complex<double> sum = 0.0;
    for (std::size_t k : g.neighbours(i)) sum += static_cast<double>(g.multiplicity(k, i)) * (f[k] - f[i]);
    out[i] = -sum;
  }
  return out;
}

}  // namespace susygraph
