#include "susygraph/susy_checks.hpp"

#include "susygraph/operators.hpp"

#include <algorithm>

namespace susygraph {

bool AlgebraReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.pass; });
}

const RelationCheck& AlgebraReport::find(std::string_view name) const {
  auto it = std::find_if(relations.begin(), relations.end(), [&](const RelationCheck& r) { return r.name == name; });
  if (it == relations.end()) throw std::out_of_range("no relation named " + std::string(name));
  return *it;
}

RelationCheck check_zero(std::string name, const LinearMap& m) {
  RelationCheck out{.name = std::move(name), .residual = m.max_norm(), .pass = m.is_zero(), .note = {}};
  return out;
}

RelationCheck check_equal(std::string name, const LinearMap& lhs, const LinearMap& rhs) {
  return check_zero(std::move(name), lhs - rhs);
}

namespace {

// target == combined / 2, where the halving must be exact; an odd entry fails the relation.
RelationCheck check_halved(std::string name, const LinearMap& target, const LinearMap& combined) {
  try {
    const LinearMap half = halve(combined);
    return check_equal(std::move(name), target, half);
  } catch (const std::domain_error& e) {
    RelationCheck out{.name = std::move(name), .residual = combined.max_norm(), .pass = false, .note = e.what()};
    return out;
  }
}

}  // namespace

AlgebraReport verify_superalgebra(const DirectedGraph& g) {
  const auto ops = build_super_operators(g);
  const auto& hs = ops.hamiltonian;
  AlgebraReport report;
  auto& r = report.relations;
  r.push_back(check_zero("Q+^2 = 0", ops.q_plus * ops.q_plus));
  r.push_back(check_zero("Q-^2 = 0", ops.q_minus * ops.q_minus));
  r.push_back(check_equal("{Q+,Q-} = H_S", anticommutator(ops.q_plus, ops.q_minus), hs));
  r.push_back(check_zero("[H_S,Q+] = 0", commutator(hs, ops.q_plus)));
  r.push_back(check_zero("[H_S,Q-] = 0", commutator(hs, ops.q_minus)));
  r.push_back(check_equal("Q1^2 = H_S", ops.q1 * ops.q1, hs));
  r.push_back(check_equal("Q2^2 = H_S", ops.q2 * ops.q2, hs));
  r.push_back(check_zero("{Q1,Q2} = 0", anticommutator(ops.q1, ops.q2)));
  r.push_back(check_halved("Q+ = (Q1+iQ2)/2", ops.q_plus, ops.q1 + GaussInt::i() * ops.q2));
  r.push_back(check_halved("Q- = (Q1-iQ2)/2", ops.q_minus, ops.q1 - GaussInt::i() * ops.q2));
  r.push_back(check_zero("[H_S,Q1] = 0", commutator(hs, ops.q1)));
  r.push_back(check_zero("[H_S,Q2] = 0", commutator(hs, ops.q2)));
  return report;
}

AlgebraReport verify_grading(const DirectedGraph& g) {
  const auto ops = build_super_operators(g);
  const auto id = LinearMap::identity(super_space(g));
  AlgebraReport report;
  auto& r = report.relations;
  r.push_back(check_equal("chi^2 = 1", ops.chi * ops.chi, id));
  r.push_back(check_equal("chi = chi*", ops.chi, adjoint(ops.chi)));
  r.push_back(check_zero("{Q1,chi} = 0", anticommutator(ops.q1, ops.chi)));
  r.push_back(check_zero("{Q2,chi} = 0", anticommutator(ops.q2, ops.chi)));
  // With Q2 = [[0, i d*], [-i d, 0]] the grading has to act first; i Q1 chi is -Q2.
  r.push_back(check_equal("Q2 = i chi Q1", ops.q2, GaussInt::i() * (ops.chi * ops.q1)));
  r.push_back(check_halved("P0 = (1+chi)/2", ops.p0, id + ops.chi));
  r.push_back(check_halved("P1 = (1-chi)/2", ops.p1, id - ops.chi));
  r.push_back(check_equal("P0^2 = P0", ops.p0 * ops.p0, ops.p0));
  r.push_back(check_equal("P1^2 = P1", ops.p1 * ops.p1, ops.p1));
  r.push_back(check_zero("P0P1 = 0", ops.p0 * ops.p1));
  r.push_back(check_zero("P1P0 = 0", ops.p1 * ops.p0));
  r.push_back(check_equal("P0+P1 = 1", ops.p0 + ops.p1, id));
  r.push_back(check_zero("[H_S,chi] = 0", commutator(ops.hamiltonian, ops.chi)));
  return report;
}

}  // namespace susygraph
