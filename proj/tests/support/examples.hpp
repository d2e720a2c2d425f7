#pragma once

#include <memory>
#include <string>

#include "koszul/quiver.hpp"
#include "koszul/resolution.hpp"

// Small quiver algebras shared by the test suites.
namespace fixtures {

using namespace koszul;

inline AlgebraPtr make(const QuiverPresentation& q) { return std::make_shared<const GradedAlgebra>(build_graded(q)); }

// x with a degree-0 loop delta, arrow alpha: x -> y in degree 1.
inline QuiverPresentation loop_and_arrow() {
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"delta", 0, 0, 0}, {"alpha", 0, 1, 1}};
  q.add_relations("delta*delta = alpha*delta = 0");
  return q;
}

// Loops delta at x and theta at y in degree 0, alpha: x -> y in degree 1,
// with theta*alpha = alpha*delta or with both products zero.
inline QuiverPresentation two_loops(bool commuting) {
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"delta", 0, 0, 0}, {"theta", 1, 1, 0}, {"alpha", 0, 1, 1}};
  q.add_relations("delta*delta = theta*theta = 0");
  q.add_relations(commuting ? "theta*alpha = alpha*delta" : "theta*alpha = alpha*delta = 0");
  return q;
}

inline QuiverPresentation three_loops() {
  QuiverPresentation q;
  q.vertices = {"x", "y", "z"};
  q.arrows = {{"delta", 0, 0, 0}, {"rho", 1, 1, 0}, {"theta", 2, 2, 0}, {"alpha", 0, 1, 1}, {"beta", 1, 2, 1}};
  q.add_relations("delta*delta = rho*rho = theta*theta = 0");
  q.add_relations("alpha*delta = rho*alpha");
  q.add_relations("beta*rho = theta*beta");
  return q;
}

inline QuiverPresentation loop_and_line() {
  QuiverPresentation q;
  q.vertices = {"x", "y", "z", "w"};
  q.arrows = {{"delta", 0, 0, 0}, {"alpha", 0, 1, 1}, {"beta", 1, 2, 1}, {"gamma", 2, 3, 1}};
  q.add_relations("delta*delta = gamma*beta*alpha*delta = 0");
  return q;
}

inline QuiverPresentation line(size_t n, Field f = Field::rationals()) {
  QuiverPresentation q;
  q.field = f;
  for (size_t i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
  for (size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i, i + 1, 1});
  return q;
}

// k[t]/(t^2) with t in degree `deg`.
inline QuiverPresentation dual_numbers(int deg = 1) {
  QuiverPresentation q;
  q.vertices = {"x"};
  q.arrows = {{"t", 0, 0, deg}};
  q.add_relations("t*t = 0");
  return q;
}

// Ungraded: alpha x -> y, beta y -> z, gamma z -> x, a loop delta at y, with
// every composite through delta and all of beta*alpha, gamma*beta zero.
inline QuiverPresentation three_cycle_with_loop() {
  QuiverPresentation q;
  q.vertices = {"x", "y", "z"};
  q.arrows = {{"alpha", 0, 1, 0}, {"beta", 1, 2, 0}, {"gamma", 2, 0, 0}, {"delta", 1, 1, 0}};
  q.add_relations("delta*delta = delta*alpha = beta*delta = beta*alpha = gamma*beta = 0");
  return q;
}

inline GradedModule proj(const AlgebraPtr& a, size_t cls) { return ProjectiveFactory(a).indecomposable(cls).module; }

}  // namespace fixtures
