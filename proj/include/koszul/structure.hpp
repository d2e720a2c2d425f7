#pragma once

#include <string>
#include <vector>

#include "koszul/algebra.hpp"

namespace koszul {

// Jacobson radical as a subspace in the algebra's coordinates. Uses the trace
// form in characteristic 0 or above the dimension, and the p-power trace
// refinement in small characteristic; the result is checked for nilpotency
// and for a semisimple quotient.
Subspace radical(const FiniteDimAlgebra& a);
bool is_nilpotent_ideal(const FiniteDimAlgebra& a, const Subspace& ideal);

struct IdempotentSystem {
  std::vector<Vec> idempotents;
  std::vector<size_t> iso_class;
  std::vector<size_t> representatives;
  std::vector<std::string> class_names;
};

// Complete set of orthogonal primitive idempotents refining the given
// orthogonal idempotents (the unit when empty). Throws FieldDoesNotSplit when a
// simple block of the semisimple quotient is not a matrix algebra over the
// field.
IdempotentSystem primitive_idempotents(const FiniteDimAlgebra& a, const Subspace& rad,
                                       const std::vector<Vec>& coarse = {},
                                       const std::vector<std::string>& coarse_names = {});
IdempotentSystem primitive_idempotents(const FiniteDimAlgebra& a);

// Centrally primitive idempotents of the algebra (its blocks).
std::vector<Vec> block_idempotents(const FiniteDimAlgebra& a);

// Subalgebra e A e with unit e, together with the embedding of its basis.
struct Corner {
  FiniteDimAlgebra algebra;
  Matrix embedding;  // columns: corner basis in ambient coordinates
};
Corner corner_algebra(const FiniteDimAlgebra& a, const Vec& e);

// Quotient of an algebra by a two-sided ideal; the basis consists of the
// ambient basis elements outside the ideal's pivot rows.
struct QuotientAlgebra {
  FiniteDimAlgebra algebra;
  std::vector<size_t> representatives;
};
QuotientAlgebra quotient_algebra(const FiniteDimAlgebra& a, const Subspace& ideal);

// Monic minimal polynomial of x (coefficients c_0..c_{d-1}, leading 1 implied).
Vec minimal_polynomial(const FiniteDimAlgebra& a, const Vec& x);
// Distinct roots in the field, and whether a nonlinear factor remains.
std::vector<Scalar> polynomial_roots(const Field& f, const Vec& monic_coeffs, bool& has_nonlinear_factor);

}  // namespace koszul
