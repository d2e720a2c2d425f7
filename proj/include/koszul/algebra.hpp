#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

using SparseVec = std::vector<std::pair<uint32_t, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, size_t n);

// Finite-dimensional associative unital algebra given by structure constants.
class FiniteDimAlgebra {
 public:
  FiniteDimAlgebra() = default;
  // table[i * dim + j] is the product of basis elements i and j.
  FiniteDimAlgebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit);

  const Field& field() const { return field_; }
  size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& product(size_t i, size_t j) const { return table_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }

  Vec multiply(const Vec& a, const Vec& b) const;
  // Matrix of x -> a x, and of x -> x a.
  Matrix left_multiplication(const Vec& a) const;
  Matrix right_multiplication(const Vec& a) const;
  FiniteDimAlgebra opposite() const;
  // Throws InvalidStructure on associativity or unit failure.
  void validate() const;

 private:
  Field field_ = Field::rationals();
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
  Vec unit_;
};

// Vertex/object data attached to algebras that come from quivers or
// categories: the basis index of each identity and the endpoints of each
// basis element (an element of e_t A e_s has source s, target t).
struct ObjectStructure {
  std::vector<std::string> names;
  std::vector<size_t> identity;
  std::vector<size_t> source;
  std::vector<size_t> target;
};

struct IdempotentSystem;

struct DegreeZeroStructure {
  FiniteDimAlgebra algebra;
  Subspace radical;
  // Primitive orthogonal idempotents summing to one, in A_0 coordinates.
  std::vector<Vec> idempotents;
  std::vector<size_t> iso_class;
  // One idempotent index per isomorphism class, in first-occurrence order.
  std::vector<size_t> representatives;
  std::vector<std::string> class_names;
};

// Graded algebra A_0 + A_1 + ... stored through degree top_degree(). The
// global basis lists degree 0 first, then degree 1, and so on. When exact()
// is false the components beyond the truncation are unknown.
class GradedAlgebra {
 public:
  struct Data {
    Field field = Field::rationals();
    int truncation = 0;
    bool exact = false;
    std::vector<int> degree;
    std::vector<std::string> labels;
    std::vector<SparseVec> table;
    Vec unit;
    std::optional<ObjectStructure> objects;
  };

  GradedAlgebra() = default;
  explicit GradedAlgebra(Data d);

  const Field& field() const { return d_->field; }
  int truncation() const { return d_->truncation; }
  bool exact() const { return d_->exact; }
  int top_degree() const { return static_cast<int>(offsets_.size()) - 2; }
  // Highest degree in which components are known.
  int window() const { return exact() ? top_degree() : d_->truncation; }
  size_t dim() const { return d_->labels.size(); }
  size_t dim(int deg) const;
  std::vector<size_t> dims() const;
  size_t offset(int deg) const;
  int degree(size_t i) const { return d_->degree[i]; }
  const std::string& label(size_t i) const { return d_->labels[i]; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const SparseVec& product(size_t i, size_t j) const { return d_->table[i * dim() + j]; }
  const Vec& unit() const { return d_->unit; }
  const std::optional<ObjectStructure>& objects() const { return d_->objects; }

  Vec multiply(const Vec& a, const Vec& b) const;
  // Basis indices of degree 0 and 1, which generate the algebra.
  const std::vector<size_t>& generators() const { return generators_; }
  // Position of a basis index in generators(), or npos.
  size_t generator_position(size_t basis_index) const;
  // Expresses a basis element of degree d >= 2 as sum c * g * b with g of
  // degree 1 and b of degree d - 1.
  const std::vector<std::tuple<size_t, size_t, Scalar>>& factorization(size_t basis_index) const {
    return factorization_[basis_index];
  }

  FiniteDimAlgebra degree_zero_algebra() const;
  FiniteDimAlgebra total_algebra() const;
  // Radical and primitive idempotents of A_0, computed once on first use.
  const DegreeZeroStructure& degree_zero() const;

  Vec basis_vector(size_t i) const { return unit_vec(dim(), i); }
  const Data& data() const { return *d_; }

 private:
  std::shared_ptr<const Data> d_;
  std::vector<size_t> offsets_;
  std::vector<size_t> generators_;
  std::vector<size_t> generator_pos_;
  std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> factorization_;
  struct Cache {
    std::once_flag once;
    std::unique_ptr<DegreeZeroStructure> value;
  };
  std::shared_ptr<Cache> cache_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

GradedAlgebra opposite(const GradedAlgebra& a);
// Views a finite-dimensional algebra as a graded algebra concentrated in degree 0.
GradedAlgebra concentrated_in_degree_zero(const FiniteDimAlgebra& a,
                                          std::optional<ObjectStructure> objects = std::nullopt);
// Linear combination of basis labels, such as "alpha - 2*theta*alpha".
std::string format_element(const GradedAlgebra& a, const Vec& v);
// Checks associativity within the window, the unit, and generation in degrees 0 and 1.
void validate(const GradedAlgebra& a);

}  // namespace koszul
