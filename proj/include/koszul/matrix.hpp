#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, size_t rows, size_t cols);
  static Matrix identity(Field f, size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<int64_t>>& rows);
  static Matrix from_columns(Field f, size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec column(size_t c) const;
  void set_column(size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;
  // Adds s * o to this matrix in place.
  void add_scaled(const Matrix& o, const Scalar& s);

  bool is_zero() const;
  Matrix select_columns(const std::vector<size_t>& idx) const;
  Matrix select_rows(const std::vector<size_t>& idx) const;
  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  std::string str() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_ = Field::rationals();
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<size_t> pivots;
};

Echelon rref(const Matrix& m);
size_t rank(const Matrix& m);
// Columns form a basis of the right null space.
Matrix kernel_basis(const Matrix& m);
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

bool is_zero_vec(const Vec& v);
Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
// a += s * b
void axpy(const Field& f, Vec& a, const Scalar& s, const Vec& b);
Vec scale_vec(const Field& f, const Vec& a, const Scalar& s);
Vec add_vec(const Field& f, const Vec& a, const Vec& b);
Vec sub_vec(const Field& f, const Vec& a, const Vec& b);

// A subspace of field^n stored as a basis in reduced column echelon form:
// column j has a 1 in row pivot_rows()[j] and zeros in every other pivot row,
// so coordinates of a member are read off its pivot entries.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, size_t ambient);
  static Subspace span(const Matrix& columns);
  static Subspace span(Field f, size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(Field f, size_t ambient);

  const Field& field() const { return field_; }
  size_t ambient() const { return ambient_; }
  size_t dim() const { return pivot_rows_.size(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(size_t j) const { return basis_.column(j); }
  const std::vector<size_t>& pivot_rows() const { return pivot_rows_; }
  // Rows that are not pivots; their unit vectors span a complement.
  std::vector<size_t> complement_rows() const;

  // v minus its projection along the basis; zero exactly when v is a member.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of a member with respect to basis().
  Vec coordinates(const Vec& v) const;
  // Coordinates of v modulo this subspace in the unit-vector complement.
  Vec quotient_coordinates(const Vec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  Subspace image(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Field field_ = Field::rationals();
  size_t ambient_ = 0;
  Matrix basis_;
  std::vector<size_t> pivot_rows_;
};

// Preimage of a subspace under a linear map, as a subspace of the source.
Subspace preimage(const Matrix& m, const Subspace& target);

}  // namespace koszul
