#include "koszul/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace koszul {

Matrix::Matrix(Field f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<int64_t>>& rows) {
  size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vec Matrix::row(size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix p(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        p.at(i, j) = field_.add(p(i, j), field_.mul(a, b));
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix s = *this;
  s.add_scaled(o, field_.one());
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix s = *this;
  s.add_scaled(o, field_.neg(field_.one()));
  return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = field_.mul(x, s);
  return m;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  if (s.is_zero()) return;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] = field_.add(data_[i], field_.mul(s, o.data_[i]));
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec out(rows_);
  for (size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) out[i] = field_.add(out[i], field_.mul(a, v[k]));
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (size_t r = 0; r < rows_; ++r)
    for (size_t j = 0; j < idx.size(); ++j) m.at(r, j) = (*this)(r, idx[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t c = 0; c < cols_; ++c) m.at(i, c) = (*this)(idx[i], c);
  return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  for (size_t r = 0; r < a.rows_; ++r) {
    for (size_t c = 0; c < a.cols_; ++c) m.at(r, c) = a(r, c);
    for (size_t c = 0; c < b.cols_; ++c) m.at(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vcat column mismatch");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<size_t> pivots;
  size_t pr = 0;
  std::vector<size_t> nz;
  for (size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    size_t sel = a.rows();
    for (size_t r = pr; r < a.rows(); ++r)
      if (!a(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel == a.rows()) continue;
    if (sel != pr)
      for (size_t j = c; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pr, j));
    Scalar inv = f.inv(a(pr, c));
    nz.clear();
    for (size_t j = c; j < a.cols(); ++j)
      if (!a(pr, j).is_zero()) {
        a.at(pr, j) = f.mul(a(pr, j), inv);
        nz.push_back(j);
      }
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == pr || a(r, c).is_zero()) continue;
      Scalar factor = a(r, c);
      for (size_t j : nz) a.at(r, j) = f.sub(a(r, j), f.mul(factor, a(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(a), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, m.cols(), free_cols.size());
  for (size_t j = 0; j < free_cols.size(); ++j) {
    k.at(free_cols[j], j) = f.one();
    for (size_t i = 0; i < e.pivots.size(); ++i) k.at(e.pivots[i], j) = f.neg(e.reduced(i, free_cols[j]));
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  Echelon e = rref(Matrix::hcat(m, b));
  Matrix x(m.field(), m.cols(), b.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= m.cols()) return std::nullopt;
    for (size_t k = 0; k < b.cols(); ++k) x.at(e.pivots[i], k) = e.reduced(i, m.cols() + k);
  }
  return x;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

void axpy(const Field& f, Vec& a, const Scalar& s, const Vec& b) {
  if (s.is_zero()) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] = f.add(a[i], f.mul(s, b[i]));
}

Vec scale_vec(const Field& f, const Vec& a, const Scalar& s) {
  Vec r(a.size());
  if (s.is_zero()) return r;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] = f.mul(a[i], s);
  return r;
}

Vec add_vec(const Field& f, const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(f, r, f.one(), b);
  return r;
}

Vec sub_vec(const Field& f, const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(f, r, f.neg(f.one()), b);
  return r;
}

Subspace::Subspace(Field f, size_t ambient) : field_(f), ambient_(ambient), basis_(f, ambient, 0) {}

Subspace Subspace::span(const Matrix& columns) {
  Echelon e = rref(columns.transpose());
  Subspace s(columns.field(), columns.rows());
  s.pivot_rows_ = e.pivots;
  s.basis_ = Matrix(columns.field(), columns.rows(), e.pivots.size());
  for (size_t j = 0; j < e.pivots.size(); ++j)
    for (size_t r = 0; r < columns.rows(); ++r) s.basis_.at(r, j) = e.reduced(j, r);
  return s;
}

Subspace Subspace::span(Field f, size_t ambient, const std::vector<Vec>& vectors) {
  return span(Matrix::from_columns(f, ambient, vectors));
}

Subspace Subspace::whole(Field f, size_t ambient) { return span(Matrix::identity(f, ambient)); }

std::vector<size_t> Subspace::complement_rows() const {
  std::vector<bool> piv(ambient_, false);
  for (size_t p : pivot_rows_) piv[p] = true;
  std::vector<size_t> out;
  for (size_t r = 0; r < ambient_; ++r)
    if (!piv[r]) out.push_back(r);
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t j = 0; j < pivot_rows_.size(); ++j) {
    Scalar c = r[pivot_rows_[j]];
    if (c.is_zero()) continue;
    for (size_t i = 0; i < ambient_; ++i) {
      const Scalar& b = basis_(i, j);
      if (!b.is_zero()) r[i] = field_.sub(r[i], field_.mul(c, b));
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (size_t j = 0; j < o.dim(); ++j)
    if (!contains(o.basis_vector(j))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(pivot_rows_.size());
  for (size_t j = 0; j < pivot_rows_.size(); ++j) c[j] = v[pivot_rows_[j]];
  return c;
}

Vec Subspace::quotient_coordinates(const Vec& v) const {
  Vec r = reduce(v);
  auto comp = complement_rows();
  Vec out(comp.size());
  for (size_t j = 0; j < comp.size(); ++j) out[j] = r[comp[j]];
  return out;
}

Subspace Subspace::sum(const Subspace& o) const { return span(Matrix::hcat(basis_, o.basis_)); }

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(field_, ambient_);
  Matrix k = kernel_basis(Matrix::hcat(basis_, o.basis_.scaled(field_.neg(field_.one()))));
  Matrix top(field_, dim(), k.cols());
  for (size_t r = 0; r < dim(); ++r)
    for (size_t c = 0; c < k.cols(); ++c) top.at(r, c) = k(r, c);
  return span(basis_ * top);
}

Subspace Subspace::image(const Matrix& m) const { return span(m * basis_); }

Subspace preimage(const Matrix& m, const Subspace& target) {
  auto comp = target.complement_rows();
  Matrix q(m.field(), comp.size(), m.cols());
  for (size_t c = 0; c < m.cols(); ++c) {
    Vec r = target.reduce(m.column(c));
    for (size_t i = 0; i < comp.size(); ++i) q.at(i, c) = r[comp[i]];
  }
  return Subspace::span(kernel_basis(q));
}

}  // namespace koszul
