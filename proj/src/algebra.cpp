#include "koszul/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "koszul/errors.hpp"
#include "koszul/structure.hpp"

namespace koszul {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<uint32_t>(i), v[i]);
  return s;
}

Vec to_dense(const SparseVec& s, size_t n) {
  Vec v(n);
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

FiniteDimAlgebra::FiniteDimAlgebra(Field f, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit)
    : field_(f), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  if (table_.size() != dim() * dim()) throw InvalidStructure("structure constant table has wrong size");
  if (unit_.size() != dim()) throw InvalidStructure("unit has wrong length");
}

Vec FiniteDimAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec r(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = field_.mul(a[i], b[j]);
      for (const auto& [k, v] : product(i, j)) r[k] = field_.add(r[k], field_.mul(c, v));
    }
  }
  return r;
}

Matrix FiniteDimAlgebra::left_multiplication(const Vec& a) const {
  Matrix m(field_, dim(), dim());
  for (size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(a, unit_vec(dim(), j)));
  return m;
}

Matrix FiniteDimAlgebra::right_multiplication(const Vec& a) const {
  Matrix m(field_, dim(), dim());
  for (size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(unit_vec(dim(), j), a));
  return m;
}

FiniteDimAlgebra FiniteDimAlgebra::opposite() const {
  std::vector<SparseVec> t(table_.size());
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) t[i * dim() + j] = product(j, i);
  return FiniteDimAlgebra(field_, labels_, std::move(t), unit_);
}

void FiniteDimAlgebra::validate() const {
  size_t n = dim();
  for (size_t i = 0; i < n; ++i) {
    Vec e = unit_vec(n, i);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw InvalidStructure("unit is not a two-sided identity on " + labels_[i]);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ij = to_dense(product(i, j), n);
      for (size_t k = 0; k < n; ++k) {
        Vec left = multiply(ij, unit_vec(n, k));
        Vec right = multiply(unit_vec(n, i), to_dense(product(j, k), n));
        if (left != right)
          throw InvalidStructure("associativity fails on (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
      }
    }
}

GradedAlgebra::GradedAlgebra(Data d) {
  size_t n = d.labels.size();
  if (d.degree.size() != n || d.table.size() != n * n || d.unit.size() != n)
    throw InvalidStructure("graded algebra data has inconsistent sizes");
  if (!std::is_sorted(d.degree.begin(), d.degree.end()) || (n > 0 && d.degree.front() < 0))
    throw InvalidStructure("basis must be sorted by nonnegative degree");
  int top = n == 0 ? -1 : d.degree.back();
  if (d.exact) {
    for (int k = 0; k <= top; ++k)
      if (std::find(d.degree.begin(), d.degree.end(), k) == d.degree.end()) {
        top = k - 1;
        break;
      }
    if (n > 0 && d.degree.back() > top)
      throw InvalidStructure("exact graded algebra has a gap below a nonzero degree");
  } else {
    if (top > d.truncation) throw InvalidStructure("basis element beyond the truncation");
    top = d.truncation;
  }
  offsets_.assign(static_cast<size_t>(top) + 2, 0);
  for (int k = 0; k <= top + 1; ++k)
    offsets_[static_cast<size_t>(k)] =
        static_cast<size_t>(std::lower_bound(d.degree.begin(), d.degree.end(), k) - d.degree.begin());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : d.table[i * n + j])
        if (d.degree[k] != d.degree[i] + d.degree[j])
          throw InvalidStructure("product of " + d.labels[i] + " and " + d.labels[j] + " is not homogeneous");
  generator_pos_.assign(n, static_cast<size_t>(-1));
  for (size_t i = 0; i < n && d.degree[i] <= 1; ++i) {
    generator_pos_[i] = generators_.size();
    generators_.push_back(i);
  }
  factorization_.resize(n);
  d_ = std::make_shared<const Data>(std::move(d));

  // Factor each basis element of degree >= 2 through A_1 * A_{d-1}.
  for (int deg = 2; deg <= top; ++deg) {
    size_t lo = offset(deg), hi = offset(deg + 1);
    if (lo == hi) continue;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<Vec> cols;
    for (size_t g = offset(1); g < offset(2); ++g)
      for (size_t b = offset(deg - 1); b < offset(deg); ++b) {
        const SparseVec& p = product(g, b);
        if (p.empty()) continue;
        Vec v(hi - lo);
        for (const auto& [k, c] : p) v[k - lo] = c;
        pairs.emplace_back(g, b);
        cols.push_back(std::move(v));
      }
    if (cols.empty()) continue;
    Matrix m = Matrix::from_columns(field(), hi - lo, cols);
    // Solve column by column so a missing element does not spoil the others.
    for (size_t t = 0; t < hi - lo; ++t) {
      Matrix b(field(), hi - lo, 1);
      b.at(t, 0) = field().one();
      auto x = solve(m, b);
      if (!x) continue;
      for (size_t q = 0; q < pairs.size(); ++q)
        if (!(*x)(q, 0).is_zero()) factorization_[lo + t].emplace_back(pairs[q].first, pairs[q].second, (*x)(q, 0));
    }
  }
  cache_ = std::make_shared<Cache>();
}

size_t GradedAlgebra::dim(int deg) const {
  if (deg < 0 || deg > top_degree()) return 0;
  return offsets_[static_cast<size_t>(deg) + 1] - offsets_[static_cast<size_t>(deg)];
}

std::vector<size_t> GradedAlgebra::dims() const {
  std::vector<size_t> out;
  for (int k = 0; k <= top_degree(); ++k) out.push_back(dim(k));
  return out;
}

size_t GradedAlgebra::offset(int deg) const {
  if (deg <= 0) return 0;
  if (deg > top_degree()) return dim();
  return offsets_[static_cast<size_t>(deg)];
}

size_t GradedAlgebra::generator_position(size_t basis_index) const { return generator_pos_[basis_index]; }

Vec GradedAlgebra::multiply(const Vec& a, const Vec& b) const {
  const Field& f = field();
  size_t n = dim();
  Vec r(n);
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = f.mul(a[i], b[j]);
      for (const auto& [k, v] : product(i, j)) r[k] = f.add(r[k], f.mul(c, v));
    }
  }
  return r;
}

FiniteDimAlgebra GradedAlgebra::degree_zero_algebra() const {
  size_t n0 = dim(0);
  std::vector<std::string> labels(d_->labels.begin(), d_->labels.begin() + static_cast<std::ptrdiff_t>(n0));
  std::vector<SparseVec> t(n0 * n0);
  for (size_t i = 0; i < n0; ++i)
    for (size_t j = 0; j < n0; ++j) t[i * n0 + j] = product(i, j);
  Vec u(d_->unit.begin(), d_->unit.begin() + static_cast<std::ptrdiff_t>(n0));
  return FiniteDimAlgebra(field(), std::move(labels), std::move(t), std::move(u));
}

FiniteDimAlgebra GradedAlgebra::total_algebra() const {
  return FiniteDimAlgebra(field(), d_->labels, d_->table, d_->unit);
}

const DegreeZeroStructure& GradedAlgebra::degree_zero() const {
  std::call_once(cache_->once, [this] {
    auto s = std::make_unique<DegreeZeroStructure>();
    s->algebra = degree_zero_algebra();
    s->radical = radical(s->algebra);
    std::vector<Vec> coarse;
    std::vector<std::string> coarse_names;
    if (objects()) {
      for (size_t x = 0; x < objects()->names.size(); ++x) {
        coarse.push_back(unit_vec(dim(0), objects()->identity[x]));
        coarse_names.push_back(objects()->names[x]);
      }
    }
    IdempotentSystem sys = primitive_idempotents(s->algebra, s->radical, coarse, coarse_names);
    s->idempotents = std::move(sys.idempotents);
    s->iso_class = std::move(sys.iso_class);
    s->representatives = std::move(sys.representatives);
    s->class_names = std::move(sys.class_names);
    cache_->value = std::move(s);
  });
  return *cache_->value;
}

GradedAlgebra opposite(const GradedAlgebra& a) {
  GradedAlgebra::Data d = a.data();
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d.table[i * n + j] = a.product(j, i);
  if (d.objects) std::swap(d.objects->source, d.objects->target);
  return GradedAlgebra(std::move(d));
}

GradedAlgebra concentrated_in_degree_zero(const FiniteDimAlgebra& a, std::optional<ObjectStructure> objects) {
  GradedAlgebra::Data d;
  d.field = a.field();
  d.truncation = 0;
  d.exact = true;
  d.degree.assign(a.dim(), 0);
  d.labels = a.labels();
  d.table.resize(a.dim() * a.dim());
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) d.table[i * a.dim() + j] = a.product(i, j);
  d.unit = a.unit();
  d.objects = std::move(objects);
  return GradedAlgebra(std::move(d));
}

void validate(const GradedAlgebra& a) {
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i) {
    Vec e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e)
      throw InvalidStructure("unit is not a two-sided identity on " + a.label(i));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a.degree(i) + a.degree(j) > a.top_degree()) continue;
      Vec ij = to_dense(a.product(i, j), n);
      for (size_t k = 0; k < n; ++k) {
        if (a.degree(i) + a.degree(j) + a.degree(k) > a.top_degree()) continue;
        Vec left = a.multiply(ij, a.basis_vector(k));
        Vec right = a.multiply(a.basis_vector(i), to_dense(a.product(j, k), n));
        if (left != right)
          throw InvalidStructure("associativity fails on (" + a.label(i) + "," + a.label(j) + "," + a.label(k) + ")");
      }
    }
  for (size_t i = a.offset(2); i < n; ++i)
    if (a.factorization(i).empty())
      throw InvalidStructure("basis element " + a.label(i) + " is not in A_1 times the previous component");
}

}  // namespace koszul

namespace koszul {

std::string format_element(const GradedAlgebra& a, const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (c != "1") out += c + "*";
    out += a.label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace koszul
