#include "koszul/iso.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace koszul {

namespace {

int known(const GradedModule& m) { return m.window() ? *m.window() : std::numeric_limits<int>::max(); }

int common_top(const GradedModule& m, const GradedModule& n) {
  int top = std::max(m.top(), n.top());
  return std::min({top, known(m), known(n)});
}

bool blocks_invertible(const GradedModule& m, const GradedModule& n, const ModuleMap& f) {
  for (int d = 0; d <= common_top(m, n); ++d) {
    if (m.dim(d) != n.dim(d)) return false;
    if (m.dim(d) > 0 && rank(f.block(d)) != m.dim(d)) return false;
  }
  return true;
}

ModuleMap combine(const Field& f, const std::vector<ModuleMap>& basis, const Vec& c) {
  ModuleMap out = basis[0];
  for (size_t d = 0; d < out.blocks.size(); ++d) {
    Matrix blk(f, out.blocks[d].rows(), out.blocks[d].cols());
    for (size_t i = 0; i < basis.size(); ++i)
      if (!c[i].is_zero()) blk.add_scaled(basis[i].blocks[d], c[i]);
    out.blocks[d] = std::move(blk);
  }
  return out;
}

}  // namespace

std::vector<ModuleMap> hom_space(const GradedModule& m, const GradedModule& n) {
  const GradedAlgebra& a = m.algebra();
  const Field& f = m.field();
  int top = common_top(m, n);
  std::vector<size_t> off(static_cast<size_t>(top + 2), 0);
  for (int d = 0; d <= top; ++d) off[static_cast<size_t>(d + 1)] = off[static_cast<size_t>(d)] + n.dim(d) * m.dim(d);
  size_t u = off.back();
  Matrix k = Matrix::identity(f, u);
  auto var = [&](int d, size_t r, size_t c) { return off[static_cast<size_t>(d)] + r * m.dim(d) + c; };
  for (size_t g = 0; g < a.generators().size() && k.cols() > 0; ++g) {
    int gd = a.degree(a.generators()[g]);
    for (int d = 0; d + gd <= top && k.cols() > 0; ++d) {
      size_t rows = n.dim(d + gd), cols = m.dim(d);
      if (rows == 0 || cols == 0) continue;
      const Matrix& rm = m.generator_action(g, d);
      const Matrix& rn = n.generator_action(g, d);
      Matrix ck(f, rows * cols, k.cols());
      for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
          size_t eq = r * cols + c;
          auto add = [&](size_t v, const Scalar& s) {
            if (s.is_zero()) return;
            for (size_t j = 0; j < k.cols(); ++j)
              if (!k(v, j).is_zero()) ck.at(eq, j) = f.add(ck(eq, j), f.mul(s, k(v, j)));
          };
          for (size_t t = 0; t < m.dim(d + gd); ++t) add(var(d + gd, r, t), rm(t, c));
          for (size_t t = 0; t < n.dim(d); ++t) add(var(d, t, c), f.neg(rn(r, t)));
        }
      k = k * kernel_basis(ck);
    }
  }
  std::vector<ModuleMap> out;
  for (size_t j = 0; j < k.cols(); ++j) {
    ModuleMap h;
    for (int d = 0; d <= top; ++d) {
      Matrix blk(f, n.dim(d), m.dim(d));
      for (size_t r = 0; r < n.dim(d); ++r)
        for (size_t c = 0; c < m.dim(d); ++c) blk.at(r, c) = k(var(d, r, c), j);
      h.blocks.push_back(std::move(blk));
    }
    out.push_back(std::move(h));
  }
  return out;
}

bool is_isomorphism(const GradedModule& m, const GradedModule& n, const ModuleMap& f) {
  return is_homomorphism(m, n, f) && blocks_invertible(m, n, f);
}

IsoResult graded_iso(const GradedModule& m, const GradedModule& n, const IsoOptions& opts) {
  IsoResult res;
  int top = common_top(m, n);
  if (m.window() || n.window()) res.verdict.window = top;
  for (int d = 0; d <= top; ++d)
    if (m.dim(d) != n.dim(d)) {
      res.verdict = Verdict::fails("dimension vectors differ in degree " + std::to_string(d) + ": " +
                                       dims_string(m.dims()) + " vs " + dims_string(n.dims()),
                                   d);
      return res;
    }
  auto hom = hom_space(m, n);
  bool empty = true;
  for (int d = 0; d <= top; ++d) empty = empty && m.dim(d) == 0;
  if (empty) {
    ModuleMap z;
    for (int d = 0; d <= top; ++d) z.blocks.emplace_back(m.field(), 0, 0);
    res.iso = z;
    return res;
  }
  if (hom.empty()) {
    res.verdict = Verdict::fails("no nonzero homomorphisms");
    return res;
  }
  size_t end_dim = hom_space(m, m).size();
  if (end_dim != hom.size()) {
    res.verdict = Verdict::fails("dim Hom(M,N) = " + std::to_string(hom.size()) + " but dim End(M) = " +
                                 std::to_string(end_dim));
    return res;
  }
  for (const auto& h : hom)
    if (blocks_invertible(m, n, h)) {
      res.iso = h;
      return res;
    }
  const Field& f = m.field();
  size_t k = hom.size();
  if (!f.is_rational() && k <= opts.exhaustive_dim) {
    uint64_t p = static_cast<uint64_t>(f.characteristic());
    double lines = 0;
    for (size_t i = 0; i < k; ++i) lines = lines * static_cast<double>(p) + 1;
    if (lines <= static_cast<double>(opts.exhaustive_budget)) {
      // Enumerate one representative per line: first nonzero coordinate 1.
      for (size_t lead = 0; lead < k; ++lead) {
        size_t free = k - lead - 1;
        uint64_t count = 1;
        for (size_t i = 0; i < free; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
          Vec c(k);
          c[lead] = f.one();
          uint64_t x = code;
          for (size_t i = lead + 1; i < k; ++i) {
            c[i] = f.from_int(static_cast<int64_t>(x % p));
            x /= p;
          }
          ModuleMap h = combine(f, hom, c);
          if (blocks_invertible(m, n, h)) {
            res.iso = std::move(h);
            return res;
          }
        }
      }
      res.verdict = Verdict::fails("no invertible element among all " + std::to_string(static_cast<uint64_t>(lines)) +
                                   " lines of Hom(M,N)");
      return res;
    }
  }
  std::mt19937_64 rng(opts.seed);
  for (size_t t = 0; t < opts.random_tries; ++t) {
    Vec c(k);
    for (size_t i = 0; i < k; ++i) {
      if (f.is_rational())
        c[i] = f.from_int(static_cast<int64_t>(rng() % 101) - 50);
      else
        c[i] = f.from_int(static_cast<int64_t>(rng() % static_cast<uint64_t>(f.characteristic())));
    }
    ModuleMap h = combine(f, hom, c);
    if (blocks_invertible(m, n, h)) {
      res.iso = std::move(h);
      return res;
    }
  }
  res.verdict = Verdict::inconclusive("no invertible element found in " + std::to_string(opts.random_tries) +
                                      " random combinations of a " + std::to_string(k) + "-dimensional Hom space");
  return res;
}

}  // namespace koszul
