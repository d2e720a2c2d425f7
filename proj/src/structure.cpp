#include "koszul/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

using IntMat = std::vector<int64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, size_t n, int64_t mod) {
  IntMat c(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      int64_t x = a[i * n + k];
      if (x == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % mod;
    }
  return c;
}

// Trace of the power-p^i of an integer matrix, reduced mod p^(i+1).
int64_t power_trace(IntMat m, size_t n, int64_t exponent, int64_t mod) {
  IntMat r(n * n, 0);
  for (size_t i = 0; i < n; ++i) r[i * n + i] = 1;
  while (exponent > 0) {
    if (exponent & 1) r = int_mul(r, m, n, mod);
    exponent >>= 1;
    if (exponent) m = int_mul(m, m, n, mod);
  }
  int64_t t = 0;
  for (size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % mod;
  return t;
}

Subspace radical_unchecked(const FiniteDimAlgebra& a) {
  const Field& f = a.field();
  size_t n = a.dim();
  if (n == 0) return Subspace(f, 0);
  int64_t p = f.characteristic();
  if (p == 0 || p > static_cast<int64_t>(n)) {
    Vec tr(n);
    for (size_t k = 0; k < n; ++k)
      for (size_t m = 0; m < n; ++m)
        for (const auto& [idx, c] : a.product(k, m))
          if (idx == m) tr[k] = f.add(tr[k], c);
    Matrix g(f, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Scalar s;
        for (const auto& [k, c] : a.product(i, j)) s = f.add(s, f.mul(c, tr[k]));
        g.at(j, i) = s;
      }
    return Subspace::span(kernel_basis(g));
  }
  // Small characteristic: successive kernels of the p-power trace functionals
  // computed from integer lifts of the regular representation.
  size_t levels = 0;
  for (int64_t q = p; q <= static_cast<int64_t>(n); q *= p) ++levels;
  std::vector<Vec> ideal;
  for (size_t i = 0; i < n; ++i) ideal.push_back(unit_vec(n, i));
  std::vector<Matrix> left(n);
  for (size_t j = 0; j < n; ++j) left[j] = a.left_multiplication(unit_vec(n, j));
  int64_t pi = 1;
  for (size_t i = 0; i <= levels; ++i) {
    int64_t mod = pi * p;
    Matrix g(f, n, ideal.size());
    for (size_t k = 0; k < ideal.size(); ++k) {
      Matrix lk(f, n, n);
      for (size_t m = 0; m < n; ++m)
        if (!ideal[k][m].is_zero()) lk.add_scaled(left[m], ideal[k][m]);
      for (size_t j = 0; j < n; ++j) {
        Matrix prod = lk * left[j];
        IntMat im(n * n);
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < n; ++c) im[r * n + c] = prod(r, c).small_num();
        int64_t t = power_trace(std::move(im), n, pi, mod);
        g.at(j, k) = f.from_int(t / pi);
      }
    }
    Matrix ker = kernel_basis(g);
    std::vector<Vec> next;
    for (size_t c = 0; c < ker.cols(); ++c) {
      Vec v(n);
      for (size_t k = 0; k < ideal.size(); ++k) axpy(f, v, ker(k, c), ideal[k]);
      next.push_back(std::move(v));
    }
    ideal = std::move(next);
    if (ideal.empty()) break;
    pi *= p;
  }
  return Subspace::span(f, n, ideal);
}

Vec minimal_polynomial_with_unit(const FiniteDimAlgebra& a, const Vec& x, const Vec& unit) {
  const Field& f = a.field();
  std::vector<Vec> powers{unit};
  while (true) {
    Vec next = a.multiply(x, powers.back());
    Matrix m = Matrix::from_columns(f, a.dim(), powers);
    Matrix b = Matrix::from_columns(f, a.dim(), {next});
    auto sol = solve(m, b);
    if (sol) {
      Vec coeffs(powers.size());
      for (size_t k = 0; k < powers.size(); ++k) coeffs[k] = f.neg((*sol)(k, 0));
      return coeffs;
    }
    powers.push_back(std::move(next));
  }
}

// Evaluate a polynomial given low-to-high coefficients at an algebra element.
Vec evaluate_polynomial(const FiniteDimAlgebra& a, const Vec& coeffs, const Vec& x, const Vec& unit) {
  const Field& f = a.field();
  Vec r(a.dim());
  for (size_t k = coeffs.size(); k-- > 0;) {
    r = a.multiply(x, r);
    axpy(f, r, coeffs[k], unit);
  }
  return r;
}

// Divide a polynomial (low-to-high, full coefficients incl. leading) by (t - root).
Vec deflate(const Field& f, const Vec& full, const Scalar& root, Scalar& remainder) {
  size_t d = full.size() - 1;
  Vec q(d);
  Scalar carry;
  for (size_t k = d + 1; k-- > 0;) {
    Scalar v = f.add(full[k], carry);
    if (k == 0) {
      remainder = v;
    } else {
      q[k - 1] = v;
      carry = f.mul(v, root);
    }
  }
  return q;
}

Scalar horner(const Field& f, const Vec& full, const Scalar& t) {
  Scalar r;
  for (size_t k = full.size(); k-- > 0;) r = f.add(f.mul(r, t), full[k]);
  return r;
}

using ModPoly = std::vector<int64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int64_t mulmod(int64_t a, int64_t b, int64_t p) { return static_cast<int64_t>(static_cast<__int128>(a) * b % p); }

ModPoly poly_mod(ModPoly a, const ModPoly& m, int64_t p) {
  trim(a);
  int64_t inv_lead = mod_inverse(m.back(), p);
  while (a.size() >= m.size()) {
    int64_t c = mulmod(a.back(), inv_lead, p);
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - mulmod(c, m[i], p)) % p + p) % p;
    trim(a);
  }
  return a;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(c), m, p);
}

ModPoly poly_powmod(ModPoly base, int64_t e, const ModPoly& m, int64_t p) {
  ModPoly r{1};
  r = poly_mod(r, m, p);
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    int64_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

// Roots of a squarefree polynomial that splits into distinct linear factors.
void split_roots(const ModPoly& g, int64_t p, std::mt19937_64& rng, std::vector<int64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(((p - mulmod(g[0], mod_inverse(g[1], p), p)) % p + p) % p);
    return;
  }
  std::uniform_int_distribution<int64_t> dist(0, p - 1);
  while (true) {
    ModPoly base{dist(rng), 1};
    ModPoly h = poly_powmod(base, (p - 1) / 2, g, p);
    if (h.empty()) h = {p - 1};
    else h[0] = (h[0] - 1 + p) % p;
    ModPoly d = poly_gcd(g, h, p);
    if (d.size() > 1 && d.size() < g.size()) {
      ModPoly rest = g;
      // rest = g / d by long division.
      ModPoly q(g.size() - d.size() + 1, 0);
      ModPoly r = g;
      int64_t inv = mod_inverse(d.back(), p);
      for (size_t k = q.size(); k-- > 0;) {
        int64_t c = mulmod(r[k + d.size() - 1], inv, p);
        q[k] = c;
        for (size_t i = 0; i < d.size(); ++i) r[k + i] = ((r[k + i] - mulmod(c, d[i], p)) % p + p) % p;
      }
      split_roots(d, p, rng, out);
      split_roots(q, p, rng, out);
      return;
    }
  }
}

std::vector<int64_t> prime_field_roots(const ModPoly& f, int64_t p) {
  std::vector<int64_t> roots;
  if (p <= 100000) {
    for (int64_t t = 0; t < p; ++t) {
      int64_t v = 0;
      for (size_t k = f.size(); k-- > 0;) v = (mulmod(v, t, p) + f[k]) % p;
      if (v == 0) roots.push_back(t);
    }
    return roots;
  }
  ModPoly x{0, 1};
  ModPoly xp = poly_powmod(x, p, f, p);
  xp.resize(std::max<size_t>(xp.size(), 2), 0);
  xp[1] = (xp[1] - 1 + p) % p;
  ModPoly g = poly_gcd(f, xp, p);
  std::mt19937_64 rng(12345);
  split_roots(g, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fac;
  for (mpz_class d = 2; d * d <= n && d < 200000; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) fac.emplace_back(d, e);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : fac) {
    size_t cur = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

std::vector<Scalar> rational_roots(const Vec& full) {
  mpz_class l = 1;
  for (const auto& c : full) {
    mpq_class q = c.to_mpq();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : full) {
    mpq_class q = c.to_mpq() * l;
    ints.push_back(q.get_num());
  }
  std::vector<Scalar> roots;
  size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  if (ints.size() - low <= 1) return roots;
  auto num = divisors(ints[low]);
  auto den = divisors(ints.back());
  Field q = Field::rationals();
  for (const auto& a : num)
    for (const auto& b : den)
      for (int s : {1, -1}) {
        Scalar cand(mpq_class(a * s, b));
        if (horner(q, full, cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

// Splits a unital algebra with known radical into primitive orthogonal
// idempotents; the second component is the simple block of each idempotent.
std::vector<std::pair<Vec, size_t>> decompose_unital(const FiniteDimAlgebra& c, const Subspace& radc) {
  const Field& f = c.field();
  size_t n = c.dim();
  QuotientAlgebra sq = quotient_algebra(c, radc);
  const FiniteDimAlgebra& s = sq.algebra;
  size_t m = s.dim();

  // Centre of the semisimple quotient.
  Matrix comm(f, m * m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Vec d = sub_vec(f, to_dense(s.product(i, j), m), to_dense(s.product(j, i), m));
      for (size_t k = 0; k < m; ++k) comm.at(j * m + k, i) = d[k];
    }
  Matrix zbasis = kernel_basis(comm);

  std::vector<Vec> central{s.unit()};
  std::vector<Vec> done;
  while (!central.empty()) {
    Vec cidem = central.back();
    central.pop_back();
    std::vector<Vec> zc;
    for (size_t k = 0; k < zbasis.cols(); ++k) zc.push_back(s.multiply(cidem, zbasis.column(k)));
    Subspace zspan = Subspace::span(f, m, zc);
    if (zspan.dim() <= 1) {
      done.push_back(cidem);
      continue;
    }
    bool split = false;
    for (size_t k = 0; k < zspan.dim() && !split; ++k) {
      Vec z = zspan.basis_vector(k);
      Vec mp = minimal_polynomial_with_unit(s, z, cidem);
      if (mp.size() <= 1) continue;
      Vec full = mp;
      full.push_back(f.one());
      bool nonlinear = false;
      auto roots = polynomial_roots(f, mp, nonlinear);
      if (nonlinear || roots.empty())
        throw FieldDoesNotSplit("the centre of the semisimple quotient contains a proper field extension of " +
                                f.name());
      Scalar rem;
      Vec q = deflate(f, full, roots[0], rem);
      Vec qz = evaluate_polynomial(s, q, z, cidem);
      Scalar qr = horner(f, q, roots[0]);
      Vec e = scale_vec(f, qz, f.inv(qr));
      central.push_back(e);
      central.push_back(sub_vec(f, cidem, e));
      split = true;
    }
    if (!split) done.push_back(cidem);
  }

  // Split each simple block into primitive idempotents using zero divisors.
  std::vector<std::pair<Vec, size_t>> prim_bar;
  std::mt19937_64 rng(777);
  for (size_t blk = 0; blk < done.size(); ++blk) {
    Subspace block = Subspace::span(f, m, [&] {
      std::vector<Vec> v;
      for (size_t i = 0; i < m; ++i) v.push_back(s.multiply(done[blk], unit_vec(m, i)));
      return v;
    }());
    std::vector<Vec> work{done[blk]}, found;
    while (!work.empty()) {
      Vec e = work.back();
      work.pop_back();
      Corner cr = corner_algebra(s, e);
      size_t cd = cr.algebra.dim();
      if (cd == 1) {
        found.push_back(e);
        continue;
      }
      const FiniteDimAlgebra& ca = cr.algebra;
      std::optional<Vec> zero_div;
      std::uniform_int_distribution<int> coef(-3, 3);
      for (size_t attempt = 0; attempt < cd + 400 && !zero_div; ++attempt) {
        Vec x(cd);
        if (attempt < cd) {
          x[attempt] = f.one();
        } else {
          for (auto& v : x) v = f.from_int(coef(rng));
        }
        Vec mp = minimal_polynomial_with_unit(ca, x, ca.unit());
        if (mp.size() < 2) continue;
        bool nonlinear = false;
        auto roots = polynomial_roots(f, mp, nonlinear);
        if (roots.empty()) continue;
        zero_div = sub_vec(f, x, scale_vec(f, ca.unit(), roots[0]));
      }
      if (!zero_div)
        throw FieldDoesNotSplit("a simple block of the semisimple quotient is not a matrix algebra over " + f.name());
      std::vector<Vec> ideal_vecs;
      for (size_t j = 0; j < cd; ++j) ideal_vecs.push_back(ca.multiply(*zero_div, unit_vec(cd, j)));
      Subspace ideal = Subspace::span(f, cd, ideal_vecs);
      size_t k = ideal.dim();
      Matrix sys(f, k * cd, k);
      Matrix rhs(f, k * cd, 1);
      for (size_t l = 0; l < k; ++l) {
        Vec vl = ideal.basis_vector(l);
        for (size_t q = 0; q < k; ++q) {
          Vec prod = ca.multiply(ideal.basis_vector(q), vl);
          for (size_t r = 0; r < cd; ++r) sys.at(l * cd + r, q) = prod[r];
        }
        for (size_t r = 0; r < cd; ++r) rhs.at(l * cd + r, 0) = vl[r];
      }
      auto sol = solve(sys, rhs);
      if (!sol) throw FieldDoesNotSplit("right ideal without a left identity; algebra is not semisimple over " + f.name());
      Vec lid(cd);
      for (size_t q = 0; q < k; ++q) axpy(f, lid, (*sol)(q, 0), ideal.basis_vector(q));
      Vec lid_s = cr.embedding.apply(lid);
      work.push_back(lid_s);
      work.push_back(sub_vec(f, e, lid_s));
    }
    if (found.size() * found.size() != block.dim())
      throw FieldDoesNotSplit("a simple block of dimension " + std::to_string(block.dim()) +
                              " is not a full matrix algebra over " + f.name());
    std::sort(found.begin(), found.end(), [](const Vec& a, const Vec& b) {
      auto first = [](const Vec& v) {
        for (size_t i = 0; i < v.size(); ++i)
          if (!v[i].is_zero()) return i;
        return v.size();
      };
      return first(a) < first(b);
    });
    for (auto& e : found) prim_bar.emplace_back(std::move(e), blk);
  }

  // Lift through the radical inside successively smaller corners.
  std::vector<std::pair<Vec, size_t>> out;
  Vec remaining = c.unit();
  for (size_t k = 0; k < prim_bar.size(); ++k) {
    if (k + 1 == prim_bar.size()) {
      out.emplace_back(remaining, prim_bar[k].second);
      break;
    }
    Vec lift(n);
    for (size_t i = 0; i < m; ++i) lift[sq.representatives[i]] = prim_bar[k].first[i];
    Vec x = c.multiply(c.multiply(remaining, lift), remaining);
    for (int iter = 0;; ++iter) {
      Vec x2 = c.multiply(x, x);
      if (x2 == x) break;
      if (iter > 64) throw SmallCharFallbackFailed("idempotent lifting did not converge");
      Vec x3 = c.multiply(x2, x);
      x = sub_vec(f, scale_vec(f, x2, f.from_int(3)), scale_vec(f, x3, f.from_int(2)));
    }
    out.emplace_back(x, prim_bar[k].second);
    remaining = sub_vec(f, remaining, x);
  }
  return out;
}

}  // namespace

QuotientAlgebra quotient_algebra(const FiniteDimAlgebra& a, const Subspace& ideal) {
  const Field& f = a.field();
  auto reps = ideal.complement_rows();
  size_t m = reps.size();
  std::vector<std::string> labels;
  for (size_t r : reps) labels.push_back(a.labels()[r]);
  std::vector<SparseVec> t(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      t[i * m + j] = to_sparse(ideal.quotient_coordinates(to_dense(a.product(reps[i], reps[j]), a.dim())));
  QuotientAlgebra q{FiniteDimAlgebra(f, std::move(labels), std::move(t), ideal.quotient_coordinates(a.unit())),
                    reps};
  return q;
}

Corner corner_algebra(const FiniteDimAlgebra& a, const Vec& e) {
  const Field& f = a.field();
  std::vector<Vec> vecs;
  for (size_t i = 0; i < a.dim(); ++i) vecs.push_back(a.multiply(a.multiply(e, unit_vec(a.dim(), i)), e));
  Subspace sp = Subspace::span(f, a.dim(), vecs);
  size_t d = sp.dim();
  std::vector<SparseVec> t(d * d);
  std::vector<std::string> labels;
  for (size_t i = 0; i < d; ++i) labels.push_back("c" + std::to_string(i));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      t[i * d + j] = to_sparse(sp.coordinates(a.multiply(sp.basis_vector(i), sp.basis_vector(j))));
  return Corner{FiniteDimAlgebra(f, std::move(labels), std::move(t), sp.coordinates(e)), sp.basis()};
}

Vec minimal_polynomial(const FiniteDimAlgebra& a, const Vec& x) { return minimal_polynomial_with_unit(a, x, a.unit()); }

std::vector<Scalar> polynomial_roots(const Field& f, const Vec& monic_coeffs, bool& has_nonlinear_factor) {
  Vec full = monic_coeffs;
  full.push_back(f.one());
  std::vector<Scalar> roots;
  if (f.is_rational()) {
    roots = rational_roots(full);
  } else {
    ModPoly mp;
    for (const auto& c : full) mp.push_back(c.small_num());
    for (int64_t r : prime_field_roots(mp, f.characteristic())) roots.push_back(Scalar(r));
  }
  Vec rest = full;
  for (const auto& r : roots) {
    while (rest.size() > 1) {
      Scalar rem;
      Vec q = deflate(f, rest, r, rem);
      if (!rem.is_zero()) break;
      rest = std::move(q);
    }
  }
  has_nonlinear_factor = rest.size() > 1;
  return roots;
}

bool is_nilpotent_ideal(const FiniteDimAlgebra& a, const Subspace& ideal) {
  Subspace power = ideal;
  while (power.dim() > 0) {
    std::vector<Vec> prods;
    for (size_t i = 0; i < power.dim(); ++i)
      for (size_t j = 0; j < ideal.dim(); ++j) prods.push_back(a.multiply(power.basis_vector(i), ideal.basis_vector(j)));
    Subspace next = Subspace::span(a.field(), a.dim(), prods);
    if (next.dim() >= power.dim()) return false;
    power = std::move(next);
  }
  return true;
}

Subspace radical(const FiniteDimAlgebra& a) {
  Subspace r = radical_unchecked(a);
  if (!is_nilpotent_ideal(a, r))
    throw SmallCharFallbackFailed("computed radical candidate of dimension " + std::to_string(r.dim()) +
                                  " is not nilpotent");
  if (r.dim() > 0) {
    QuotientAlgebra q = quotient_algebra(a, r);
    if (radical_unchecked(q.algebra).dim() != 0)
      throw SmallCharFallbackFailed("quotient by the radical candidate is not semisimple");
  }
  return r;
}

IdempotentSystem primitive_idempotents(const FiniteDimAlgebra& a) { return primitive_idempotents(a, radical(a)); }

IdempotentSystem primitive_idempotents(const FiniteDimAlgebra& a, const Subspace& rad, const std::vector<Vec>& coarse_in,
                                       const std::vector<std::string>& coarse_names) {
  const Field& f = a.field();
  size_t n = a.dim();
  std::vector<Vec> coarse = coarse_in;
  if (coarse.empty()) coarse.push_back(a.unit());
  IdempotentSystem sys;
  std::vector<std::string> names;
  for (size_t ci = 0; ci < coarse.size(); ++ci) {
    Corner cr = corner_algebra(a, coarse[ci]);
    std::vector<Vec> rvecs;
    for (size_t j = 0; j < rad.dim(); ++j)
      rvecs.push_back(a.multiply(a.multiply(coarse[ci], rad.basis_vector(j)), coarse[ci]));
    Subspace cspan = Subspace::span(cr.embedding);
    std::vector<Vec> rcoords;
    for (const auto& v : rvecs) rcoords.push_back(cspan.coordinates(v));
    Subspace radc = Subspace::span(f, cr.algebra.dim(), rcoords);
    auto parts = decompose_unital(cr.algebra, radc);
    std::string base = ci < coarse_names.size() ? coarse_names[ci] : "";
    for (size_t k = 0; k < parts.size(); ++k) {
      sys.idempotents.push_back(cr.embedding.apply(parts[k].first));
      if (base.empty())
        names.push_back("");
      else
        names.push_back(parts.size() == 1 ? base : base + "." + std::to_string(k + 1));
    }
  }
  size_t m = sys.idempotents.size();
  Vec total(n);
  for (const auto& e : sys.idempotents) total = add_vec(f, total, e);
  if (total != a.unit()) throw InvalidStructure("primitive idempotents do not sum to the unit");

  // Two primitive idempotents are isomorphic when e A e' is not inside the radical.
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      if (find(i) == find(j)) continue;
      for (size_t b = 0; b < n; ++b) {
        Vec v = a.multiply(a.multiply(sys.idempotents[i], unit_vec(n, b)), sys.idempotents[j]);
        if (!rad.contains(v)) {
          parent[find(j)] = find(i);
          break;
        }
      }
    }
  std::map<size_t, size_t> class_of_root;
  for (size_t i = 0; i < m; ++i) {
    size_t r = find(i);
    auto it = class_of_root.find(r);
    if (it == class_of_root.end()) {
      it = class_of_root.emplace(r, sys.representatives.size()).first;
      sys.representatives.push_back(i);
      sys.class_names.push_back(names[i].empty() ? "e" + std::to_string(sys.representatives.size()) : names[i]);
    }
    sys.iso_class.push_back(it->second);
  }
  return sys;
}

std::vector<Vec> block_idempotents(const FiniteDimAlgebra& a) {
  const Field& f = a.field();
  size_t n = a.dim();
  IdempotentSystem sys = primitive_idempotents(a);
  size_t m = sys.idempotents.size();
  std::vector<size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j || find(i) == find(j)) continue;
      for (size_t b = 0; b < n; ++b)
        if (!is_zero_vec(a.multiply(a.multiply(sys.idempotents[i], unit_vec(n, b)), sys.idempotents[j]))) {
          parent[find(j)] = find(i);
          break;
        }
    }
  std::map<size_t, Vec> blocks;
  for (size_t i = 0; i < m; ++i) {
    auto& v = blocks.try_emplace(find(i), Vec(n)).first->second;
    v = add_vec(f, v, sys.idempotents[i]);
  }
  std::vector<Vec> out;
  for (auto& [k, v] : blocks) out.push_back(std::move(v));
  return out;
}

}  // namespace koszul
