#include "koszul/ext.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/iso.hpp"

namespace koszul {

namespace {

std::optional<Vec> solve_vec(const Matrix& m, const Vec& v) {
  Matrix b(m.field(), v.size(), 1);
  b.set_column(0, v);
  auto x = solve(m, b);
  if (!x) return std::nullopt;
  return x->column(0);
}

Vec embed_generator(const MinimalResolution& r, size_t i, size_t s) {
  // Image of generator s of P^i inside P^{i-1}.
  int j = r.covers[i].cover.summands[s].shift;
  return r.embeddings[i][static_cast<size_t>(j)].basis().apply(r.covers[i].generators[s]);
}

Vec global_idempotent(const GradedAlgebra& a, size_t cls) {
  const auto& dz = a.degree_zero();
  const Vec& e0 = dz.idempotents[dz.representatives[cls]];
  Vec e(a.dim());
  std::copy(e0.begin(), e0.end(), e.begin());
  return e;
}

}  // namespace

Vec eval_from_projective(const ProjectiveModule& p, const GradedModule& n, const std::vector<Vec>& images, int t,
                         int d, const Vec& x) {
  const Field& f = n.field();
  Vec out(n.dim(d + t));
  if (out.empty() || d < 0 || d > p.module.top()) return out;
  const auto& basis = p.basis[static_cast<size_t>(d)];
  // Group the coefficients by summand so each summand costs one action.
  std::vector<Vec> comb(p.summands.size());
  for (size_t k = 0; k < basis.size(); ++k) {
    if (x[k].is_zero()) continue;
    size_t s = basis[k].first;
    if (comb[s].empty()) comb[s] = Vec(n.algebra().dim());
    axpy(f, comb[s], x[k], basis[k].second);
  }
  for (size_t s = 0; s < comb.size(); ++s) {
    if (comb[s].empty()) continue;
    int j = p.summands[s].shift;
    axpy(f, out, f.one(), n.act(comb[s], d - j, j + t, images[s]));
  }
  return out;
}

ExtComplex::ExtComplex(MinimalResolution res, GradedModule n, int bound)
    : res_(std::move(res)), n_(std::move(n)), bound_(bound) {}

std::vector<size_t> ExtComplex::layout(int i, int t) const {
  std::vector<size_t> off{0};
  if (i < 0 || static_cast<size_t>(i) >= res_.covers.size()) return off;
  for (const auto& s : res_.covers[static_cast<size_t>(i)].cover.summands) off.push_back(off.back() + n_.dim(s.shift + t));
  return off;
}

std::vector<int> ExtComplex::internal_degrees(int i) const {
  std::vector<int> out;
  if (i < 0 || static_cast<size_t>(i) >= res_.covers.size()) return out;
  const auto& sm = res_.covers[static_cast<size_t>(i)].cover.summands;
  if (sm.empty()) return out;
  int lo = 0, hi = 0;
  for (size_t k = 0; k < sm.size(); ++k) {
    lo = k ? std::min(lo, -sm[k].shift) : -sm[k].shift;
    hi = k ? std::max(hi, n_.top() - sm[k].shift) : n_.top() - sm[k].shift;
  }
  for (int t = lo; t <= hi; ++t)
    if (layout(i, t).back() > 0) out.push_back(t);
  return out;
}

Matrix ExtComplex::delta(int i, int t) const {
  auto src = layout(i, t);
  auto dst = layout(i + 1, t);
  Matrix m(n_.field(), dst.back(), src.back());
  if (dst.back() == 0 || src.back() == 0) return m;
  const auto& pi = res_.covers[static_cast<size_t>(i)].cover;
  const auto& pn = res_.covers[static_cast<size_t>(i + 1)].cover;
  const Field& f = n_.field();
  for (size_t s2 = 0; s2 < pn.summands.size(); ++s2) {
    int j2 = pn.summands[s2].shift;
    Vec w = embed_generator(res_, static_cast<size_t>(i + 1), s2);
    std::vector<Vec> comb(pi.summands.size());
    const auto& basis = pi.basis[static_cast<size_t>(j2)];
    for (size_t k = 0; k < basis.size(); ++k) {
      if (w[k].is_zero()) continue;
      size_t s = basis[k].first;
      if (comb[s].empty()) comb[s] = Vec(n_.algebra().dim());
      axpy(f, comb[s], w[k], basis[k].second);
    }
    for (size_t s = 0; s < comb.size(); ++s) {
      if (comb[s].empty()) continue;
      int j = pi.summands[s].shift;
      Matrix blk = n_.element_action(comb[s], j2 - j, j + t);
      for (size_t r = 0; r < blk.rows(); ++r)
        for (size_t c = 0; c < blk.cols(); ++c) m.at(dst[s2] + r, src[s] + c) = blk(r, c);
    }
  }
  return m;
}

const ExtGroup& ExtComplex::group(int i, int t) const {
  auto key = std::make_pair(i, t);
  auto it = groups_.find(key);
  if (it != groups_.end()) return *it->second;
  if (i > bound_) throw InvalidStructure("Ext requested beyond the computed bound");
  if (!res_.terminated && static_cast<size_t>(i + 1) >= res_.covers.size())
    throw InvalidStructure("resolution too short for Ext^" + std::to_string(i));
  auto g = std::make_unique<ExtGroup>();
  g->i = i;
  g->t = t;
  g->offsets = layout(i, t);
  const Field& f = n_.field();
  size_t amb = g->offsets.back();
  auto cochains = [&](int ii) {
    auto off = layout(ii, t);
    std::vector<Vec> cols;
    if (ii >= 0 && static_cast<size_t>(ii) < res_.covers.size()) {
      const auto& sm = res_.covers[static_cast<size_t>(ii)].cover.summands;
      for (size_t s = 0; s < sm.size(); ++s) {
        int u = sm[s].shift + t;
        if (n_.dim(u) == 0) continue;
        Matrix e = n_.element_action(global_idempotent(n_.algebra(), sm[s].cls), 0, u);
        Subspace img = Subspace::span(e);
        for (size_t k = 0; k < img.dim(); ++k) {
          Vec v(off.back());
          Vec b = img.basis_vector(k);
          std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(off[s]));
          cols.push_back(std::move(v));
        }
      }
    }
    return Matrix::from_columns(f, off.back(), cols);
  };
  Matrix c = cochains(i);
  Matrix d = delta(i, t);
  Matrix z = c.cols() == 0 ? c : c * kernel_basis(d * c);
  g->cocycles = Subspace::span(z);
  if (i > 0) {
    Matrix cp = cochains(i - 1);
    g->coboundaries = cp.cols() == 0 ? Subspace(f, amb) : Subspace::span(delta(i - 1, t) * cp);
  } else {
    g->coboundaries = Subspace(f, amb);
  }
  Subspace acc = g->coboundaries;
  std::vector<Vec> reps;
  for (size_t k = 0; k < g->cocycles.dim(); ++k) {
    Vec v = g->cocycles.basis_vector(k);
    if (acc.contains(v)) continue;
    acc = acc.sum(Subspace::span(f, amb, {v}));
    reps.push_back(std::move(v));
  }
  g->representatives = Matrix::from_columns(f, amb, reps);
  std::vector<Vec> q;
  for (const auto& r : reps) q.push_back(g->coboundaries.quotient_coordinates(r));
  g->rep_quotient = Matrix::from_columns(f, amb - g->coboundaries.dim(), q);
  auto& slot = groups_[key];
  slot = std::move(g);
  return *slot;
}

size_t ExtComplex::dim(int i) const {
  size_t s = 0;
  for (int t : internal_degrees(i)) s += group(i, t).dim();
  return s;
}

Vec ExtComplex::to_ambient(const Cochain& c) const {
  auto off = layout(c.i, c.t);
  Vec v(off.back());
  for (size_t s = 0; s + 1 < off.size(); ++s)
    std::copy(c.values[s].begin(), c.values[s].end(), v.begin() + static_cast<std::ptrdiff_t>(off[s]));
  return v;
}

Cochain ExtComplex::from_ambient(int i, int t, const Vec& v) const {
  auto off = layout(i, t);
  Cochain c{i, t, {}};
  for (size_t s = 0; s + 1 < off.size(); ++s)
    c.values.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(off[s]),
                          v.begin() + static_cast<std::ptrdiff_t>(off[s + 1]));
  return c;
}

Vec ExtComplex::class_of(const Cochain& c) const {
  const ExtGroup& g = group(c.i, c.t);
  if (g.dim() == 0) return {};
  Vec v = to_ambient(c);
  if (!g.cocycles.contains(v)) throw InvalidStructure("cochain is not a cocycle");
  auto x = solve_vec(g.rep_quotient, g.coboundaries.quotient_coordinates(v));
  if (!x) throw InvalidStructure("cocycle class not expressible in the chosen basis");
  return *x;
}

Cochain ExtComplex::representative(int i, int t, size_t k) const {
  return from_ambient(i, t, group(i, t).representatives.column(k));
}

Cochain ExtComplex::coboundary(const Cochain& c) const {
  return from_ambient(c.i + 1, c.t, delta(c.i, c.t).apply(to_ambient(c)));
}

std::vector<std::vector<Vec>> lift_cocycle(const MinimalResolution& src, const Cochain& psi,
                                           const MinimalResolution& tgt, int depth) {
  std::vector<std::vector<Vec>> f;
  int j = psi.i, t = psi.t;
  for (int k = 0; k <= depth; ++k) {
    size_t si = static_cast<size_t>(j + k);
    if (si >= src.covers.size()) break;
    const auto& ps = src.covers[si].cover;
    std::vector<Vec> images;
    bool tgt_zero = static_cast<size_t>(k) >= tgt.covers.size();
    for (size_t s = 0; s < ps.summands.size(); ++s) {
      int u = ps.summands[s].shift + t;
      Vec target;
      if (k == 0) {
        target = psi.values[s];
      } else {
        Vec y = embed_generator(src, si, s);
        const auto& prev_p = src.covers[si - 1].cover;
        const auto& prev_t = tgt.covers[static_cast<size_t>(k - 1)].cover;
        Vec z = eval_from_projective(prev_p, prev_t.module, f[static_cast<size_t>(k - 1)], t, ps.summands[s].shift, y);
        if (tgt_zero || u < 0) {
          if (!is_zero_vec(z)) throw InvalidStructure("chain lift leaves the image of the differential");
          images.emplace_back(tgt_zero ? 0 : tgt.covers[static_cast<size_t>(k)].cover.module.dim(u));
          continue;
        }
        const Subspace& emb = tgt.embeddings[static_cast<size_t>(k)][static_cast<size_t>(u)];
        if (!is_zero_vec(emb.reduce(z))) throw InvalidStructure("chain lift leaves the image of the differential");
        target = emb.coordinates(z);
      }
      if (tgt_zero) {
        if (!is_zero_vec(target)) throw InvalidStructure("chain lift into a vanishing term");
        images.emplace_back();
        continue;
      }
      const auto& cov = tgt.covers[static_cast<size_t>(k)];
      size_t pd = cov.cover.module.dim(u);
      if (u < 0 || u > cov.cover.module.top() || is_zero_vec(target)) {
        images.emplace_back(pd);
        continue;
      }
      auto x = solve_vec(cov.map.block(u), target);
      if (!x) throw InvalidStructure("cover map is not surjective in degree " + std::to_string(u));
      images.push_back(std::move(*x));
    }
    f.push_back(std::move(images));
  }
  return f;
}

Cochain compose_with_lift(const ExtComplex& phi_complex, const MinimalResolution& src, const Cochain& phi,
                          const std::vector<std::vector<Vec>>& lift, int psi_degree, int psi_t) {
  const MinimalResolution& tgt = phi_complex.resolution();
  Cochain out{psi_degree + phi.i, psi_t + phi.t, {}};
  size_t si = static_cast<size_t>(out.i);
  if (si >= src.covers.size()) return out;
  const auto& ps = src.covers[si].cover;
  const GradedModule& n = phi_complex.target();
  for (size_t s = 0; s < ps.summands.size(); ++s) {
    int u = ps.summands[s].shift + psi_t;
    if (static_cast<size_t>(phi.i) >= tgt.covers.size() || static_cast<size_t>(phi.i) >= lift.size()) {
      out.values.emplace_back(n.dim(ps.summands[s].shift + out.t));
      continue;
    }
    out.values.push_back(eval_from_projective(tgt.covers[static_cast<size_t>(phi.i)].cover, n, phi.values, phi.t, u,
                                              lift[static_cast<size_t>(phi.i)][s]));
  }
  return out;
}

Cochain yoneda(const ExtComplex& xm, const Cochain& x, const ExtComplex& yl, const Cochain& y) {
  auto lift = lift_cocycle(yl.resolution(), y, xm.resolution(), x.i);
  return compose_with_lift(xm, yl.resolution(), x, lift, y.i, y.t);
}

ExtPresentation ext_spaces(const GradedModule& m, const GradedModule& n, int bound) {
  ExtPresentation e;
  e.complex = std::make_shared<ExtComplex>(minimal_resolution(m, bound + 1), n, bound);
  const auto& r = e.complex->resolution();
  for (int i = 0; i <= bound; ++i) e.dims.push_back(e.complex->dim(i));
  if (r.terminated) e.notes.push_back("resolution terminates after " + std::to_string(r.terms()) + " terms");
  for (const auto& s : r.syzygies)
    if (s.window()) e.window = e.window ? std::min(*e.window, *s.window()) : *s.window();
  if (n.window()) e.window = e.window ? std::min(*e.window, *n.window()) : *n.window();
  return e;
}

Vec ExtAlgebra::coordinates(const Cochain& c) const {
  Vec out(basis.size());
  auto it = blocks.find({c.i, c.t});
  if (it == blocks.end()) return out;
  Vec raw = complex->class_of(c);
  if (raw.empty()) return out;
  auto x = solve_vec(it->second.change, raw);
  if (!x) throw InvalidStructure("class outside the Ext algebra basis");
  for (size_t k = 0; k < x->size(); ++k) out[it->second.first + k] = (*x)[k];
  return out;
}

namespace {

Cochain endo_cochain(const MinimalResolution& r, const ModuleMap& f) {
  Cochain c{0, 0, {}};
  const auto& cov = r.covers[0];
  for (size_t s = 0; s < cov.cover.summands.size(); ++s) {
    int j = cov.cover.summands[s].shift;
    c.values.push_back(f.block(j).apply(cov.generators[s]));
  }
  return c;
}

// Post-composition with a module endomorphism, used for products with degree 0.
Cochain post_compose(const ExtComplex& cx, const ModuleMap& f, const Cochain& x) {
  Cochain out = x;
  const auto& sm = cx.resolution().covers[static_cast<size_t>(x.i)].cover.summands;
  for (size_t s = 0; s < sm.size(); ++s) {
    int u = sm[s].shift + x.t;
    if (out.values[s].empty()) continue;
    out.values[s] = f.block(u).apply(x.values[s]);
  }
  return out;
}

Cochain combine(const Field& f, const std::vector<Cochain>& parts, const Vec& coeffs) {
  Cochain out = parts[0];
  for (auto& v : out.values) v.assign(v.size(), Scalar());
  for (size_t k = 0; k < parts.size(); ++k)
    if (!coeffs[k].is_zero())
      for (size_t s = 0; s < out.values.size(); ++s) axpy(f, out.values[s], coeffs[k], parts[k].values[s]);
  return out;
}

}  // namespace

ExtAlgebra ext_algebra(const GradedModule& m, const std::vector<EndoBasis>& degree_zero,
                       const std::vector<std::string>& object_names, const std::vector<size_t>& identities,
                       int bound) {
  const Field& f = m.field();
  ExtAlgebra g;
  g.complex = std::make_shared<ExtComplex>(minimal_resolution(m, bound + 1), m, bound);
  const ExtComplex& cx = *g.complex;
  const auto& res = cx.resolution();
  int top = bound;
  if (res.terminated) top = std::min(bound, static_cast<int>(res.terms()) - 1);

  // Degree 0 from the given endomorphisms.
  for (int t : cx.internal_degrees(0))
    if (t != 0 && cx.group(0, t).dim() > 0)
      throw InvalidStructure("module has endomorphisms of nonzero internal degree");
  size_t e0 = cx.internal_degrees(0).empty() ? 0 : cx.group(0, 0).dim();
  if (e0 != degree_zero.size())
    throw InvalidStructure("degree-0 basis has " + std::to_string(degree_zero.size()) + " elements but End has dimension " +
                           std::to_string(e0));
  std::vector<Cochain> deg0;
  std::vector<Vec> raw0;
  for (const auto& e : degree_zero) {
    deg0.push_back(endo_cochain(res, e.map));
    raw0.push_back(cx.class_of(deg0.back()));
  }
  std::vector<int> degree;
  std::vector<std::string> labels;
  std::vector<size_t> source, target;
  if (e0 > 0) {
    Matrix ch = Matrix::from_columns(f, e0, raw0);
    if (rank(ch) != e0) throw InvalidStructure("degree-0 elements are not a basis of End");
    g.blocks[{0, 0}] = {0, ch};
  }
  for (size_t k = 0; k < degree_zero.size(); ++k) {
    g.basis.push_back(deg0[k]);
    degree.push_back(0);
    labels.push_back(degree_zero[k].label);
    source.push_back(degree_zero[k].source);
    target.push_back(degree_zero[k].target);
  }

  // Lifts of basis elements, cached by basis index.
  std::map<size_t, std::vector<std::vector<Vec>>> lifts;
  auto lift_of = [&](size_t b) -> const std::vector<std::vector<Vec>>& {
    auto it = lifts.find(b);
    if (it == lifts.end()) it = lifts.emplace(b, lift_cocycle(res, g.basis[b], res, top - g.basis[b].i)).first;
    return it->second;
  };
  auto product = [&](size_t x, size_t y) {
    const Cochain& cx_ = g.basis[x];
    const Cochain& cy = g.basis[y];
    if (cx_.i == 0) return post_compose(cx, degree_zero[x].map, cy);
    return compose_with_lift(cx, res, cx_, lift_of(y), cy.i, cy.t);
  };

  bool split = !identities.empty();
  for (int h = 1; h <= top; ++h) {
    size_t counter = 0;
    for (int t : cx.internal_degrees(h)) {
      const ExtGroup& grp = cx.group(h, t);
      size_t k = grp.dim();
      if (k == 0) continue;
      std::vector<Cochain> raw;
      for (size_t q = 0; q < k; ++q) raw.push_back(cx.representative(h, t, q));
      std::vector<std::pair<Vec, std::pair<size_t, size_t>>> chosen;
      if (!split) {
        for (size_t q = 0; q < k; ++q) chosen.push_back({unit_vec(k, q), {0, 0}});
      } else {
        // Right multiplication by the identity of object y, on raw classes.
        std::vector<Matrix> right(identities.size()), left(identities.size());
        for (size_t y = 0; y < identities.size(); ++y) {
          auto lift = lift_cocycle(res, g.basis[identities[y]], res, h);
          Matrix r(f, k, k), l(f, k, k);
          for (size_t q = 0; q < k; ++q) {
            r.set_column(q, cx.class_of(compose_with_lift(cx, res, raw[q], lift, 0, 0)));
            l.set_column(q, cx.class_of(post_compose(cx, degree_zero[identities[y]].map, raw[q])));
          }
          right[y] = std::move(r);
          left[y] = std::move(l);
        }
        for (size_t x = 0; x < identities.size(); ++x)
          for (size_t y = 0; y < identities.size(); ++y) {
            Subspace img = Subspace::span(left[x] * right[y]);
            for (size_t q = 0; q < img.dim(); ++q) chosen.push_back({img.basis_vector(q), {y, x}});
          }
        if (chosen.size() != k) throw InvalidStructure("object decomposition of Ext does not add up");
      }
      std::vector<Vec> cols;
      size_t first = g.basis.size();
      for (auto& [coeffs, st] : chosen) {
        cols.push_back(coeffs);
        g.basis.push_back(combine(f, raw, coeffs));
        degree.push_back(h);
        labels.push_back("g" + std::to_string(h) + "_" + std::to_string(counter++));
        source.push_back(st.first);
        target.push_back(st.second);
      }
      g.blocks[{h, t}] = {first, Matrix::from_columns(f, k, cols)};
    }
  }

  size_t n = g.basis.size();
  GradedAlgebra::Data d;
  d.field = f;
  d.degree = degree;
  d.labels = labels;
  d.table.assign(n * n, {});
  Vec unit(n);
  if (e0 > 0) {
    // The identity endomorphism in the degree-0 basis.
    Vec id = cx.class_of(endo_cochain(res, identity_map(m)));
    auto x = solve_vec(g.blocks.at({0, 0}).change, id);
    for (size_t k = 0; k < e0; ++k) unit[k] = (*x)[k];
  }
  d.unit = unit;
  // Only the degrees actually present can be marked exact.
  bool gap = false;
  for (int h = 0; h <= top; ++h)
    if (std::find(degree.begin(), degree.end(), h) == degree.end()) {
      for (int h2 = h + 1; h2 <= top; ++h2) gap = gap || std::find(degree.begin(), degree.end(), h2) != degree.end();
    }
  d.exact = res.terminated && static_cast<int>(res.terms()) - 1 <= bound && !gap;
  d.truncation = top;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (degree[x] + degree[y] > top) continue;
      Cochain p = product(x, y);
      Vec c = g.coordinates(p);
      d.table[x * n + y] = to_sparse(c);
    }
  if (split) {
    ObjectStructure obj;
    obj.names = object_names;
    obj.identity = identities;
    obj.source = source;
    obj.target = target;
    d.objects = obj;
  }
  g.gamma = std::make_shared<const GradedAlgebra>(std::move(d));
  g.generated = Verdict::holds();
  g.generated.window = top;
  for (size_t b = g.gamma->offset(2); b < n; ++b)
    if (g.gamma->factorization(b).empty()) {
      g.generated = Verdict::fails("basis element " + labels[b] + " of degree " + std::to_string(degree[b]) +
                                       " is not in Gamma_1 times the previous component",
                                   degree[b]);
      g.generated.window = top;
      break;
    }
  if (res.terminated) g.notes.push_back("resolution terminates after " + std::to_string(res.terms()) + " terms");
  return g;
}

ExtAlgebra gamma_algebra(const AlgebraPtr& a, int bound) {
  const GradedAlgebra& alg = *a;
  const auto& dz = alg.degree_zero();
  size_t n0 = alg.dim(0);
  std::vector<EndoBasis> deg0;
  for (size_t b = 0; b < n0; ++b) {
    Matrix rho(alg.field(), n0, n0);
    for (size_t k = 0; k < n0; ++k) rho.set_column(k, dz.algebra.multiply(unit_vec(n0, k), unit_vec(n0, b)));
    EndoBasis e;
    e.label = alg.label(b);
    e.map.blocks.push_back(std::move(rho));
    if (alg.objects()) {
      e.source = alg.objects()->target[b];
      e.target = alg.objects()->source[b];
    }
    deg0.push_back(std::move(e));
  }
  std::vector<std::string> names;
  std::vector<size_t> ids;
  if (alg.objects()) {
    names = alg.objects()->names;
    ids = alg.objects()->identity;
  }
  return ext_algebra(degree_zero_module(a), deg0, names, ids, bound);
}

EModule ext_module(const ExtAlgebra& g, const GradedModule& m) {
  const GradedAlgebra& gamma = *g.gamma;
  int bound = g.complex->bound();
  EModule em;
  em.complex = std::make_shared<ExtComplex>(minimal_resolution(m, bound + 1), degree_zero_module(m.algebra_ptr()), bound);
  const ExtComplex& cx = *em.complex;
  const auto& res = cx.resolution();
  int top = bound;
  bool complete = res.terminated && static_cast<int>(res.terms()) - 1 <= bound;
  if (res.terminated) top = std::min(bound, static_cast<int>(res.terms()) - 1);
  // Raw basis per degree: classes in increasing internal degree.
  std::vector<std::map<int, size_t>> start(static_cast<size_t>(top + 1));
  std::vector<size_t> dims;
  for (int h = 0; h <= top; ++h) {
    std::vector<Cochain> b;
    for (int t : cx.internal_degrees(h)) {
      start[static_cast<size_t>(h)][t] = b.size();
      for (size_t k = 0; k < cx.group(h, t).dim(); ++k) b.push_back(cx.representative(h, t, k));
    }
    dims.push_back(b.size());
    em.basis.push_back(std::move(b));
  }
  auto coords = [&](const Cochain& c) {
    Vec out(c.i <= top ? dims[static_cast<size_t>(c.i)] : 0);
    if (out.empty()) return out;
    auto it = start[static_cast<size_t>(c.i)].find(c.t);
    if (it == start[static_cast<size_t>(c.i)].end()) return out;
    Vec raw = cx.class_of(c);
    for (size_t k = 0; k < raw.size(); ++k) out[it->second + k] = raw[k];
    return out;
  };
  std::vector<std::vector<Matrix>> action;
  for (size_t gi : gamma.generators()) {
    int gd = gamma.degree(gi);
    std::vector<Matrix> blocks;
    for (int h = 0; h <= top; ++h) {
      size_t rows = h + gd <= top ? dims[static_cast<size_t>(h + gd)] : 0;
      Matrix blk(m.field(), rows, dims[static_cast<size_t>(h)]);
      if (rows > 0)
        for (size_t k = 0; k < em.basis[static_cast<size_t>(h)].size(); ++k) {
          Cochain p = yoneda(*g.complex, g.basis[gi], cx, em.basis[static_cast<size_t>(h)][k]);
          blk.set_column(k, coords(p));
        }
      blocks.push_back(std::move(blk));
    }
    action.push_back(std::move(blocks));
  }
  std::optional<int> window;
  if (!complete) window = top;
  em.module = GradedModule(g.gamma, dims, window, std::move(action));
  return em;
}

EModule apply_e(const ExtAlgebra& g, const GradedModule& m, int bound) {
  KoszulOptions o;
  o.bound = bound;
  o.look_for_periodicity = false;
  KoszulVerdict ka = algebra_is_generalized_koszul(m.algebra_ptr(), o);
  if (!ka.verdict.ok()) throw PreconditionVerdictNotHolds("A is not generalized Koszul: " + ka.verdict.witness);
  KoszulVerdict km = is_generalized_koszul(m, o);
  if (!km.verdict.ok()) throw PreconditionVerdictNotHolds("M is not generalized Koszul: " + km.verdict.witness);
  return ext_module(g, m);
}

Verdict check_ext_generation(const ExtAlgebra& g, const GradedModule& m) {
  EModule em = ext_module(g, m);
  Verdict v = is_generated_in_degree(em.module, 0);
  if (v.failed()) v.witness = "Ext^*(M, A_0) is not generated in degree 0: " + v.witness;
  return v;
}

DualityReport check_duality_roundtrip(const AlgebraPtr& a, const GradedModule& m, int bound) {
  DualityReport rep;
  ExtAlgebra g = gamma_algebra(a, bound);
  EModule x = apply_e(g, m, bound);
  rep.gamma = g.gamma;
  if (!g.generated.ok()) {
    rep.verdict = Verdict::fails("Gamma is not generated in degrees 0 and 1: " + g.generated.witness);
    return rep;
  }
  ExtAlgebra g2 = gamma_algebra(g.gamma, bound);
  rep.gamma_dual = g2.gamma;
  EModule y = ext_module(g2, x.module);

  const GradedAlgebra& alg = *a;
  const GradedAlgebra& gam = *g.gamma;
  const Field& f = alg.field();
  const auto& ra = g.complex->resolution();
  const auto& rg = g2.complex->resolution();
  std::vector<Vec> images;
  for (size_t b : alg.generators()) {
    if (alg.degree(b) == 0) {
      images.push_back(unit_vec(g2.gamma->dim(), b));
      continue;
    }
    // a in A_1 as an element of Omega^1(A_0), lifted to P^1.
    const auto& p0 = ra.covers[0];
    size_t n1 = alg.dim(1);
    const auto& basis1 = p0.cover.basis.size() > 1 ? p0.cover.basis[1] : std::vector<std::pair<size_t, Vec>>{};
    Matrix pi(f, n1, basis1.size());
    for (size_t k = 0; k < basis1.size(); ++k) {
      Vec v(alg.dim());
      const Vec& gen = p0.generators[basis1[k].first];
      std::copy(gen.begin(), gen.end(), v.begin());
      Vec prod = alg.multiply(basis1[k].second, v);
      for (size_t r = 0; r < n1; ++r) pi.at(r, k) = prod[alg.offset(1) + r];
    }
    auto yv = solve_vec(pi, unit_vec(n1, b - alg.offset(1)));
    if (!yv) throw InvalidStructure("P^0 does not cover A in degree 1");
    Vec c = ra.embeddings[1][1].coordinates(*yv);
    auto xv = solve_vec(ra.covers[1].map.block(1), c);
    if (!xv) throw InvalidStructure("cannot lift a degree-1 element to P^1");
    // xi_k(a) for the degree-1 basis of Gamma.
    std::vector<Vec> xi;
    for (size_t k = gam.offset(1); k < gam.offset(2); ++k) {
      const Cochain& ck = g.basis[k];
      if (ck.t != -1)
        xi.push_back(Vec(alg.dim(0)));
      else
        xi.push_back(eval_from_projective(ra.covers[1].cover, g.complex->target(), ck.values, ck.t, 1, *xv));
    }
    Cochain psi{1, -1, {}};
    const auto& q1 = rg.covers.size() > 1 ? rg.covers[1] : ProjectiveCover{};
    const auto& q0 = rg.covers[0];
    for (size_t s = 0; s < q1.cover.summands.size(); ++s) {
      int j = q1.cover.summands[s].shift;
      if (j != 1) {
        psi.values.emplace_back(g2.complex->target().dim(j - 1));
        continue;
      }
      Vec w = embed_generator(rg, 1, s);
      Vec gamma1(gam.dim());
      const auto& qb = q0.cover.basis[1];
      for (size_t k = 0; k < qb.size(); ++k) {
        if (w[k].is_zero()) continue;
        Vec v(gam.dim());
        const Vec& gen = q0.generators[qb[k].first];
        std::copy(gen.begin(), gen.end(), v.begin());
        axpy(f, gamma1, w[k], gam.multiply(qb[k].second, v));
      }
      Vec value(alg.dim(0));
      for (size_t k = 0; k < xi.size(); ++k) axpy(f, value, gamma1[gam.offset(1) + k], xi[k]);
      psi.values.push_back(std::move(value));
    }
    if (!is_zero_vec(g2.complex->to_ambient(g2.complex->coboundary(psi)))) {
      rep.verdict = Verdict::fails("canonical image of " + alg.label(b) + " is not a cocycle");
      return rep;
    }
    images.push_back(g2.coordinates(psi));
  }
  GradedModule z = restrict_along(y.module, a, images);
  rep.dims_m = m.dims();
  rep.dims_ee = z.dims();
  try {
    validate_module(z);
  } catch (const InvalidStructure& e) {
    rep.verdict = Verdict::fails(std::string("pulled-back module violates the relations of A: ") + e.what());
    return rep;
  }
  IsoResult iso = graded_iso(z, m);
  rep.verdict = iso.verdict;
  if (rep.verdict.failed()) rep.verdict.witness = "E_Gamma E(M) is not isomorphic to M: " + rep.verdict.witness;
  return rep;
}

}  // namespace koszul
