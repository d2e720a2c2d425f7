#include "koszul/algebra_iso.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "koszul/errors.hpp"
#include "koszul/structure.hpp"

namespace koszul {

namespace {

Vec path_image(const QuiverPresentation&, const GradedAlgebra& t, const Path& p, const std::vector<Vec>& vi,
               const std::vector<Vec>& ai) {
  Vec v = vi[p.vertex];
  for (size_t k = p.arrows.size(); k-- > 0;) v = t.multiply(ai[p.arrows[k]], v);
  return v;
}

Vec combination_image(const QuiverPresentation& q, const GradedAlgebra& t, const PathCombination& c,
                      const std::vector<Vec>& vi, const std::vector<Vec>& ai) {
  const Field& f = t.field();
  Vec out(t.dim());
  for (const auto& term : c) axpy(f, out, f.from_rational(term.coeff), path_image(q, t, term.path, vi, ai));
  return out;
}

bool homogeneous_of_degree(const GradedAlgebra& t, const Vec& v, int d) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && t.degree(i) != d) return false;
  return true;
}

Vec embed(const GradedAlgebra& t, const Vec& v0) {
  Vec e(t.dim());
  std::copy(v0.begin(), v0.end(), e.begin());
  return e;
}

// dims[d][y][x] = dim e_y A_d e_x.
using Cartan = std::vector<std::vector<std::vector<size_t>>>;

Subspace peirce(const GradedAlgebra& t, const Vec& ey, const Vec& ex, int d, const Subspace* within) {
  std::vector<Vec> vecs;
  if (within) {
    for (size_t j = 0; j < within->dim(); ++j) vecs.push_back(t.multiply(ey, t.multiply(within->basis_vector(j), ex)));
  } else {
    for (size_t b = t.offset(d); b < t.offset(d + 1); ++b)
      vecs.push_back(t.multiply(ey, t.multiply(t.basis_vector(b), ex)));
  }
  return Subspace::span(t.field(), t.dim(), vecs);
}

Cartan cartan(const GradedAlgebra& t, const std::vector<Vec>& idem, int window) {
  Cartan c(static_cast<size_t>(window + 1));
  for (int d = 0; d <= window; ++d) {
    c[static_cast<size_t>(d)].assign(idem.size(), std::vector<size_t>(idem.size(), 0));
    for (size_t y = 0; y < idem.size(); ++y)
      for (size_t x = 0; x < idem.size(); ++x)
        c[static_cast<size_t>(d)][y][x] = peirce(t, idem[y], idem[x], d, nullptr).dim();
  }
  return c;
}

}  // namespace

Verdict check_presentation_map(const QuiverPresentation& q, const GradedAlgebra& t,
                               const std::vector<Vec>& vi, const std::vector<Vec>& ai) {
  const Field& f = t.field();
  if (q.field != f) return Verdict::fails("presentation and target use different fields");
  if (vi.size() != q.vertices.size() || ai.size() != q.arrows.size())
    return Verdict::fails("wrong number of vertex or arrow images");
  QuiverAlgebra qa = build_quiver_algebra(q);
  const GradedAlgebra& s = qa.algebra;
  int w = std::min(s.window(), t.window());
  for (int d = 0; d <= w; ++d)
    if (s.dim(d) != t.dim(d))
      return Verdict::fails("dimension in degree " + std::to_string(d) + " is " + std::to_string(s.dim(d)) + " vs " +
                                std::to_string(t.dim(d)),
                            d);
  if (s.exact() && t.exact() && s.top_degree() != t.top_degree())
    return Verdict::fails("top degrees differ: " + std::to_string(s.top_degree()) + " vs " +
                          std::to_string(t.top_degree()));
  for (size_t v = 0; v < vi.size(); ++v)
    if (!homogeneous_of_degree(t, vi[v], 0)) return Verdict::fails("image of vertex " + q.vertices[v] + " is not in degree 0");
  for (size_t a = 0; a < ai.size(); ++a)
    if (!homogeneous_of_degree(t, ai[a], q.arrows[a].degree))
      return Verdict::fails("image of " + q.arrows[a].name + " has the wrong degree");
  for (const auto& rel : q.relations)
    if (!is_zero_vec(combination_image(q, t, rel, vi, ai))) {
      std::string text;
      for (const auto& term : rel) text += (text.empty() ? "" : " + ") + term.coeff.str() + "*" + q.path_label(term.path);
      return Verdict::fails("relation " + text + " does not map to zero");
    }

  size_t n = s.offset(w + 1);
  std::vector<Vec> col(n);
  for (size_t i = 0; i < n; ++i) col[i] = path_image(q, t, q.parse_path(s.label(i)), vi, ai);
  for (int d = 0; d <= w; ++d) {
    std::vector<Vec> part(col.begin() + static_cast<long>(s.offset(d)), col.begin() + static_cast<long>(s.offset(d + 1)));
    if (Subspace::span(f, t.dim(), part).dim() != t.dim(d))
      return Verdict::fails("map is not bijective in degree " + std::to_string(d), d);
  }
  auto apply = [&](const SparseVec& x) {
    Vec out(t.dim());
    for (const auto& [k, c] : x) axpy(f, out, c, col[k]);
    return out;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (s.degree(i) + s.degree(j) > w) continue;
      if (apply(s.product(i, j)) != t.multiply(col[i], col[j]))
        return Verdict::fails("map does not respect the product of " + s.label(i) + " and " + s.label(j));
    }
  if (apply(to_sparse(s.unit())) != t.unit())
    return Verdict::fails("unit is not preserved");
  Verdict v = Verdict::holds();
  if (!(s.exact() && t.exact())) v.window = w;
  return v;
}

PresentationMatch match_presentation(const QuiverPresentation& q, const GradedAlgebra& t,
                                     const PresentationMatchOptions& opts) {
  PresentationMatch out;
  const Field& f = t.field();
  QuiverAlgebra qa = build_quiver_algebra(q);
  const GradedAlgebra& s = qa.algebra;
  int w = std::min(s.window(), t.window());
  for (int d = 0; d <= w; ++d)
    if (s.dim(d) != t.dim(d)) {
      out.verdict = Verdict::fails("dimension in degree " + std::to_string(d) + " is " + std::to_string(s.dim(d)) +
                                       " vs " + std::to_string(t.dim(d)),
                                   d);
      return out;
    }
  if (s.exact() && t.exact() && s.top_degree() != t.top_degree()) {
    out.verdict = Verdict::fails("top degrees differ");
    return out;
  }

  const auto& dz = t.degree_zero();
  std::vector<Vec> idem;
  for (const auto& e : dz.idempotents) idem.push_back(embed(t, e));
  if (idem.size() != q.vertices.size()) {
    out.verdict = Verdict::fails("target has " + std::to_string(idem.size()) + " primitive idempotents, the quiver has " +
                                 std::to_string(q.vertices.size()) + " vertices");
    return out;
  }
  std::vector<Vec> src_idem = qa.vertex_elements;
  Cartan cs = cartan(s, src_idem, w), ct = cartan(t, idem, w);
  std::vector<Vec> rad_vecs;
  for (size_t j = 0; j < dz.radical.dim(); ++j) rad_vecs.push_back(embed(t, dz.radical.basis_vector(j)));
  Subspace rad = Subspace::span(f, t.dim(), rad_vecs);

  size_t nv = q.vertices.size(), na = q.arrows.size();
  // Relations are checked once their last arrow is assigned.
  std::vector<std::vector<size_t>> rel_at(na + 1);
  for (size_t r = 0; r < q.relations.size(); ++r) {
    size_t last = 0;
    bool any = false;
    for (const auto& term : q.relations[r])
      for (size_t a : term.path.arrows) {
        last = std::max(last, a);
        any = true;
      }
    rel_at[any ? last : na].push_back(r);
  }

  bool finite = !f.is_rational();
  bool complete = true;  // every candidate space was enumerated in full
  size_t visited = 0;
  std::mt19937_64 rng(opts.seed);

  std::vector<size_t> perm(nv, 0);
  std::vector<bool> used(nv, false);
  bool found = false;

  auto try_vertex_map = [&]() {
    std::vector<Vec> vi(nv);
    for (size_t v = 0; v < nv; ++v) vi[v] = idem[perm[v]];
    std::vector<Subspace> space(na);
    for (size_t a = 0; a < na; ++a) {
      const Arrow& ar = q.arrows[a];
      space[a] = peirce(t, vi[ar.target], vi[ar.source], ar.degree, ar.degree == 0 ? &rad : nullptr);
    }
    std::vector<bool> arrow_zero(na);
    for (size_t a = 0; a < na; ++a) arrow_zero[a] = is_zero_vec(qa.arrow_elements[a]);

    auto candidates = [&](size_t a, std::vector<Vec>& cands) {
      const Subspace& sp = space[a];
      size_t dim = sp.dim();
      cands.clear();
      if (arrow_zero[a]) {
        cands.push_back(Vec(t.dim()));
        return;
      }
      if (dim == 0) return;
      int64_t base = finite ? f.characteristic() : 3;
      size_t total = 1;
      bool small = true;
      for (size_t k = 0; k < dim; ++k) {
        total *= static_cast<size_t>(base);
        if (total > opts.budget) {
          small = false;
          break;
        }
      }
      if (!small) {
        complete = false;
        std::uniform_int_distribution<int64_t> dist(finite ? 0 : -3, finite ? f.characteristic() - 1 : 3);
        for (size_t r = 0; r < 64; ++r) {
          Vec c(t.dim());
          for (size_t k = 0; k < dim; ++k) axpy(f, c, f.from_int(dist(rng)), sp.basis_vector(k));
          if (!is_zero_vec(c)) cands.push_back(c);
        }
        return;
      }
      if (!finite) complete = false;
      std::vector<int64_t> digit(dim, 0);
      for (size_t idx = 1; idx < total; ++idx) {
        size_t x = idx;
        Vec c(t.dim());
        for (size_t k = 0; k < dim; ++k) {
          int64_t dgt = static_cast<int64_t>(x % static_cast<size_t>(base));
          x /= static_cast<size_t>(base);
          if (!finite) dgt -= 1;
          if (dgt != 0) axpy(f, c, f.from_int(dgt), sp.basis_vector(k));
        }
        if (!is_zero_vec(c)) cands.push_back(std::move(c));
      }
      // Basis vectors first: they are the likeliest images.
      std::stable_sort(cands.begin(), cands.end(), [](const Vec& x, const Vec& y) {
        auto nz = [](const Vec& v) { return std::count_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); }); };
        return nz(x) < nz(y);
      });
    };

    std::vector<std::vector<Vec>> cand(na);
    for (size_t a = 0; a < na; ++a) {
      candidates(a, cand[a]);
      if (cand[a].empty()) return;
    }
    std::vector<Vec> ai(na, Vec(t.dim()));
    auto relations_ok = [&](size_t a) {
      for (size_t r : rel_at[a])
        if (!is_zero_vec(combination_image(q, t, q.relations[r], vi, ai))) return false;
      return true;
    };
    if (!relations_ok(na)) return;
    std::function<void(size_t)> rec = [&](size_t a) {
      if (found || visited > opts.budget) return;
      if (a == na) {
        if (check_presentation_map(q, t, vi, ai).ok()) {
          found = true;
          out.vertex_images = vi;
          out.arrow_images = ai;
        }
        return;
      }
      for (const Vec& c : cand[a]) {
        ++visited;
        ai[a] = c;
        if (relations_ok(a)) rec(a + 1);
        if (found || visited > opts.budget) return;
      }
    };
    rec(0);
  };

  std::function<void(size_t)> assign = [&](size_t v) {
    if (found || visited > opts.budget) return;
    if (v == nv) {
      try_vertex_map();
      return;
    }
    for (size_t c = 0; c < nv; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (size_t u = 0; u <= v && ok; ++u)
        for (int d = 0; d <= w && ok; ++d) {
          const auto& sd = cs[static_cast<size_t>(d)];
          const auto& td = ct[static_cast<size_t>(d)];
          size_t pu = u == v ? c : perm[u];
          if (sd[v][u] != td[c][pu] || sd[u][v] != td[pu][c]) ok = false;
        }
      if (!ok) continue;
      used[c] = true;
      perm[v] = c;
      assign(v + 1);
      used[c] = false;
      if (found) return;
    }
  };
  assign(0);

  if (found) {
    out.verdict = check_presentation_map(q, t, out.vertex_images, out.arrow_images);
    return out;
  }
  if (finite && complete && visited <= opts.budget) {
    out.verdict = Verdict::fails("exhaustive search over vertex bijections and arrow images found no isomorphism");
    return out;
  }
  out.verdict = Verdict::inconclusive("no isomorphism found within the search budget");
  out.verdict.notes.push_back(std::to_string(visited) + " candidate assignments tried");
  return out;
}

}  // namespace koszul

namespace koszul {

std::vector<Vec> graded_block_idempotents(const GradedAlgebra& a) {
  const Field& f = a.field();
  const auto& dz = a.degree_zero();
  std::vector<Vec> idem;
  for (const auto& e : dz.idempotents) idem.push_back(embed(a, e));
  size_t m = idem.size();
  std::vector<size_t> parent(m);
  for (size_t i = 0; i < m; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j || find(i) == find(j)) continue;
      for (size_t b = 0; b < a.dim(); ++b)
        if (!is_zero_vec(a.multiply(idem[i], a.multiply(a.basis_vector(b), idem[j])))) {
          parent[find(j)] = find(i);
          break;
        }
    }
  std::vector<Vec> out;
  std::vector<size_t> root_pos(m, static_cast<size_t>(-1));
  for (size_t i = 0; i < m; ++i) {
    size_t r = find(i);
    if (root_pos[r] == static_cast<size_t>(-1)) {
      root_pos[r] = out.size();
      out.push_back(Vec(a.dim()));
    }
    out[root_pos[r]] = add_vec(f, out[root_pos[r]], idem[i]);
  }
  return out;
}

GradedAlgebra graded_corner(const GradedAlgebra& a, const Vec& e) {
  const Field& f = a.field();
  GradedAlgebra::Data d;
  d.field = f;
  d.truncation = a.truncation();
  d.exact = a.exact();
  std::vector<Vec> basis;
  for (int deg = 0; deg <= a.top_degree(); ++deg) {
    std::vector<Vec> vecs;
    for (size_t b = a.offset(deg); b < a.offset(deg + 1); ++b) vecs.push_back(a.multiply(e, a.multiply(a.basis_vector(b), e)));
    Subspace sp = Subspace::span(f, a.dim(), vecs);
    for (size_t k = 0; k < sp.dim(); ++k) {
      Vec v = sp.basis_vector(k);
      std::string label = format_element(a, v);
      if (label.size() > 24) label = "c" + std::to_string(deg) + "_" + std::to_string(k);
      basis.push_back(std::move(v));
      d.degree.push_back(deg);
      d.labels.push_back(std::move(label));
    }
  }
  Matrix to_basis = Matrix::from_columns(f, a.dim(), basis);
  auto coords = [&](const Vec& v) {
    auto sol = solve(to_basis, Matrix::from_columns(f, a.dim(), {v}));
    if (!sol) throw InvalidStructure("corner product leaves the corner");
    return sol->column(0);
  };
  size_t n = basis.size();
  d.table.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d.table[i * n + j] = to_sparse(coords(a.multiply(basis[i], basis[j])));
  d.unit = coords(e);
  return GradedAlgebra(std::move(d));
}

}  // namespace koszul
