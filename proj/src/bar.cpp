#include "koszul/bar.hpp"

#include <algorithm>
#include <future>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

Vec embed_degree_zero(const GradedAlgebra& a, const Vec& v) {
  Vec e(a.dim());
  std::copy(v.begin(), v.end(), e.begin());
  return e;
}

std::vector<Vec> radical_elements(const GradedAlgebra& a) {
  const Subspace& r = a.degree_zero().radical;
  std::vector<Vec> out;
  for (size_t j = 0; j < r.dim(); ++j) out.push_back(embed_degree_zero(a, r.basis_vector(j)));
  return out;
}

Matrix block_or_zero(const ModuleMap& f, int d, const Field& fld, size_t rows, size_t cols) {
  if (d < static_cast<int>(f.blocks.size())) return f.block(d);
  return Matrix(fld, rows, cols);
}

}  // namespace

BarData bar_algebra(const AlgebraPtr& ap) {
  const GradedAlgebra& a = *ap;
  const Field& f = a.field();
  BarData b;
  b.source = ap;
  b.radical = a.degree_zero().radical;

  // R_s = sum_i A_i r A_{s-i}: first r A, then A (r A).
  std::vector<Vec> right;
  for (const Vec& r : radical_elements(a))
    for (size_t c = 0; c < a.dim(); ++c) right.push_back(a.multiply(r, a.basis_vector(c)));
  Subspace ra = Subspace::span(f, a.dim(), right);
  std::vector<Vec> two_sided;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < ra.dim(); ++j) two_sided.push_back(a.multiply(a.basis_vector(i), ra.basis_vector(j)));
  b.ideal = Subspace::span(f, a.dim(), two_sided);

  b.ideal_dims.assign(static_cast<size_t>(a.top_degree() + 1), 0);
  for (size_t p : b.ideal.pivot_rows()) ++b.ideal_dims[static_cast<size_t>(a.degree(p))];
  b.representatives = b.ideal.complement_rows();

  GradedAlgebra::Data d;
  d.field = f;
  d.truncation = a.truncation();
  d.exact = a.exact();
  size_t m = b.representatives.size();
  for (size_t r : b.representatives) {
    d.degree.push_back(a.degree(r));
    d.labels.push_back(a.label(r));
  }
  d.table.resize(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      d.table[i * m + j] =
          to_sparse(b.project(to_dense(a.product(b.representatives[i], b.representatives[j]), a.dim())));
  d.unit = b.project(a.unit());
  if (a.objects()) {
    const ObjectStructure& os = *a.objects();
    ObjectStructure bs;
    bs.names = os.names;
    bool ok = true;
    for (size_t id : os.identity) {
      auto it = std::find(b.representatives.begin(), b.representatives.end(), id);
      if (it == b.representatives.end()) {
        ok = false;
        break;
      }
      bs.identity.push_back(static_cast<size_t>(it - b.representatives.begin()));
    }
    for (size_t r : b.representatives) {
      bs.source.push_back(os.source[r]);
      bs.target.push_back(os.target[r]);
    }
    if (ok) d.objects = std::move(bs);
  }
  b.bar = std::make_shared<const GradedAlgebra>(std::move(d));
  return b;
}

std::vector<Subspace> ideal_times_module(const BarData& b, const GradedModule& m) {
  const GradedAlgebra& a = *b.source;
  std::vector<std::vector<Vec>> gens(static_cast<size_t>(m.top() + 1));
  for (size_t j = 0; j < b.ideal.dim(); ++j) {
    Vec r = b.ideal.basis_vector(j);
    int s = a.degree(b.ideal.pivot_rows()[j]);
    for (int d = 0; d + s <= m.top(); ++d) {
      if (m.dim(d) == 0) continue;
      Matrix act = m.element_action(r, s, d);
      for (size_t c = 0; c < act.cols(); ++c) gens[static_cast<size_t>(d + s)].push_back(act.column(c));
    }
  }
  std::vector<Subspace> out;
  for (int d = 0; d <= m.top(); ++d) out.push_back(Subspace::span(m.field(), m.dim(d), gens[static_cast<size_t>(d)]));
  return out;
}

BarModule bar_module(const BarData& b, const GradedModule& m) {
  BarModule out;
  out.kernel = ideal_times_module(b, m);
  QuotientModule q = quotient(m, out.kernel);
  const GradedAlgebra& bar = *b.bar;
  std::vector<Vec> images;
  for (size_t g : bar.generators()) images.push_back(b.source->basis_vector(b.representatives[g]));
  out.module = restrict_along(q.module, b.bar, images);
  return out;
}

ModuleMap bar_map(const BarModule& src, const BarModule& tgt, const ModuleMap& f) {
  const Field& fld = src.module.field();
  ModuleMap out;
  for (int d = 0; d <= src.module.top(); ++d) {
    const Subspace& ks = src.kernel[static_cast<size_t>(d)];
    size_t tdim = tgt.module.dim(d);
    Matrix blk(fld, tdim, src.module.dim(d));
    if (d <= tgt.module.top()) {
      Matrix full = block_or_zero(f, d, fld, tgt.kernel[static_cast<size_t>(d)].ambient(), ks.ambient());
      auto comp = ks.complement_rows();
      for (size_t j = 0; j < comp.size(); ++j)
        blk.set_column(j, tgt.kernel[static_cast<size_t>(d)].quotient_coordinates(full.column(comp[j])));
    }
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

Verdict commutation_check(const GradedAlgebra& a) {
  const Field& f = a.field();
  std::vector<Vec> left, right;
  for (const Vec& r : radical_elements(a))
    for (size_t x = a.offset(1); x < a.offset(2); ++x) {
      left.push_back(a.multiply(r, a.basis_vector(x)));
      right.push_back(a.multiply(a.basis_vector(x), r));
    }
  Subspace ra = Subspace::span(f, a.dim(), left);
  Subspace ar = Subspace::span(f, a.dim(), right);
  for (size_t j = 0; j < ra.dim(); ++j)
    if (!ar.contains(ra.basis_vector(j)))
      return Verdict::fails("r*A_1 contains " + format_element(a, ra.basis_vector(j)) + ", which is not in A_1*r", 1);
  for (size_t j = 0; j < ar.dim(); ++j)
    if (!ra.contains(ar.basis_vector(j)))
      return Verdict::fails("A_1*r contains " + format_element(a, ar.basis_vector(j)) + ", which is not in r*A_1", 1);
  Verdict v = Verdict::holds();
  v.notes.push_back("dim r*A_1 = " + std::to_string(ra.dim()));
  return v;
}

Verdict short_exact(const GradedModule& l, const GradedModule& m, const GradedModule& n, const ModuleMap& f,
                    const ModuleMap& g) {
  const Field& fld = m.field();
  int top = std::max({l.top(), m.top(), n.top()});
  for (int d = 0; d <= top; ++d) {
    Matrix fd = block_or_zero(f, d, fld, m.dim(d), l.dim(d));
    Matrix gd = block_or_zero(g, d, fld, n.dim(d), m.dim(d));
    size_t rf = rank(fd), rg = rank(gd);
    if (rf != l.dim(d)) return Verdict::fails("first map is not injective in degree " + std::to_string(d), d);
    if (rg != n.dim(d)) return Verdict::fails("second map is not surjective in degree " + std::to_string(d), d);
    if (!(gd * fd).is_zero()) return Verdict::fails("composite is nonzero in degree " + std::to_string(d), d);
    if (rf + rg != m.dim(d))
      return Verdict::fails("image differs from kernel at the middle term in degree " + std::to_string(d), d);
  }
  return Verdict::holds();
}

CorrespondenceReport correspondence_pipeline(const AlgebraPtr& a, const std::optional<GradedModule>& m, int bound,
                                             bool strict) {
  CorrespondenceReport rep;
  BarData b = bar_algebra(a);
  rep.bar_dims = b.bar->dims();
  rep.commutation = commutation_check(*a);
  rep.algebra_projective = is_projective_over_a0(regular_module(a));
  if (m) rep.module_projective = is_projective_over_a0(*m);

  std::vector<std::string> why;
  if (!rep.commutation.ok()) why.push_back("commutation r*A_1 = A_1*r: " + rep.commutation.witness);
  if (!rep.algebra_projective.ok()) why.push_back("A projective over A_0: " + rep.algebra_projective.witness);
  if (rep.module_projective && !rep.module_projective->ok())
    why.push_back("M projective over A_0: " + rep.module_projective->witness);
  if (!why.empty()) {
    rep.refused = true;
    for (const auto& w : why) rep.refusal += (rep.refusal.empty() ? "" : "; ") + w;
    if (strict) throw PreconditionFailed(rep.refusal);
  }

  KoszulOptions opts{bound, false};
  auto gen = std::async(std::launch::async, [&] {
    return m ? is_generalized_koszul(*m, opts) : algebra_is_generalized_koszul(a, opts);
  });
  if (m)
    rep.classical = is_classical_koszul(bar_module(b, *m).module, opts);
  else
    rep.classical = algebra_is_classical_koszul(b.bar, opts);
  rep.generalized = gen.get();

  Status gs = rep.generalized.verdict.status, cs = rep.classical.verdict.status;
  rep.agreement = gs == cs;
  bool contradiction = (gs == Status::Holds && cs == Status::Fails) || (gs == Status::Fails && cs == Status::Holds);
  rep.theorem_violation = !rep.refused && contradiction;
  return rep;
}

}  // namespace koszul
