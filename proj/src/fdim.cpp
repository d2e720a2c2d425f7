#include "koszul/ext.hpp"
#include "koszul/structure.hpp"

namespace koszul {

namespace {

Vec lift_to(const GradedAlgebra& a, const Vec& v0) {
  Vec v(a.dim());
  std::copy(v0.begin(), v0.end(), v.begin());
  return v;
}

std::vector<Subspace> socle(const GradedModule& m) {
  const GradedAlgebra& a = m.algebra();
  const auto& rad = a.degree_zero().radical;
  std::vector<Subspace> out;
  for (int d = 0; d <= m.top(); ++d) {
    Subspace s = Subspace::whole(m.field(), m.dim(d));
    for (size_t r = 0; r < rad.dim(); ++r)
      s = s.intersect(Subspace::span(kernel_basis(m.element_action(lift_to(a, rad.basis_vector(r)), 0, d))));
    out.push_back(std::move(s));
  }
  return out;
}

// Classes of the (simple) socles of the indecomposable projectives, or empty
// when some socle is not simple or two socles coincide.
std::vector<size_t> nakayama_permutation(const AlgebraPtr& a) {
  ProjectiveFactory f(a);
  size_t n = a->degree_zero().representatives.size();
  std::vector<size_t> perm;
  std::vector<bool> seen(n, false);
  for (size_t c = 0; c < n; ++c) {
    const GradedModule& p = f.indecomposable(c).module;
    GradedModule soc = make_submodule(p, socle(p)).module;
    ProjectiveCover pc = projective_cover(soc, f);
    if (pc.cover.summands.size() != 1) return {};
    size_t k = pc.cover.summands[0].cls;
    if (seen[k]) return {};
    seen[k] = true;
    perm.push_back(k);
  }
  return perm;
}

}  // namespace

Verdict fdim_zero_certificate(const FiniteDimAlgebra& a0, int search_bound) {
  auto a = std::make_shared<const GradedAlgebra>(concentrated_in_degree_zero(a0, std::nullopt));
  const auto& dz = a->degree_zero();
  Verdict v;
  if (dz.radical.dim() == 0) {
    v.notes.push_back("semisimple");
    return v;
  }
  std::vector<Vec> blocks = block_idempotents(a0);
  bool all_local = true;
  for (const auto& b : blocks) {
    std::vector<bool> cls(dz.representatives.size(), false);
    size_t count = 0;
    for (size_t i = 0; i < dz.idempotents.size(); ++i) {
      if (is_zero_vec(a0.multiply(dz.idempotents[i], b))) continue;
      if (!cls[dz.iso_class[i]]) ++count;
      cls[dz.iso_class[i]] = true;
    }
    all_local = all_local && count == 1;
  }
  if (all_local) {
    v.notes.push_back("every block has a single simple module");
    return v;
  }
  auto op = std::make_shared<const GradedAlgebra>(opposite(*a));
  if (!nakayama_permutation(a).empty() && !nakayama_permutation(op).empty()) {
    v.notes.push_back("self-injective: projectives have simple socles permuted by the Nakayama permutation");
    return v;
  }
  // Look for a module of finite nonzero projective dimension among the
  // quotients P_c / A x with x in the radical of P_c.
  ProjectiveFactory fac(a);
  for (size_t c = 0; c < dz.representatives.size(); ++c) {
    GradedModule p = fac.indecomposable(c).module;
    std::vector<GradedModule> candidates = {top(p)};
    for (size_t k = 0; k < p.dim(0); ++k) {
      Vec x = unit_vec(p.dim(0), k);
      Submodule s = generated_submodule(p, {{0, x}});
      if (s.module.total_dim() == p.total_dim() || s.module.is_zero()) continue;
      candidates.push_back(quotient(p, s.spaces).module);
    }
    for (const auto& m : candidates) {
      MinimalResolution r = minimal_resolution(m, search_bound);
      if (r.terminated && r.terms() >= 2) {
        Verdict fv = Verdict::fails("a quotient of P_" + dz.class_names[c] + " of dimension " +
                                    std::to_string(m.total_dim()) + " has projective dimension " +
                                    std::to_string(r.terms() - 1));
        return fv;
      }
    }
  }
  return Verdict::inconclusive("no certificate for finitistic dimension 0 and no counterexample up to projective "
                               "dimension " +
                               std::to_string(search_bound));
}

}  // namespace koszul
