#include "koszul/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"
#include "koszul/iso.hpp"

namespace koszul {

namespace {

Vec global_idempotent(const GradedAlgebra& a, size_t cls) {
  const auto& dz = a.degree_zero();
  const Vec& e0 = dz.idempotents[dz.representatives[cls]];
  Vec e(a.dim());
  std::copy(e0.begin(), e0.end(), e.begin());
  return e;
}

GradedModule windowed_zero(const AlgebraPtr& alg, std::optional<int> window) {
  std::vector<size_t> dims;
  if (window) dims.assign(static_cast<size_t>(std::max(*window + 1, 0)), 0);
  return GradedModule(alg, dims, window, std::vector<std::vector<Matrix>>(alg->generators().size()));
}

}  // namespace

ProjectiveFactory::ProjectiveFactory(AlgebraPtr alg) : alg_(std::move(alg)) {}

const Submodule& ProjectiveFactory::indecomposable(size_t cls) const {
  auto it = cache_.find(cls);
  if (it == cache_.end()) it = cache_.emplace(cls, projective_module(alg_, global_idempotent(*alg_, cls))).first;
  return it->second;
}

ProjectiveModule ProjectiveFactory::make(const std::vector<ProjectiveSummand>& summands,
                                         std::optional<int> window) const {
  const GradedAlgebra& a = *alg_;
  ProjectiveModule p;
  p.summands = summands;
  if (summands.empty()) {
    p.module = windowed_zero(alg_, window);
  } else {
    std::vector<GradedModule> parts;
    for (const auto& s : summands) parts.push_back(shift(indecomposable(s.cls).module, s.shift));
    p.module = direct_sum(parts);
    if (window) p.module = truncate_window(p.module, *window);
  }
  for (int d = 0; d <= p.module.top(); ++d) {
    std::vector<std::pair<size_t, Vec>> row;
    for (size_t s = 0; s < summands.size(); ++s) {
      int t = d - summands[s].shift;
      if (t < 0) continue;
      const Submodule& ind = indecomposable(summands[s].cls);
      if (t > ind.module.top()) continue;
      const Subspace& sp = ind.spaces[static_cast<size_t>(t)];
      for (size_t j = 0; j < sp.dim(); ++j) {
        Vec v(a.dim());
        Vec local = sp.basis_vector(j);
        std::copy(local.begin(), local.end(), v.begin() + static_cast<std::ptrdiff_t>(a.offset(t)));
        row.emplace_back(s, std::move(v));
      }
    }
    if (row.size() != p.module.dim(d)) throw InvalidStructure("projective basis bookkeeping mismatch");
    p.basis.push_back(std::move(row));
  }
  return p;
}

ModuleMap map_from_projective(const ProjectiveModule& p, const GradedModule& n, const std::vector<Vec>& images) {
  ModuleMap f;
  for (int d = 0; d <= p.module.top(); ++d) {
    Matrix blk(n.field(), n.dim(d), p.module.dim(d));
    if (blk.rows() > 0)
      for (size_t i = 0; i < p.basis[static_cast<size_t>(d)].size(); ++i) {
        const auto& [s, a] = p.basis[static_cast<size_t>(d)][i];
        int j = p.summands[s].shift;
        blk.set_column(i, n.act(a, d - j, j, images[s]));
      }
    f.blocks.push_back(std::move(blk));
  }
  return f;
}

ProjectiveCover projective_cover(const GradedModule& m, const ProjectiveFactory& factory) {
  const GradedAlgebra& a = m.algebra();
  const auto& dz = a.degree_zero();
  auto rad = graded_radical(m);
  std::vector<ProjectiveSummand> summands;
  std::vector<Vec> gens;
  for (int d = 0; d <= m.top(); ++d) {
    Subspace cur = rad[static_cast<size_t>(d)];
    if (cur.dim() == m.dim(d)) continue;
    for (size_t c = 0; c < dz.representatives.size(); ++c) {
      Matrix e = m.element_action(global_idempotent(a, c), 0, d);
      for (size_t j = 0; j < e.cols(); ++j) {
        Vec v = e.column(j);
        if (cur.contains(v)) continue;
        cur = cur.sum(Subspace::span(m.field(), m.dim(d), {v}));
        summands.push_back({c, d});
        gens.push_back(std::move(v));
      }
    }
  }
  ProjectiveCover pc;
  pc.cover = factory.make(summands, m.window());
  pc.generators = std::move(gens);
  pc.map = map_from_projective(pc.cover, m, pc.generators);
  return pc;
}

ProjectiveCover projective_cover(const GradedModule& m) {
  return projective_cover(m, ProjectiveFactory(m.algebra_ptr()));
}

Submodule syzygy(const GradedModule& m) {
  ProjectiveCover pc = projective_cover(m);
  return kernel(pc.cover.module, m, pc.map);
}

ModuleMap MinimalResolution::differential(size_t i) const {
  const GradedModule& src = covers[i].cover.module;
  const GradedModule& tgt = covers[i - 1].cover.module;
  const GradedModule& omega = syzygies[i];
  const auto& emb = embeddings[i];
  ModuleMap f;
  for (int d = 0; d <= src.top(); ++d) {
    if (d <= omega.top() && d <= tgt.top())
      f.blocks.push_back(emb[static_cast<size_t>(d)].basis() * covers[i].map.block(d));
    else
      f.blocks.emplace_back(src.field(), tgt.dim(d), src.dim(d));
  }
  return f;
}

std::string MinimalResolution::betti_string(const GradedAlgebra& a) const {
  const auto& names = a.degree_zero().class_names;
  std::ostringstream os;
  for (size_t i = 0; i < covers.size(); ++i) {
    os << "P^" << i << ":";
    if (covers[i].cover.summands.empty()) os << " 0";
    for (size_t s = 0; s < covers[i].cover.summands.size(); ++s) {
      const auto& sm = covers[i].cover.summands[s];
      os << (s ? " + " : " ") << "P_" << names[sm.cls];
      if (sm.shift != 0) os << "[" << sm.shift << "]";
    }
    os << "\n";
  }
  if (terminated) os << (terminated_in_window ? "syzygy vanishes within the window\n" : "resolution terminates\n");
  return os.str();
}

MinimalResolution minimal_resolution(const GradedModule& m, int n) {
  MinimalResolution r;
  r.target = m;
  r.syzygies.push_back(m);
  r.embeddings.emplace_back();
  ProjectiveFactory factory(m.algebra_ptr());
  for (int i = 0; i <= n; ++i) {
    const GradedModule& omega = r.syzygies.back();
    if (omega.is_zero()) {
      r.terminated = true;
      r.terminated_in_window = !omega.complete();
      break;
    }
    ProjectiveCover pc = projective_cover(omega, factory);
    Submodule k = kernel(pc.cover.module, omega, pc.map);
    r.covers.push_back(std::move(pc));
    r.syzygies.push_back(std::move(k.module));
    r.embeddings.push_back(std::move(k.spaces));
  }
  if (!r.terminated && r.syzygies.back().is_zero()) {
    r.terminated = true;
    r.terminated_in_window = !r.syzygies.back().complete();
  }
  return r;
}

namespace {

void find_periodicity(KoszulVerdict& kv) {
  const auto& syz = kv.resolution.syzygies;
  for (size_t j = 1; j < syz.size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      if (syz[i].is_zero() || syz[i].total_dim() != syz[j].total_dim() || syz[j].total_dim() > 300) continue;
      for (int s : {static_cast<int>(j - i), 0}) {
        GradedModule shifted = shift(syz[i], s);
        if (shifted.dims() != syz[j].dims()) continue;
        if (graded_iso(shifted, syz[j]).verdict.ok()) {
          std::ostringstream os;
          os << "Omega^" << j << " = Omega^" << i << "[" << s << "]";
          kv.periodicity.push_back(os.str());
          return;
        }
      }
    }
}

}  // namespace

KoszulVerdict is_generalized_koszul(const GradedModule& m, const KoszulOptions& opts) {
  KoszulVerdict kv;
  kv.bound = opts.bound;
  kv.resolution = minimal_resolution(m, opts.bound);
  const auto& syz = kv.resolution.syzygies;
  std::optional<int> window;
  for (size_t i = 0; i < syz.size() && static_cast<int>(i) <= opts.bound; ++i) {
    if (syz[i].window()) window = window ? std::min(*window, *syz[i].window()) : *syz[i].window();
    Verdict v = is_generated_in_degree(syz[i], static_cast<int>(i));
    if (v.failed()) {
      kv.verdict = Verdict::fails("Omega^" + std::to_string(i) + " is not generated in degree " + std::to_string(i) +
                                      ": " + v.witness,
                                  v.degree);
      kv.step = static_cast<int>(i);
      break;
    }
  }
  kv.verdict.window = window;
  if (kv.resolution.terminated)
    kv.verdict.notes.push_back(std::string(kv.resolution.terminated_in_window ? "syzygy vanishes within the window"
                                                                              : "resolution terminates") +
                               " after " + std::to_string(kv.resolution.terms()) + " terms");
  if (window && *window < opts.bound + 1)
    kv.verdict.notes.push_back("degree window " + std::to_string(*window) + " is below bound + 1");
  if (opts.look_for_periodicity && !kv.resolution.terminated && kv.verdict.ok()) {
    find_periodicity(kv);
    for (const auto& p : kv.periodicity) kv.verdict.notes.push_back("periodic: " + p);
  }
  return kv;
}

KoszulVerdict is_classical_koszul(const GradedModule& m, const KoszulOptions& opts) {
  if (m.algebra().degree_zero().radical.dim() != 0)
    throw DegreeZeroNotSemisimple("radical of the degree-0 part has dimension " +
                                  std::to_string(m.algebra().degree_zero().radical.dim()));
  return is_generalized_koszul(m, opts);
}

KoszulVerdict algebra_is_generalized_koszul(const AlgebraPtr& a, const KoszulOptions& opts) {
  KoszulVerdict kv = is_generalized_koszul(degree_zero_module(a), opts);
  kv.a0_projective = is_projective_over_a0(regular_module(a));
  if (kv.verdict.ok() && kv.a0_projective->failed())
    kv.verdict.notes.push_back("A is not projective over A_0 although A_0 passed: " + kv.a0_projective->witness);
  return kv;
}

KoszulVerdict algebra_is_classical_koszul(const AlgebraPtr& a, const KoszulOptions& opts) {
  return is_classical_koszul(degree_zero_module(a), opts);
}

}  // namespace koszul
