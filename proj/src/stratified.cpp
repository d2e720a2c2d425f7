#include "koszul/stratified.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "koszul/bar.hpp"
#include "koszul/errors.hpp"
#include "koszul/iso.hpp"

namespace koszul {

PartialOrder::PartialOrder(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& less)
    : names_(std::move(names)) {
  size_t n = names_.size();
  leq_.assign(n * n, false);
  for (size_t a = 0; a < n; ++a) leq_[a * n + a] = true;
  for (const auto& [lo, hi] : less) leq_[index(lo) * n + index(hi)] = true;
  for (size_t k = 0; k < n; ++k)
    for (size_t a = 0; a < n; ++a)
      if (leq_[a * n + k])
        for (size_t b = 0; b < n; ++b)
          if (leq_[k * n + b]) leq_[a * n + b] = true;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a)) throw InvalidStructure("order relations form a cycle through " + names_[a] + " and " + names_[b]);
}

PartialOrder::PartialOrder(std::vector<std::string> names) : PartialOrder(std::move(names), {}) {}

size_t PartialOrder::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InvalidStructure("unknown element " + name + " in order");
  return static_cast<size_t>(it - names_.begin());
}

std::vector<int> PartialOrder::heights() const {
  size_t n = size();
  std::vector<int> h(n, 0);
  size_t placed = 0;
  for (int level = 1; placed < n; ++level) {
    std::vector<size_t> layer;
    for (size_t a = 0; a < n; ++a) {
      if (h[a] != 0) continue;
      bool minimal = true;
      for (size_t b = 0; b < n && minimal; ++b) minimal = !(h[b] == 0 && less(b, a));
      if (minimal) layer.push_back(a);
    }
    for (size_t a : layer) h[a] = level;
    placed += layer.size();
  }
  return h;
}

namespace {

Vec global_idempotent(const GradedAlgebra& a, size_t cls) {
  const auto& dz = a.degree_zero();
  Vec e(a.dim());
  const Vec& local = dz.idempotents[dz.representatives[cls]];
  std::copy(local.begin(), local.end(), e.begin());
  return e;
}

AlgebraPtr flatten(const AlgebraPtr& a) {
  if (a->top_degree() <= 0) return a;
  if (!a->exact()) throw InvalidStructure("a truncated graded algebra cannot be viewed as finite dimensional");
  return std::make_shared<const GradedAlgebra>(concentrated_in_degree_zero(a->total_algebra(), a->objects()));
}

}  // namespace

StratifiedData standard_modules(const AlgebraPtr& input, const PartialOrder& order) {
  StratifiedData s;
  s.a = flatten(input);
  const auto& dz = s.a->degree_zero();
  if (dz.representatives.size() != dz.idempotents.size())
    throw InvalidStructure("algebra is not basic: " + std::to_string(dz.idempotents.size()) + " primitive idempotents in " +
                           std::to_string(dz.representatives.size()) + " classes");
  size_t n = dz.class_names.size();
  if (order.size() != n) throw InvalidStructure("order has " + std::to_string(order.size()) + " elements for " + std::to_string(n) + " simples");
  std::vector<std::pair<std::string, std::string>> rel;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (order.less(a, b)) rel.push_back({order.names()[a], order.names()[b]});
  for (const auto& name : order.names())
    if (std::find(dz.class_names.begin(), dz.class_names.end(), name) == dz.class_names.end())
      throw InvalidStructure("order element " + name + " is not a simple of the algebra");
  s.order = PartialOrder(dz.class_names, rel);
  s.height = s.order.heights();

  ProjectiveFactory factory(s.a);
  for (size_t l = 0; l < n; ++l) {
    GradedModule p = factory.indecomposable(l).module;
    std::vector<ModuleElement> gens;
    for (size_t mu = 0; mu < n; ++mu) {
      if (s.order.leq(mu, l)) continue;
      Vec e = global_idempotent(*s.a, mu);
      for (int d = 0; d <= p.top(); ++d) {
        Matrix act = p.element_action(e, 0, d);
        for (size_t c = 0; c < act.cols(); ++c) {
          Vec v = act.column(c);
          if (!is_zero_vec(v)) gens.push_back({d, v});
        }
      }
    }
    Submodule tr = generated_submodule(p, gens);
    s.standard.push_back(quotient(p, tr.spaces).module);
    s.kernel.push_back(std::move(tr));
    s.projective.push_back(std::move(p));
  }
  return s;
}

std::vector<size_t> composition_factors(const GradedModule& m) {
  const GradedAlgebra& a = m.algebra();
  size_t n = a.degree_zero().representatives.size();
  std::vector<size_t> out(n, 0);
  for (size_t c = 0; c < n; ++c) {
    Vec e = global_idempotent(a, c);
    for (int d = 0; d <= m.top(); ++d) out[c] += rank(m.element_action(e, 0, d));
  }
  return out;
}

namespace {

size_t total_dim(const std::vector<Subspace>& s) {
  size_t t = 0;
  for (const auto& x : s) t += x.dim();
  return t;
}

ModuleMap combine_maps(const Field& f, const std::vector<ModuleMap>& basis, const Vec& c) {
  ModuleMap out = basis.front();
  for (auto& b : out.blocks) b = Matrix(f, b.rows(), b.cols());
  for (size_t k = 0; k < basis.size(); ++k)
    if (!c[k].is_zero())
      for (size_t d = 0; d < out.blocks.size(); ++d) out.blocks[d].add_scaled(basis[k].blocks[d], c[k]);
  return out;
}

// Coefficient vectors up to scalars, first nonzero entry 1.
std::vector<Vec> projective_points(const Field& f, size_t h, size_t cap, bool& complete) {
  std::vector<Vec> out;
  int64_t q = f.is_rational() ? 3 : f.characteristic();
  complete = !f.is_rational() || h <= 1;
  auto digit = [&](int64_t v) { return f.is_rational() ? f.from_int(v - 1) : f.from_int(v); };
  for (size_t lead = 0; lead < h; ++lead) {
    size_t rest = h - lead - 1;
    std::vector<int64_t> ctr(rest, 0);
    while (true) {
      if (out.size() >= cap) {
        complete = false;
        return out;
      }
      Vec c(h);
      c[lead] = f.one();
      for (size_t k = 0; k < rest; ++k) c[lead + 1 + k] = digit(ctr[k]);
      out.push_back(std::move(c));
      size_t k = 0;
      while (k < rest && ++ctr[k] == q) ctr[k++] = 0;
      if (k == rest) break;
    }
  }
  return out;
}

struct Searcher {
  const StratifiedData& s;
  const std::vector<bool>& allowed;
  const FiltrationSearchOptions& opts;
  const Field& f;
  std::mt19937_64 rng;
  size_t explored = 0;
  bool complete = true;
  std::vector<std::vector<Subspace>> failed;
  std::vector<std::vector<Subspace>> chain;
  std::vector<size_t> factors;

  // k sits inside the original module through emb[d] (columns: basis of k_d).
  bool run(const GradedModule& k, const std::vector<Matrix>& emb) {
    std::vector<Subspace> here;
    for (const auto& e : emb) here.push_back(Subspace::span(e));
    chain.push_back(here);
    if (k.is_zero()) return true;
    if (std::find(failed.begin(), failed.end(), here) != failed.end()) {
      chain.pop_back();
      return false;
    }
    if (++explored > opts.budget) throw SearchBudgetExceeded("Delta-filtration search explored " + std::to_string(opts.budget) + " states");
    std::vector<size_t> comp = composition_factors(k);
    std::vector<size_t> tops = composition_factors(top(k));
    std::vector<size_t> order(tops.size());
    std::iota(order.begin(), order.end(), 0);
    if (opts.seed) std::shuffle(order.begin(), order.end(), rng);
    for (size_t l : order) {
      if (!allowed[l] || tops[l] == 0) continue;
      std::vector<size_t> need = composition_factors(s.standard[l]);
      bool fits = true;
      for (size_t c = 0; c < need.size(); ++c) fits = fits && need[c] <= comp[c];
      if (!fits) continue;
      const GradedModule& target = s.standard[l];
      std::vector<ModuleMap> hom = hom_space(k, target);
      if (hom.empty()) continue;
      bool all = true;
      std::vector<Vec> cands = projective_points(f, hom.size(), opts.budget, all);
      complete = complete && all;
      if (opts.seed) std::shuffle(cands.begin(), cands.end(), rng);
      std::vector<std::vector<Subspace>> tried;
      for (const Vec& c : cands) {
        ModuleMap phi = combine_maps(f, hom, c);
        if (total_dim(image(k, target, phi)) != target.total_dim()) continue;
        Submodule ker = kernel(k, target, phi);
        if (std::find(tried.begin(), tried.end(), ker.spaces) != tried.end()) continue;
        tried.push_back(ker.spaces);
        std::vector<Matrix> sub_emb;
        for (size_t d = 0; d < ker.spaces.size(); ++d) sub_emb.push_back(emb[d] * ker.spaces[d].basis());
        for (size_t d = ker.spaces.size(); d < emb.size(); ++d) sub_emb.push_back(Matrix(f, emb[d].rows(), 0));
        factors.push_back(l);
        if (run(ker.module, sub_emb)) return true;
        factors.pop_back();
        if (++explored > opts.budget)
          throw SearchBudgetExceeded("Delta-filtration search explored " + std::to_string(opts.budget) + " states");
      }
    }
    failed.push_back(here);
    chain.pop_back();
    return false;
  }
};

}  // namespace

FiltrationSearch delta_filtration_search(const GradedModule& m, const StratifiedData& s, const std::vector<bool>& allowed,
                                         const FiltrationSearchOptions& opts) {
  Searcher sr{s, allowed, opts, m.field(), std::mt19937_64(opts.seed.value_or(0)), 0, true, {}, {}, {}};
  std::vector<Matrix> emb;
  for (int d = 0; d <= m.top(); ++d) emb.push_back(Matrix::identity(m.field(), m.dim(d)));
  FiltrationSearch out;
  bool found = sr.run(m, emb);
  out.explored = sr.explored;
  if (found) {
    DeltaFiltration df;
    df.chain = std::move(sr.chain);
    df.factors = std::move(sr.factors);
    df.multiplicities.assign(s.standard.size(), 0);
    for (size_t l : df.factors) ++df.multiplicities[l];
    out.filtration = std::move(df);
  } else {
    out.exhaustive = sr.complete;
  }
  return out;
}

Verdict verify_filtration(const GradedModule& m, const StratifiedData& s, const DeltaFiltration& f) {
  if (f.chain.size() != f.factors.size() + 1) return Verdict::fails("chain length does not match the factor list");
  for (size_t k = 0; k < f.factors.size(); ++k) {
    Submodule upper = make_submodule(m, f.chain[k]);
    // chain[k+1] in the coordinates of chain[k].
    std::vector<Subspace> lower;
    for (size_t d = 0; d < f.chain[k].size(); ++d) {
      const Subspace& big = f.chain[k][d];
      const Subspace& small = f.chain[k + 1][d];
      if (!big.contains(small)) return Verdict::fails("chain is not decreasing at step " + std::to_string(k));
      std::vector<Vec> cs;
      for (size_t j = 0; j < small.dim(); ++j) cs.push_back(big.coordinates(small.basis_vector(j)));
      lower.push_back(Subspace::span(m.field(), big.dim(), cs));
    }
    if (total_dim(close_under_action(upper.module, lower)) != total_dim(lower))
      return Verdict::fails("step " + std::to_string(k + 1) + " of the chain is not a submodule");
    GradedModule factor = quotient(upper.module, lower).module;
    IsoResult r = graded_iso(factor, s.standard[f.factors[k]]);
    if (!r.verdict.ok())
      return Verdict::fails("factor " + std::to_string(k) + " is not isomorphic to Delta_" + s.order.names()[f.factors[k]]);
  }
  if (total_dim(f.chain.back()) != 0) return Verdict::fails("chain does not end at zero");
  return Verdict::holds();
}

StratificationReport is_standardly_stratified(const StratifiedData& s, const FiltrationSearchOptions& opts) {
  StratificationReport rep;
  size_t n = s.standard.size();
  const auto& names = s.order.names();
  for (size_t l = 0; l < n; ++l) {
    std::vector<size_t> comp = composition_factors(s.standard[l]);
    for (size_t mu = 0; mu < n; ++mu)
      if (comp[mu] != 0 && !s.order.leq(mu, l)) {
        rep.verdict = Verdict::fails("[Delta_" + names[l] + " : S_" + names[mu] + "] = " + std::to_string(comp[mu]) + " with " +
                                     names[mu] + " not below " + names[l]);
        return rep;
      }
  }
  for (size_t l = 0; l < n; ++l) {
    std::vector<bool> allowed(n);
    for (size_t mu = 0; mu < n; ++mu) allowed[mu] = s.order.less(l, mu);
    FiltrationSearch fs = delta_filtration_search(s.kernel[l].module, s, allowed, opts);
    if (fs.filtration) {
      // Back to the coordinates of P_l.
      DeltaFiltration df = *fs.filtration;
      for (auto& level : df.chain)
        for (size_t d = 0; d < level.size(); ++d) level[d] = Subspace::span(s.kernel[l].spaces[d].basis() * level[d].basis());
      rep.kernel_filtrations.push_back(std::move(df));
      continue;
    }
    rep.kernel_filtrations.push_back(std::nullopt);
    std::string what = "K_" + names[l] + " (dims " + dims_string(s.kernel[l].module.dims()) +
                       ") has no filtration by standard modules above " + names[l];
    Verdict v = fs.exhaustive ? Verdict::fails(what) : Verdict::inconclusive(what + " among the maps tried");
    rep.verdict = both(rep.verdict, v);
  }
  return rep;
}

std::vector<int> top_heights(const StratifiedData& s, const GradedModule& m) {
  std::vector<size_t> tops = composition_factors(top(m));
  std::set<int> hs;
  for (size_t l = 0; l < tops.size(); ++l)
    if (tops[l] != 0) hs.insert(s.height[l]);
  return {hs.begin(), hs.end()};
}

Verdict is_linearly_filtered(const StratifiedData& s, const GradedModule& m, int bound) {
  if (m.is_zero()) return Verdict::holds();
  std::vector<int> hs = top_heights(s, m);
  if (hs.size() != 1) throw NotGeneratedInSingleHeight("top of the module has simples of " + std::to_string(hs.size()) + " heights");
  int i = hs.front();
  MinimalResolution res = minimal_resolution(m, bound);
  const auto& names = s.order.names();
  for (size_t k = 0; k < res.terms(); ++k)
    for (const auto& sm : res.covers[k].cover.summands)
      if (s.height[sm.cls] != i + static_cast<int>(k))
        return Verdict::fails("Q^" + std::to_string(i + static_cast<int>(k)) + " has a summand P_" + names[sm.cls] +
                                  " of height " + std::to_string(s.height[sm.cls]),
                              i + static_cast<int>(k));
  if (!res.terminated) {
    Verdict v = Verdict::inconclusive("resolution did not terminate within " + std::to_string(bound) + " terms");
    return v;
  }
  Verdict v = Verdict::holds();
  v.notes.push_back("projective dimension " + std::to_string(res.terms() - 1));
  return v;
}

DeltaEndomorphisms delta_endomorphisms(const StratifiedData& s) {
  DeltaEndomorphisms out;
  out.delta = direct_sum(s.standard);
  const Field& f = s.a->field();
  size_t n = s.standard.size();
  std::vector<size_t> off(n + 1, 0);
  for (size_t l = 0; l < n; ++l) off[l + 1] = off[l] + s.standard[l].dim(0);
  size_t total_d = off[n];
  const auto& names = s.order.names();
  auto embed = [&](size_t src, size_t tgt, const Matrix& block) {
    Matrix big(f, total_d, total_d);
    for (size_t r = 0; r < block.rows(); ++r)
      for (size_t c = 0; c < block.cols(); ++c) big.at(off[tgt] + r, off[src] + c) = block(r, c);
    ModuleMap m;
    m.blocks.push_back(std::move(big));
    return m;
  };
  out.identities.assign(n, 0);
  for (size_t src = 0; src < n; ++src)
    for (size_t tgt = 0; tgt < n; ++tgt) {
      std::vector<ModuleMap> hom = hom_space(s.standard[src], s.standard[tgt]);
      std::vector<Matrix> chosen;
      auto flat = [](const Matrix& m) {
        Vec v;
        for (size_t r = 0; r < m.rows(); ++r)
          for (size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
        return v;
      };
      size_t cells = s.standard[src].dim(0) * s.standard[tgt].dim(0);
      Subspace span(f, cells);
      if (src == tgt && cells > 0) {
        Matrix id = Matrix::identity(f, s.standard[src].dim(0));
        chosen.push_back(id);
        span = Subspace::span(f, cells, {flat(id)});
      }
      for (const auto& h : hom) {
        if (h.blocks.empty()) continue;
        Vec v = flat(h.blocks[0]);
        if (span.contains(v)) continue;
        span = span.sum(Subspace::span(f, cells, {v}));
        chosen.push_back(h.blocks[0]);
      }
      for (size_t k = 0; k < chosen.size(); ++k) {
        EndoBasis e;
        if (src == tgt && k == 0) {
          e.label = "1_" + names[src];
          out.identities[src] = out.basis.size();
        } else {
          e.label = "phi_" + names[tgt] + names[src] + "_" + std::to_string(src == tgt ? k - 1 : k);
        }
        e.map = embed(src, tgt, chosen[k]);
        e.source = src;
        e.target = tgt;
        out.basis.push_back(std::move(e));
      }
    }
  return out;
}

Verdict delta_matches_gamma0(const DeltaEndomorphisms& d, const ExtAlgebra& g, const IsoOptions& opts) {
  const GradedAlgebra& gamma = *g.gamma;
  size_t n0 = gamma.dim(0);
  std::optional<ObjectStructure> obj;
  if (gamma.objects()) {
    obj = *gamma.objects();
    obj->source.resize(n0);
    obj->target.resize(n0);
  }
  auto g0 = std::make_shared<const GradedAlgebra>(concentrated_in_degree_zero(gamma.degree_zero_algebra(), obj));
  std::vector<std::vector<Matrix>> action;
  for (size_t k = 0; k < n0; ++k) action.push_back({d.basis[k].map.blocks[0]});
  GradedModule as_module(g0, {d.delta.dim(0)}, std::nullopt, std::move(action));
  validate_module(as_module);
  IsoResult r = graded_iso(as_module, regular_module(g0), opts);
  return r.verdict;
}

Theorem52Report theorem52_pipeline(const StratifiedData& s, int bound, bool strict) {
  Theorem52Report rep;
  const auto& names = s.order.names();
  rep.stratified = is_standardly_stratified(s).verdict;
  std::vector<std::string> missing;
  if (!rep.stratified.ok()) missing.push_back("standardly stratified: " + rep.stratified.witness);
  for (size_t l = 0; l < s.standard.size(); ++l) {
    rep.linearly_filtered.push_back(is_linearly_filtered(s, s.standard[l], bound));
    if (!rep.linearly_filtered.back().ok())
      missing.push_back("Delta_" + names[l] + " linearly filtered: " + rep.linearly_filtered.back().witness);
  }
  DeltaEndomorphisms d = delta_endomorphisms(s);
  rep.gamma = ext_algebra(d.delta, d.basis, names, d.identities, bound);
  rep.gamma_dims = rep.gamma.gamma->dims();
  rep.delta_is_gamma0 = delta_matches_gamma0(d, rep.gamma);
  if (!rep.delta_is_gamma0.ok()) missing.push_back("Delta isomorphic to Gamma_0: " + rep.delta_is_gamma0.witness);
  rep.preconditions = missing.empty();
  for (const auto& m : missing) rep.refusal += (rep.refusal.empty() ? "" : "; ") + m;
  if (strict && !rep.preconditions) throw PreconditionFailed(rep.refusal);

  const AlgebraPtr& gamma = rep.gamma.gamma;
  rep.projective = is_projective_over_a0(regular_module(gamma));
  KoszulOptions ko;
  ko.bound = bound;
  rep.generalized = algebra_is_generalized_koszul(gamma, ko);
  rep.commutation = commutation_check(*gamma);
  if (rep.commutation.ok()) {
    BarData b = bar_algebra(gamma);
    rep.bar_dims = b.bar->dims();
    rep.bar_classical = algebra_is_classical_koszul(b.bar, ko);
  }
  rep.violation = rep.preconditions && (rep.projective.failed() || rep.generalized.verdict.failed() ||
                                        (rep.bar_classical && rep.bar_classical->verdict.failed()));
  return rep;
}

}  // namespace koszul
