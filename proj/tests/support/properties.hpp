#pragma once

// Randomized property suites shared by the gtest suites and the acceptance
// binary. Each returns how many instances were drawn, how many satisfied the
// hypotheses of the statement, and the first violation found.

#include <bit>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "koszul/bar.hpp"
#include "koszul/categories.hpp"
#include "koszul/ext.hpp"
#include "koszul/stratified.hpp"
#include "support/random_instances.hpp"

namespace properties {

using namespace koszul;
using randomized::AlgebraShape;

struct Result {
  std::string name;
  size_t instances = 0;
  size_t applicable = 0;
  size_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << name << ": " << instances << " instances, " << applicable << " met the hypotheses, " << violations
       << " violations";
    if (!first_violation.empty()) os << " (first: " << first_violation << ")";
    return os.str();
  }
};

inline void violation(Result& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = what;
}

inline std::string describe(const GradedAlgebra& a, const GradedModule& m) {
  return "A " + dims_string(a.dims()) + " over " + a.field().name() + ", M " + dims_string(m.dims());
}

// Subspaces of the ambient module spanned by a submodule's own subspaces.
inline std::vector<Subspace> push_forward(const Submodule& s, const std::vector<Subspace>& inner) {
  std::vector<Subspace> out;
  for (size_t d = 0; d < s.spaces.size(); ++d)
    out.push_back(d < inner.size() ? inner[d].image(s.spaces[d].basis()) : Subspace(s.spaces[d].field(), s.spaces[d].ambient()));
  return out;
}

inline bool subspaces_equal(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
  for (size_t d = 0; d < std::max(a.size(), b.size()); ++d) {
    size_t da = d < a.size() ? a[d].dim() : 0, db = d < b.size() ? b[d].dim() : 0;
    if (da != db) return false;
    if (da > 0 && !(a[d].contains(b[d]) && b[d].contains(a[d]))) return false;
  }
  return true;
}

// Generation of the three terms of 0 -> L -> M -> M/L -> 0 in degree s.
inline Result middle_term_generation(size_t count, uint64_t seed) {
  Result r{"middle-term generation"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  for (size_t k = 0; k < count; ++k) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    GradedModule m = randomized::random_module(rng, a);
    Submodule l = randomized::random_submodule(rng, m);
    GradedModule n = quotient(m, l.spaces).module;
    ++r.instances;
    int s = std::uniform_int_distribution<int>(0, 1)(rng);
    bool gm = is_generated_in_degree(m, s).ok(), gl = is_generated_in_degree(l.module, s).ok(),
         gn = is_generated_in_degree(n, s).ok();
    if (gm || (gl && gn)) ++r.applicable;
    if (gm && !gn) violation(r, "quotient of a module generated in degree s is not: " + describe(*a, m));
    if (gl && gn && !gm) violation(r, "extension of modules generated in degree s is not: " + describe(*a, m));
    if (gm) {
      std::vector<Subspace> jm = j_multiple(m, 1).spaces, meet;
      for (size_t d = 0; d < l.spaces.size(); ++d) meet.push_back(jm[d].intersect(l.spaces[d]));
      bool criterion = subspaces_equal(meet, push_forward(l, j_multiple(l.module, 1).spaces));
      if (criterion != gl) violation(r, "J M meet L = J L does not decide generation of L: " + describe(*a, m));
    }
  }
  return r;
}

inline bool fdim_zero(const AlgebraPtr& a) { return fdim_zero_certificate(a->degree_zero_algebra()).ok(); }

inline KoszulVerdict koszul_check(const GradedModule& m, int bound) { return is_generalized_koszul(m, {bound, false}); }

inline bool conclusive(const Verdict& v) { return v.status != Status::Inconclusive; }

// With L generalized Koszul, M is generalized Koszul iff M/L is.
inline Result two_of_three(size_t count, uint64_t seed, int bound = 5) {
  Result r{"two-of-three"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  for (size_t k = 0; k < count; ++k) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    GradedModule m = randomized::random_module(rng, a);
    Submodule l = randomized::random_submodule(rng, m);
    GradedModule n = quotient(m, l.spaces).module;
    ++r.instances;
    if (!fdim_zero(a) || !koszul_check(l.module, bound + 1).verdict.ok()) continue;
    Verdict vm = koszul_check(m, bound).verdict, vn = koszul_check(n, bound).verdict;
    if (!conclusive(vm) || !conclusive(vn)) continue;
    ++r.applicable;
    if (vm.ok() != vn.ok())
      violation(r, std::string("M ") + status_name(vm.status) + " but M/L " + status_name(vn.status) + ": " + describe(*a, m));
  }
  return r;
}

// J^i M [-i] is generalized Koszul when A and M are.
inline Result truncation_closure(size_t count, uint64_t seed, int bound = 4) {
  Result r{"truncation closure"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  shape.max_vertices = 4;
  shape.max_positive_arrows = 5;
  shape.zero_relation_probability = 0.15;
  for (size_t k = 0; k < count;) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    if (!fdim_zero(a) || !algebra_is_generalized_koszul(a, {bound + 2, false}).verdict.ok()) {
      ++r.instances;
      ++k;
      continue;
    }
    for (int j = 0; j < 4 && k < count; ++j, ++k) {
      int i = std::uniform_int_distribution<int>(1, 2)(rng);
      // Modules concentrated below degree i truncate to zero; redraw a few times.
      GradedModule m = randomized::random_module(rng, a);
      for (int t = 0; t < 8 && m.top() < i; ++t) m = randomized::random_module(rng, a);
      ++r.instances;
      if (!koszul_check(m, bound + i).verdict.ok()) continue;
      GradedModule t = shift(j_multiple(m, i).module, -i);
      if (t.is_zero()) continue;
      ++r.applicable;
      Verdict v = koszul_check(t, bound).verdict;
      if (!v.ok()) violation(r, "J^" + std::to_string(i) + " M[-" + std::to_string(i) + "] is " + status_name(v.status) + ": " + describe(*a, m));
    }
  }
  return r;
}

// Generalized Koszul modules over an A that is A_0-projective are A_0-projective.
inline Result koszul_modules_are_a0_projective(size_t count, uint64_t seed, int bound = 5) {
  Result r{"A_0-projectivity of Koszul modules"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  for (size_t k = 0; k < count; ++k) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    GradedModule m = randomized::random_module(rng, a);
    ++r.instances;
    if (!fdim_zero(a) || !is_projective_over_a0(regular_module(a)).ok()) continue;
    if (!koszul_check(m, std::max(bound, m.top() + 1)).verdict.ok()) continue;
    ++r.applicable;
    if (!is_projective_over_a0(m).ok()) violation(r, "Koszul module not A_0-projective: " + describe(*a, m));
  }
  return r;
}

// M is generalized Koszul iff it is A_0-projective and Ext(M, A_0) is
// generated in degree 0 over Ext(A_0, A_0).
inline Result ext_generation_biconditional(size_t count, uint64_t seed, int bound = 4) {
  Result r{"Koszul iff A_0-projective with Ext generated in degree 0"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  shape.max_vertices = 2;
  for (size_t k = 0; k < count;) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    if (!fdim_zero(a) || !is_projective_over_a0(regular_module(a)).ok()) {
      ++r.instances;
      ++k;
      continue;
    }
    ExtAlgebra g = gamma_algebra(a, bound + 1);
    // Several modules per algebra; each is an instance.
    for (int j = 0; j < 4 && k < count; ++j, ++k) {
      GradedModule m = randomized::random_module(rng, a);
      ++r.instances;
      // The biconditional concerns modules generated in degree 0; a shifted
      // projective summand has trivially generated Ext but is not Koszul.
      if (!is_generated_in_degree(m, 0).ok()) continue;
      Verdict kv = koszul_check(m, bound).verdict;
      if (!conclusive(kv)) continue;
      Verdict gen = check_ext_generation(g, m);
      if (!conclusive(gen)) continue;
      ++r.applicable;
      bool rhs = is_projective_over_a0(m).ok() && gen.ok();
      if (kv.ok() != rhs)
        violation(r, std::string("Koszul ") + status_name(kv.status) + ", Ext generation " + status_name(gen.status) + ": " +
                         describe(*a, m));
    }
  }
  return r;
}

// M is generated in degree 0 iff M/RM is.
inline Result bar_generation(size_t count, uint64_t seed) {
  Result r{"generation correspondence under barring"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  for (size_t k = 0; k < count; ++k) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    BarData b = bar_algebra(a);
    GradedModule m = randomized::random_module(rng, a);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) m = quotient(m, randomized::random_submodule(rng, m).spaces).module;
    ++r.instances;
    ++r.applicable;
    bool gm = is_generated_in_degree(m, 0).ok();
    bool gb = is_generated_in_degree(bar_module(b, m).module, 0).ok();
    if (gm != gb) violation(r, std::string("M ") + (gm ? "is" : "is not") + " generated in degree 0 but M/RM " + (gb ? "is" : "is not") + ": " + describe(*a, m));
  }
  return r;
}

// Barring preserves exactness of sequences with A_0-projective terms when r A_1 = A_1 r.
inline Result barring_exactness(size_t count, uint64_t seed) {
  Result r{"barring exactness"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  shape.commuting_probability = 0.9;
  shape.loop_probability = 0.7;
  for (size_t k = 0; k < count; ++k) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    ++r.instances;
    if (!commutation_check(*a).ok()) continue;
    size_t c = std::uniform_int_distribution<size_t>(0, randomized::num_classes(a) - 1)(rng);
    GradedModule m = direct_sum({randomized::projective(a, c), randomized::random_module(rng, a)});
    Submodule l = randomized::random_submodule(rng, m);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      // A summand inclusion gives an A_0-projective quotient more often.
      std::vector<Subspace> sp;
      GradedModule p = randomized::projective(a, c);
      for (int d = 0; d <= m.top(); ++d) {
        std::vector<Vec> vs;
        for (size_t i = 0; i < p.dim(d); ++i) vs.push_back(unit_vec(m.dim(d), i));
        sp.push_back(Subspace::span(a->field(), m.dim(d), vs));
      }
      l = make_submodule(m, sp);
    }
    QuotientModule n = quotient(m, l.spaces);
    if (!is_projective_over_a0(l.module).ok() || !is_projective_over_a0(m).ok() || !is_projective_over_a0(n.module).ok())
      continue;
    ++r.applicable;
    BarData b = bar_algebra(a);
    BarModule lb = bar_module(b, l.module), mb = bar_module(b, m), nb = bar_module(b, n.module);
    ModuleMap f = inclusion_map(l), g = projection_map(m, n);
    Verdict v = short_exact(lb.module, mb.module, nb.module, bar_map(lb, mb, f), bar_map(mb, nb, g));
    if (!v.ok()) violation(r, v.witness + ": " + describe(*a, m));
  }
  return r;
}

// Finite EI categories: enumerated transporter and orbit categories of
// cyclic groups on families of subgroups, over several fields.
inline std::vector<std::pair<std::string, FiniteCategory>> cyclic_group_categories() {
  std::vector<std::pair<std::string, FiniteCategory>> out;
  for (size_t n = 1; n <= 12; ++n) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    std::vector<Subgroup> subs;
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) subs.push_back({"C" + std::to_string(d), g.generated({g.element(n / d == n ? "e" : (n / d == 1 ? "g" : "g^" + std::to_string(n / d)))})});
    for (size_t mask = 1; mask < (size_t{1} << subs.size()); ++mask) {
      if (std::popcount(mask) > 4) continue;
      std::vector<Subgroup> family;
      std::string label = "C" + std::to_string(n) + "{";
      for (size_t i = 0; i < subs.size(); ++i)
        if (mask >> i & 1) {
          family.push_back(subs[i]);
          label += subs[i].name + " ";
        }
      label += "}";
      out.push_back({"transporter " + label, transporter_category(g, family)});
      out.push_back({"orbit " + label, orbit_category(g, family)});
    }
  }
  return out;
}

// Category of a random finite poset on up to five elements.
inline FiniteCategory random_poset_category(std::mt19937_64& rng) {
  size_t n = std::uniform_int_distribution<size_t>(1, 5)(rng);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t x = 0; x < n; ++x) leq[x][x] = true;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) leq[x][y] = std::uniform_int_distribution<int>(0, 2)(rng) == 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y) leq[x][y] = leq[x][y] || (leq[x][k] && leq[k][y]);
  std::vector<std::string> names;
  for (size_t x = 0; x < n; ++x) names.push_back("p" + std::to_string(x));
  std::vector<Morphism> ms;
  std::vector<std::vector<size_t>> idx(n, std::vector<size_t>(n, FiniteCategory::none));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (leq[x][y]) {
        idx[x][y] = ms.size();
        ms.push_back({x, y, names[x] + "<" + names[y]});
      }
  std::vector<size_t> comp(ms.size() * ms.size(), FiniteCategory::none);
  for (size_t g = 0; g < ms.size(); ++g)
    for (size_t f = 0; f < ms.size(); ++f)
      if (ms[f].target == ms[g].source) comp[g * ms.size() + f] = idx[ms[f].source][ms[g].target];
  std::vector<size_t> ids;
  for (size_t x = 0; x < n; ++x) ids.push_back(idx[x][x]);
  return FiniteCategory(names, ms, ids, comp);
}

// |C_i| by longest factorization into unfactorizable morphisms, computed
// directly from the composition table.
inline std::vector<size_t> factorization_length_counts(const FiniteCategory& c) {
  size_t m = c.num_morphisms();
  std::vector<bool> endo(m);
  for (size_t f = 0; f < m; ++f) endo[f] = c.is_endomorphism(f);
  std::vector<int> len(m, 0);
  for (size_t f = 0; f < m; ++f)
    if (!endo[f]) len[f] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t g = 0; g < m; ++g)
      for (size_t h = 0; h < m; ++h) {
        if (endo[g] || endo[h]) continue;
        size_t f = c.compose(g, h);
        if (f == FiniteCategory::none) continue;
        if (len[g] + len[h] > len[f]) {
          len[f] = len[g] + len[h];
          changed = true;
        }
      }
  }
  std::vector<size_t> counts;
  for (int l : len) {
    if (static_cast<size_t>(l) >= counts.size()) counts.resize(static_cast<size_t>(l) + 1, 0);
    ++counts[static_cast<size_t>(l)];
  }
  return counts;
}

// dim A_i = |C_i| for the associated graded algebra of a finite EI category.
inline Result ei_dimension_identity(size_t count, uint64_t seed) {
  Result r{"dim A_i = |C_i|"};
  std::mt19937_64 rng(seed);
  static const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3)};
  std::vector<std::pair<std::string, FiniteCategory>> cats = cyclic_group_categories();
  size_t k = 0;
  auto check = [&](const std::string& label, const FiniteCategory& c, const Field& f) {
    ++r.instances;
    ++r.applicable;
    std::vector<size_t> expected = factorization_length_counts(c);
    GradedAlgebra a = associated_graded_algebra(c, f);
    if (a.dims() != expected)
      violation(r, label + " over " + f.name() + ": dims " + dims_string(a.dims()) + " vs " + dims_string(expected));
    else if (nonendomorphism_power_dims(c, f) != expected)
      violation(r, label + " over " + f.name() + ": radical powers " + dims_string(nonendomorphism_power_dims(c, f)));
  };
  for (const auto& [label, c] : cats)
    for (const auto& f : fields) {
      if (k++ >= count) return r;
      check(label, c, f);
    }
  while (k++ < count) check("poset", random_poset_category(rng), fields[k % fields.size()]);
  return r;
}

// [M : Delta_l] does not depend on the filtration: searches with different
// seeds agree, and agree with the solution of [M] = sum m_l [Delta_l].
inline Result filtration_multiplicities(size_t count, uint64_t seed) {
  Result r{"Delta-filtration multiplicities"};
  std::mt19937_64 rng(seed);
  AlgebraShape shape;
  shape.ungraded = true;
  shape.max_positive_arrows = 3;
  shape.degree_zero_arrow_probability = 0.4;
  for (size_t k = 0; k < count;) {
    auto [q, a] = randomized::random_algebra(rng, shape);
    size_t n = randomized::num_classes(a);
    std::vector<std::string> names = a->degree_zero().class_names;
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::string, std::string>> less;
    for (size_t i = 0; i + 1 < n; ++i)
      if (std::uniform_int_distribution<int>(0, 3)(rng) > 0) less.push_back({names[perm[i]], names[perm[i + 1]]});
    StratifiedData s = standard_modules(a, PartialOrder(names, less));
    std::vector<std::vector<size_t>> delta_factors;
    for (const auto& d : s.standard) delta_factors.push_back(composition_factors(d));
    std::vector<bool> all(n, true);
    for (int j = 0; j < 6 && k < count; ++j, ++k) {
      ++r.instances;
      std::vector<GradedModule> parts;
      size_t terms = std::uniform_int_distribution<size_t>(1, 2)(rng);
      for (size_t t = 0; t < terms; ++t) {
        size_t c = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
        parts.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? s.projective[c] : s.standard[c]);
      }
      GradedModule m = parts.size() == 1 ? parts[0] : direct_sum(parts);
      FiltrationSearchOptions o1, o2;
      o1.budget = o2.budget = 1500;
      o1.seed = rng();
      o2.seed = rng();
      FiltrationSearch f1, f2;
      try {
        f1 = delta_filtration_search(m, s, all, o1);
        f2 = delta_filtration_search(m, s, all, o2);
      } catch (const SearchBudgetExceeded&) {
        continue;
      }
      if (!f1.filtration || !f2.filtration) {
        if (f1.filtration.has_value() != f2.filtration.has_value() && f1.exhaustive && f2.exhaustive)
          violation(r, "exhaustive searches disagree on existence");
        continue;
      }
      ++r.applicable;
      if (f1.filtration->multiplicities != f2.filtration->multiplicities) violation(r, "two searches give different multiplicities");
      // Composition factors of M against those of the Delta_l.
      std::vector<size_t> cm = composition_factors(m), sum(n, 0);
      for (size_t l = 0; l < n; ++l)
        for (size_t c = 0; c < n; ++c) sum[c] += f1.filtration->multiplicities[l] * delta_factors[l][c];
      if (sum != cm) violation(r, "multiplicities do not reproduce the composition factors");
      if (!verify_filtration(m, s, *f1.filtration).ok()) violation(r, "filtration does not verify");
    }
  }
  return r;
}

}  // namespace properties
