#include "koszul/categories.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "koszul/errors.hpp"

namespace koszul {

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(std::vector<size_t> table, std::vector<std::string> names) : table_(std::move(table)) {
  n_ = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(table_.size()))));
  if (n_ == 0 || n_ * n_ != table_.size()) throw InvalidStructure("Cayley table is not square");
  for (size_t x : table_)
    if (x >= n_) throw InvalidStructure("Cayley table entry out of range");
  bool found = false;
  for (size_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (size_t a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      id_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidStructure("Cayley table has no identity");
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = 0; b < n_; ++b)
      for (size_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidStructure("Cayley table is not associative");
  inv_.assign(n_, n_);
  for (size_t a = 0; a < n_; ++a)
    for (size_t b = 0; b < n_; ++b)
      if (mul(a, b) == id_) inv_[a] = b;
  for (size_t a = 0; a < n_; ++a)
    if (inv_[a] == n_ || mul(inv_[a], a) != id_) throw InvalidStructure("element without inverse");
  if (names.empty()) {
    for (size_t a = 0; a < n_; ++a) names.push_back(std::to_string(a));
  }
  if (names.size() != n_) throw InvalidStructure("wrong number of element names");
  names_ = std::move(names);
}

FiniteGroup FiniteGroup::cyclic(size_t n) {
  std::vector<size_t> t(n * n);
  std::vector<std::string> names;
  for (size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<size_t>>& gens) {
  if (gens.empty()) throw InvalidStructure("no generators");
  size_t deg = gens[0].size();
  using Perm = std::vector<size_t>;
  for (const Perm& p : gens) {
    if (p.size() != deg) throw InvalidStructure("generators act on different sets");
    Perm s = p;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < deg; ++i)
      if (s[i] != i) throw InvalidStructure("generator is not a permutation");
  }
  Perm id(deg);
  for (size_t i = 0; i < deg; ++i) id[i] = i;
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm c(deg);
    for (size_t i = 0; i < deg; ++i) c[i] = a[b[i]];
    return c;
  };
  std::map<Perm, size_t> index{{id, 0}};
  std::vector<Perm> elems{id};
  for (size_t k = 0; k < elems.size(); ++k)
    for (const Perm& g : gens) {
      Perm c = compose(g, elems[k]);
      if (index.emplace(c, elems.size()).second) elems.push_back(c);
    }
  size_t n = elems.size();
  std::vector<size_t> t(n * n);
  std::vector<std::string> names;
  for (size_t a = 0; a < n; ++a) {
    std::string s = "[";
    for (size_t i = 0; i < deg; ++i) s += (i ? " " : "") + std::to_string(elems[a][i]);
    names.push_back(s + "]");
    for (size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(size_t n) {
  if (n <= 1) return from_permutations({std::vector<size_t>(n, 0)});
  std::vector<size_t> swap(n), cycle(n);
  for (size_t i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  return from_permutations({swap, cycle});
}

FiniteGroup FiniteGroup::dihedral(size_t n) {
  std::vector<size_t> rot(n), ref(n);
  for (size_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return from_permutations({rot, ref});
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
  size_t n = g.order() * h.order();
  std::vector<size_t> t(n * n);
  std::vector<std::string> names;
  for (size_t a = 0; a < n; ++a) {
    names.push_back("(" + g.name(a / h.order()) + "," + h.name(a % h.order()) + ")");
    for (size_t b = 0; b < n; ++b)
      t[a * n + b] = g.mul(a / h.order(), b / h.order()) * h.order() + h.mul(a % h.order(), b % h.order());
  }
  return FiniteGroup(std::move(t), std::move(names));
}

size_t FiniteGroup::element(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw SchemaError("unknown group element '" + name + "'");
  return static_cast<size_t>(it - names_.begin());
}

std::vector<size_t> FiniteGroup::generated(const std::vector<size_t>& gens) const {
  std::set<size_t> s{id_};
  std::deque<size_t> todo{id_};
  while (!todo.empty()) {
    size_t x = todo.front();
    todo.pop_front();
    for (size_t g : gens)
      if (s.insert(mul(g, x)).second) todo.push_back(mul(g, x));
  }
  return {s.begin(), s.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<size_t>& s) const {
  if (s.empty()) return false;
  std::set<size_t> set(s.begin(), s.end());
  for (size_t a : s) {
    if (a >= n_) return false;
    for (size_t b : s)
      if (!set.count(mul(a, inv(b)))) return false;
  }
  return true;
}

// -------------------------------------------------------------- categories

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<size_t> identities, std::vector<size_t> composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  size_t n = morphisms_.size(), no = objects_.size();
  if (identities_.size() != no || composition_.size() != n * n)
    throw InvalidStructure("category data has inconsistent sizes");
  hom_.assign(no * no, {});
  for (size_t f = 0; f < n; ++f) {
    if (morphisms_[f].source >= no || morphisms_[f].target >= no) throw InvalidStructure("morphism with unknown object");
    hom_[morphisms_[f].source * no + morphisms_[f].target].push_back(f);
  }
  for (size_t g = 0; g < n; ++g)
    for (size_t f = 0; f < n; ++f) {
      size_t h = compose(g, f);
      bool composable = morphisms_[f].target == morphisms_[g].source;
      if (composable != (h != none)) throw InvalidStructure("composition defined exactly on composable pairs is required");
      if (h != none && (morphisms_[h].source != morphisms_[f].source || morphisms_[h].target != morphisms_[g].target))
        throw InvalidStructure("composite has the wrong endpoints");
    }
  for (size_t x = 0; x < no; ++x) {
    size_t id = identities_[x];
    if (id >= n || morphisms_[id].source != x || morphisms_[id].target != x)
      throw InvalidStructure("identity of " + objects_[x] + " is not an endomorphism of it");
  }
  for (size_t f = 0; f < n; ++f) {
    if (compose(identities_[morphisms_[f].target], f) != f || compose(f, identities_[morphisms_[f].source]) != f)
      throw InvalidStructure("identity law fails for " + morphisms_[f].label);
  }
  for (size_t f = 0; f < n; ++f)
    for (size_t z = 0; z < no; ++z)
      for (size_t g : hom(morphisms_[f].target, z)) {
        size_t gf = compose(g, f);
        for (size_t w = 0; w < no; ++w)
          for (size_t h : hom(z, w))
            if (compose(h, gf) != compose(compose(h, g), f)) throw InvalidStructure("composition is not associative");
      }
}

Verdict is_ei(const FiniteCategory& c) {
  for (size_t x = 0; x < c.num_objects(); ++x) {
    const auto& end = c.hom(x, x);
    for (size_t f : end) {
      bool inv = false;
      for (size_t g : end)
        if (c.compose(g, f) == c.identity(x)) inv = true;
      if (!inv) return Verdict::fails("endomorphism " + c.morphism(f).label + " is not invertible");
    }
  }
  return Verdict::holds();
}

Verdict has_free_actions(const FiniteCategory& c) {
  for (size_t x = 0; x < c.num_objects(); ++x)
    for (size_t y = 0; y < c.num_objects(); ++y)
      for (size_t f : c.hom(x, y))
        for (size_t g : c.hom(y, y))
          if (g != c.identity(y) && c.compose(g, f) == f)
            return Verdict::fails(c.morphism(g).label + " fixes " + c.morphism(f).label);
  return Verdict::holds();
}

namespace {

void check_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  for (const auto& s : subs)
    if (!g.is_subgroup(s.elements)) throw NotASubgroup(s.name + " is not a subgroup");
}

bool conjugate_inside(const FiniteGroup& g, size_t x, const std::vector<size_t>& h, const std::vector<size_t>& k) {
  std::set<size_t> ks(k.begin(), k.end());
  for (size_t e : h)
    if (!ks.count(g.mul(g.mul(x, e), g.inv(x)))) return false;
  return true;
}

}  // namespace

FiniteCategory transporter_category(const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  check_subgroups(g, subs);
  size_t no = subs.size();
  std::vector<std::string> objects;
  for (const auto& s : subs) objects.push_back(s.name);
  std::vector<Morphism> morphs;
  // index[(H, K)][x] = morphism id or none
  std::vector<std::vector<size_t>> index(no * no, std::vector<size_t>(g.order(), FiniteCategory::none));
  for (size_t h = 0; h < no; ++h)
    for (size_t k = 0; k < no; ++k)
      for (size_t x = 0; x < g.order(); ++x)
        if (conjugate_inside(g, x, subs[h].elements, subs[k].elements)) {
          index[h * no + k][x] = morphs.size();
          morphs.push_back({h, k, g.name(x) + ":" + subs[h].name + "->" + subs[k].name});
        }
  std::vector<size_t> elem(morphs.size());
  for (size_t p = 0; p < no * no; ++p)
    for (size_t x = 0; x < g.order(); ++x)
      if (index[p][x] != FiniteCategory::none) elem[index[p][x]] = x;
  size_t n = morphs.size();
  std::vector<size_t> comp(n * n, FiniteCategory::none);
  for (size_t b = 0; b < n; ++b)
    for (size_t a = 0; a < n; ++a)
      if (morphs[a].target == morphs[b].source)
        comp[b * n + a] = index[morphs[a].source * no + morphs[b].target][g.mul(elem[b], elem[a])];
  std::vector<size_t> ids;
  for (size_t h = 0; h < no; ++h) ids.push_back(index[h * no + h][g.identity()]);
  return FiniteCategory(std::move(objects), std::move(morphs), std::move(ids), std::move(comp));
}

FiniteCategory orbit_category(const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  check_subgroups(g, subs);
  size_t no = subs.size();
  auto coset_rep = [&](size_t x, const std::vector<size_t>& k) {
    size_t best = g.order();
    for (size_t e : k) best = std::min(best, g.mul(x, e));
    return best;
  };
  std::vector<std::string> objects;
  for (const auto& s : subs) objects.push_back("G/" + s.name);
  std::vector<Morphism> morphs;
  std::vector<std::vector<size_t>> index(no * no, std::vector<size_t>(g.order(), FiniteCategory::none));
  std::vector<size_t> rep;
  for (size_t h = 0; h < no; ++h)
    for (size_t k = 0; k < no; ++k)
      for (size_t x = 0; x < g.order(); ++x) {
        if (coset_rep(x, subs[k].elements) != x) continue;
        // H lies in x K x^-1 exactly when x^-1 H x lies in K.
        if (!conjugate_inside(g, g.inv(x), subs[h].elements, subs[k].elements)) continue;
        index[h * no + k][x] = morphs.size();
        rep.push_back(x);
        morphs.push_back({h, k, g.name(x) + subs[k].name + ":G/" + subs[h].name + "->G/" + subs[k].name});
      }
  size_t n = morphs.size();
  std::vector<size_t> comp(n * n, FiniteCategory::none);
  for (size_t b = 0; b < n; ++b)
    for (size_t a = 0; a < n; ++a)
      if (morphs[a].target == morphs[b].source) {
        size_t l = morphs[b].target;
        size_t r = coset_rep(g.mul(rep[a], rep[b]), subs[l].elements);
        comp[b * n + a] = index[morphs[a].source * no + l][r];
      }
  std::vector<size_t> ids;
  for (size_t h = 0; h < no; ++h) ids.push_back(index[h * no + h][coset_rep(g.identity(), subs[h].elements)]);
  return FiniteCategory(std::move(objects), std::move(morphs), std::move(ids), std::move(comp));
}

size_t count_equivariant_maps(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  auto cosets = [&](const std::vector<size_t>& s) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> which(g.order(), static_cast<size_t>(-1));
    for (size_t x = 0; x < g.order(); ++x) {
      if (which[x] != static_cast<size_t>(-1)) continue;
      std::vector<size_t> c;
      for (size_t e : s) c.push_back(g.mul(x, e));
      std::sort(c.begin(), c.end());
      for (size_t y : c) which[y] = out.size();
      out.push_back(c);
    }
    return std::make_pair(out, which);
  };
  auto [ch, wh] = cosets(h.elements);
  auto [ck, wk] = cosets(k.elements);
  // act[x][c] = coset containing x * c.
  auto act = [&](size_t x, const std::vector<std::vector<size_t>>& cs, const std::vector<size_t>& w, size_t c) {
    return w[g.mul(x, cs[c][0])];
  };
  std::vector<size_t> img(ch.size(), static_cast<size_t>(-1));
  size_t count = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == ch.size()) {
      ++count;
      return;
    }
    for (size_t t = 0; t < ck.size(); ++t) {
      img[i] = t;
      bool ok = true;
      for (size_t x = 0; x < g.order() && ok; ++x)
        for (size_t c = 0; c <= i && ok; ++c) {
          size_t xc = act(x, ch, wh, c);
          if (xc > i) continue;
          ok = img[xc] == act(x, ck, wk, img[c]);
        }
      if (ok) rec(i + 1);
    }
    img[i] = static_cast<size_t>(-1);
  };
  rec(0);
  return count;
}

// ------------------------------------------------------------------ grading

EIGrading ei_grading(const FiniteCategory& c) {
  Verdict ei = is_ei(c);
  if (!ei.ok()) throw NotEI(ei.witness);
  size_t n = c.num_morphisms();
  for (size_t f = 0; f < n; ++f) {
    if (c.is_endomorphism(f)) continue;
    const Morphism& m = c.morphism(f);
    for (size_t g : c.hom(m.target, m.source))
      if (c.compose(g, f) == c.identity(m.source))
        throw NotEI("objects " + c.objects()[m.source] + " and " + c.objects()[m.target] +
                    " are isomorphic; keep one object per isomorphism class");
  }
  EIGrading gr;
  gr.degree.assign(n, 0);
  for (size_t f = 0; f < n; ++f)
    if (!c.is_endomorphism(f)) gr.degree[f] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t g = 0; g < n; ++g) {
      if (c.is_endomorphism(g)) continue;
      for (size_t f = 0; f < n; ++f) {
        if (c.is_endomorphism(f)) continue;
        size_t h = c.compose(g, f);
        if (h == FiniteCategory::none) continue;
        if (c.is_endomorphism(h)) throw NotEI("a composite of non-endomorphisms is an endomorphism");
        int cand = gr.degree[g] + gr.degree[f];
        if (cand > gr.degree[h]) {
          if (cand > static_cast<int>(c.num_objects())) throw NotEI("factorization lengths are unbounded");
          gr.degree[h] = cand;
          changed = true;
        }
      }
    }
  }
  int top = *std::max_element(gr.degree.begin(), gr.degree.end());
  gr.classes.assign(static_cast<size_t>(top + 1), {});
  for (size_t f = 0; f < n; ++f) gr.classes[static_cast<size_t>(gr.degree[f])].push_back(f);
  for (size_t f = 0; f < n; ++f)
    for (size_t e = 0; e < n; ++e) {
      if (!c.is_endomorphism(e)) continue;
      size_t l = c.compose(e, f), r = c.compose(f, e);
      if ((l != FiniteCategory::none && gr.degree[l] != gr.degree[f]) ||
          (r != FiniteCategory::none && gr.degree[r] != gr.degree[f]))
        throw NotEI("the grading is not stable under endomorphisms at " + c.morphism(f).label);
    }
  return gr;
}

GradedAlgebra associated_graded_algebra(const FiniteCategory& c, const Field& f, const EIGrading& gr) {
  size_t n = c.num_morphisms();
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return gr.degree[a] < gr.degree[b]; });
  std::vector<size_t> pos(n);
  for (size_t i = 0; i < n; ++i) pos[order[i]] = i;
  GradedAlgebra::Data d;
  d.field = f;
  d.exact = true;
  d.truncation = static_cast<int>(gr.classes.size()) - 1;
  ObjectStructure obj;
  obj.names = c.objects();
  for (size_t x = 0; x < c.num_objects(); ++x) obj.identity.push_back(pos[c.identity(x)]);
  for (size_t i = 0; i < n; ++i) {
    const Morphism& m = c.morphism(order[i]);
    d.degree.push_back(gr.degree[order[i]]);
    d.labels.push_back(m.label);
    obj.source.push_back(m.source);
    obj.target.push_back(m.target);
  }
  d.table.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t h = c.compose(order[i], order[j]);
      if (h == FiniteCategory::none || gr.degree[h] != gr.degree[order[i]] + gr.degree[order[j]]) continue;
      d.table[i * n + j] = {{static_cast<uint32_t>(pos[h]), f.one()}};
    }
  d.unit.assign(n, Scalar());
  for (size_t x = 0; x < c.num_objects(); ++x) d.unit[pos[c.identity(x)]] = f.one();
  d.objects = std::move(obj);
  return GradedAlgebra(std::move(d));
}

GradedAlgebra associated_graded_algebra(const FiniteCategory& c, const Field& f) {
  return associated_graded_algebra(c, f, ei_grading(c));
}

FiniteDimAlgebra category_algebra(const FiniteCategory& c, const Field& f) {
  size_t n = c.num_morphisms();
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back(c.morphism(i).label);
  std::vector<SparseVec> t(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t h = c.compose(i, j);
      if (h != FiniteCategory::none) t[i * n + j] = {{static_cast<uint32_t>(h), f.one()}};
    }
  Vec unit(n);
  for (size_t x = 0; x < c.num_objects(); ++x) unit[c.identity(x)] = f.one();
  return FiniteDimAlgebra(f, std::move(labels), std::move(t), std::move(unit));
}

std::vector<size_t> nonendomorphism_power_dims(const FiniteCategory& c, const Field& f) {
  FiniteDimAlgebra kc = category_algebra(c, f);
  size_t n = kc.dim();
  std::vector<Vec> jv;
  for (size_t i = 0; i < n; ++i)
    if (!c.is_endomorphism(i)) jv.push_back(unit_vec(n, i));
  Subspace j = Subspace::span(f, n, jv);
  std::vector<size_t> out{n - j.dim()};
  Subspace power = j;
  while (power.dim() > 0) {
    std::vector<Vec> next;
    for (size_t a = 0; a < power.dim(); ++a)
      for (const Vec& b : jv) next.push_back(kc.multiply(power.basis_vector(a), b));
    Subspace np = Subspace::span(f, n, next);
    out.push_back(power.dim() - np.dim());
    power = np;
  }
  return out;
}

Verdict quotient_is_directed(const GradedAlgebra& bar) {
  const auto& dz = bar.degree_zero();
  if (dz.radical.dim() != 0) return Verdict::fails("degree-zero part is not semisimple");
  std::vector<Vec> idem;
  for (const auto& e : dz.idempotents) {
    Vec v(bar.dim());
    std::copy(e.begin(), e.end(), v.begin());
    idem.push_back(v);
  }
  size_t m = idem.size();
  auto corner_dim = [&](size_t i, size_t j) {
    std::vector<Vec> vecs;
    for (size_t b = 0; b < bar.dim(); ++b) vecs.push_back(bar.multiply(idem[i], bar.multiply(bar.basis_vector(b), idem[j])));
    return Subspace::span(bar.field(), bar.dim(), vecs).dim();
  };
  std::vector<std::vector<bool>> edge(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i) {
    size_t e = corner_dim(i, i);
    if (e != 1)
      return Verdict::fails("End(Q_" + std::to_string(i) + ") has dimension " + std::to_string(e));
    for (size_t j = 0; j < m; ++j)
      if (i != j && corner_dim(i, j) != 0) edge[i][j] = true;
  }
  // Kahn's algorithm on Hom(Q_i, Q_j) != 0.
  std::vector<size_t> indeg(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (edge[i][j]) ++indeg[j];
  std::vector<size_t> ready, order;
  for (size_t i = 0; i < m; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    size_t i = ready.back();
    ready.pop_back();
    order.push_back(i);
    for (size_t j = 0; j < m; ++j)
      if (edge[i][j] && --indeg[j] == 0) ready.push_back(j);
  }
  if (order.size() != m) return Verdict::fails("nonzero homomorphisms between projectives form a cycle");
  Verdict v = Verdict::holds();
  std::string s;
  for (size_t i : order) s += (s.empty() ? "" : " ") + std::to_string(i);
  v.notes.push_back("projective order: " + s);
  return v;
}

// ---------------------------------------------------------------- B and 4.2

BSubalgebra build_b_subalgebra(const AlgebraPtr& ap) {
  const GradedAlgebra& a = *ap;
  if (!a.objects()) throw NotDirected("the algebra carries no object data");
  const ObjectStructure& os = *a.objects();
  size_t no = os.names.size();
  std::vector<std::vector<bool>> edge(no, std::vector<bool>(no, false));
  std::vector<bool> is_identity(a.dim(), false);
  for (size_t id : os.identity) is_identity[id] = true;
  for (size_t i = 0; i < a.dim(); ++i) {
    bool endo = os.source[i] == os.target[i];
    if (endo && a.degree(i) != 0) throw NotDirected("endomorphism " + a.label(i) + " has positive degree");
    if (!endo && a.degree(i) == 0) throw NotDirected(a.label(i) + " is a degree-0 morphism between distinct objects");
    if (!endo) edge[os.source[i]][os.target[i]] = true;
  }
  const auto& dz = a.degree_zero();
  if (a.dim(0) - dz.radical.dim() != no) throw NotDirected("some endomorphism algebra is not local");
  std::vector<size_t> indeg(no, 0), order, ready;
  for (size_t x = 0; x < no; ++x)
    for (size_t y = 0; y < no; ++y)
      if (edge[x][y]) ++indeg[y];
  for (size_t x = 0; x < no; ++x)
    if (indeg[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    size_t x = ready.front();
    ready.erase(ready.begin());
    order.push_back(x);
    for (size_t y = 0; y < no; ++y)
      if (edge[x][y] && --indeg[y] == 0) ready.push_back(y);
  }
  if (order.size() != no) throw NotDirected("morphisms between distinct objects form a cycle");

  BSubalgebra b;
  b.a = ap;
  b.order = order;
  std::vector<size_t> pos(a.dim(), static_cast<size_t>(-1));
  for (size_t i = 0; i < a.dim(); ++i)
    if (is_identity[i] || os.source[i] != os.target[i]) {
      pos[i] = b.embedding.size();
      b.embedding.push_back(i);
    }
  size_t m = b.embedding.size();
  GradedAlgebra::Data d;
  d.field = a.field();
  d.truncation = a.truncation();
  d.exact = a.exact();
  ObjectStructure bo;
  bo.names = os.names;
  for (size_t id : os.identity) bo.identity.push_back(pos[id]);
  for (size_t i : b.embedding) {
    d.degree.push_back(a.degree(i));
    d.labels.push_back(a.label(i));
    bo.source.push_back(os.source[i]);
    bo.target.push_back(os.target[i]);
  }
  d.table.resize(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      SparseVec out;
      for (const auto& [k, c] : a.product(b.embedding[i], b.embedding[j])) {
        if (pos[k] == static_cast<size_t>(-1)) throw InvalidStructure("B is not closed under multiplication");
        out.emplace_back(static_cast<uint32_t>(pos[k]), c);
      }
      d.table[i * m + j] = std::move(out);
    }
  d.unit.assign(m, Scalar());
  for (size_t id : os.identity) d.unit[pos[id]] = a.field().one();
  d.objects = std::move(bo);
  b.b = std::make_shared<const GradedAlgebra>(std::move(d));
  return b;
}

GradedModule restrict_to_b(const BSubalgebra& b, const GradedModule& m) {
  std::vector<Vec> images;
  for (size_t g : b.b->generators()) images.push_back(b.a->basis_vector(b.embedding[g]));
  return restrict_along(m, b.b, images);
}

GradedModule degree_slice(const GradedModule& m, int i) {
  std::vector<Subspace> upper, higher;
  for (int d = 0; d <= m.top(); ++d) {
    upper.push_back(d >= i ? Subspace::whole(m.field(), m.dim(d)) : Subspace(m.field(), m.dim(d)));
  }
  Submodule s = make_submodule(m, upper);
  for (int d = 0; d <= s.module.top(); ++d)
    higher.push_back(d > i ? Subspace::whole(m.field(), s.module.dim(d)) : Subspace(m.field(), s.module.dim(d)));
  return quotient(s.module, higher).module;
}

Theorem42Report theorem42_pipeline(const AlgebraPtr& a, const std::optional<GradedModule>& m, int bound) {
  Theorem42Report rep;
  BSubalgebra b = build_b_subalgebra(a);
  KoszulOptions opts{bound, false};
  KoszulVerdict b_alg = algebra_is_classical_koszul(b.b, opts);
  GradedModule target = m ? *m : degree_zero_module(a);
  bool precondition = true;
  if (!m) {
    rep.generalized = algebra_is_generalized_koszul(a, opts);
    rep.projective = *rep.generalized.a0_projective;
    rep.classical = b_alg;
  } else {
    KoszulVerdict a_alg = algebra_is_generalized_koszul(a, opts);
    if (!a_alg.verdict.ok()) {
      precondition = false;
      rep.notes.push_back("A is not generalized Koszul (" + std::string(status_name(a_alg.verdict.status)) +
                          "), so the module statement does not apply");
    }
    rep.generalized = is_generalized_koszul(*m, opts);
    rep.projective = is_projective_over_a0(*m);
    rep.classical = is_classical_koszul(restrict_to_b(b, *m), opts);
  }
  Status lhs = rep.generalized.verdict.status;
  Status rhs = both(rep.projective, rep.classical.verdict).status;
  rep.agreement = lhs == rhs;
  bool contradiction = (lhs == Status::Holds && rhs == Status::Fails) || (lhs == Status::Fails && rhs == Status::Holds);
  rep.violation = precondition && contradiction;

  // The direction from B: slices Omega^i(M)_i projective over A_0 and M restricted classical.
  if (b_alg.verdict.ok()) {
    const auto& syz = rep.generalized.resolution.syzygies;
    bool slices = rep.generalized.resolution.terminated || static_cast<int>(syz.size()) > bound;
    for (size_t i = 0; i < syz.size() && static_cast<int>(i) <= bound && slices; ++i)
      slices = is_projective_over_a0(degree_slice(syz[i], static_cast<int>(i))).ok();
    KoszulVerdict restricted = m ? rep.classical : is_classical_koszul(restrict_to_b(b, target), opts);
    if (slices && restricted.verdict.ok()) {
      rep.converse_applicable = true;
      rep.converse_consistent = rep.generalized.verdict.status != Status::Fails;
      if (!rep.converse_consistent) rep.violation = true;
    }
  }
  return rep;
}

}  // namespace koszul
