#include "koszul/module.hpp"

#include <algorithm>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

const char* status_name(Status s) {
  switch (s) {
    case Status::Holds:
      return "Holds";
    case Status::Fails:
      return "Fails";
    case Status::Inconclusive:
      return "InconclusiveAtBound";
  }
  return "?";
}

Verdict both(const Verdict& a, const Verdict& b) {
  if (a.status == Status::Fails) return a;
  if (b.status == Status::Fails) return b;
  if (a.status == Status::Inconclusive) return a;
  return b;
}

namespace {

const Matrix& empty_matrix() {
  static const Matrix m;
  return m;
}

}  // namespace

GradedModule::GradedModule(AlgebraPtr alg, std::vector<size_t> dims, std::optional<int> window,
                           std::vector<std::vector<Matrix>> action)
    : alg_(std::move(alg)), dims_(std::move(dims)), window_(window), action_(std::move(action)) {
  if (action_.size() != alg_->generators().size()) throw InvalidStructure("module action list has wrong length");
  if (window_) {
    if (*window_ < -1) window_ = -1;
    dims_.resize(static_cast<size_t>(*window_ + 1), 0);
  } else {
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
  }
  for (size_t k = 0; k < action_.size(); ++k) {
    int g = alg_->degree(alg_->generators()[k]);
    action_[k].resize(dims_.size());
    for (int d = 0; d <= top(); ++d) {
      Matrix& m = action_[k][static_cast<size_t>(d)];
      size_t rows = dim(d + g), cols = dim(d);
      if (m.rows() == rows && m.cols() == cols) continue;
      if ((m.rows() == 0 && m.cols() == 0) || (rows == 0 && m.cols() == cols))
        m = Matrix(field(), rows, cols);
      else
        throw InvalidStructure("action block has wrong shape in degree " + std::to_string(d));
    }
  }
  cache_ = std::make_shared<Cache>();
}

size_t GradedModule::total_dim() const {
  size_t s = 0;
  for (size_t d : dims_) s += d;
  return s;
}

int GradedModule::bottom() const {
  for (int d = 0; d <= top(); ++d)
    if (dim(d) > 0) return d;
  return -1;
}

const Matrix& GradedModule::generator_action(size_t k, int d) const {
  if (d < 0 || d > top()) return empty_matrix();
  return action_[k][static_cast<size_t>(d)];
}

void GradedModule::fill_cache() const {
  std::call_once(cache_->once, [this] {
    const GradedAlgebra& a = *alg_;
    auto& full = cache_->full;
    full.assign(a.dim(), {});
    for (size_t b = 0; b < a.dim(); ++b) {
      int g = a.degree(b);
      full[b].resize(dims_.size());
      for (int d = 0; d <= top(); ++d) {
        if (g <= 1) {
          full[b][static_cast<size_t>(d)] = action_[a.generator_position(b)][static_cast<size_t>(d)];
          continue;
        }
        Matrix m(field(), dim(d + g), dim(d));
        if (m.rows() > 0 && m.cols() > 0) {
          for (const auto& [gen, rest, c] : a.factorization(b)) {
            int rd = d + a.degree(rest);
            const Matrix& inner = full[rest][static_cast<size_t>(d)];
            const Matrix& outer = action_[a.generator_position(gen)][static_cast<size_t>(rd)];
            m.add_scaled(outer * inner, c);
          }
        }
        full[b][static_cast<size_t>(d)] = std::move(m);
      }
    }
  });
}

const Matrix& GradedModule::basis_action(size_t b, int d) const {
  if (d < 0 || d > top()) return empty_matrix();
  fill_cache();
  return cache_->full[b][static_cast<size_t>(d)];
}

Matrix GradedModule::element_action(const Vec& a, int g, int d) const {
  Matrix m(field(), dim(d + g), dim(d));
  if (m.rows() == 0 || m.cols() == 0) return m;
  for (size_t b = alg_->offset(g); b < alg_->offset(g + 1); ++b)
    if (!a[b].is_zero()) m.add_scaled(basis_action(b, d), a[b]);
  return m;
}

Vec GradedModule::act(const Vec& a, int g, int d, const Vec& v) const {
  Vec out(dim(d + g));
  if (out.empty() || v.empty()) return out;
  const Field& f = field();
  for (size_t b = alg_->offset(g); b < alg_->offset(g + 1); ++b)
    if (!a[b].is_zero()) axpy(f, out, a[b], basis_action(b, d).apply(v));
  return out;
}

GradedModule zero_module(AlgebraPtr alg) {
  size_t k = alg->generators().size();
  return GradedModule(alg, {}, std::nullopt, std::vector<std::vector<Matrix>>(k));
}

GradedModule regular_module(AlgebraPtr alg) {
  const GradedAlgebra& a = *alg;
  std::vector<std::vector<Matrix>> action;
  for (size_t g : a.generators()) {
    int gd = a.degree(g);
    std::vector<Matrix> blocks;
    for (int d = 0; d <= a.top_degree(); ++d) {
      Matrix m(a.field(), a.dim(d + gd), a.dim(d));
      for (size_t b = a.offset(d); b < a.offset(d + 1); ++b)
        for (const auto& [k, c] : a.product(g, b)) m.at(k - a.offset(d + gd), b - a.offset(d)) = c;
      blocks.push_back(std::move(m));
    }
    action.push_back(std::move(blocks));
  }
  std::optional<int> window;
  if (!a.exact()) window = a.truncation();
  return GradedModule(alg, a.dims(), window, std::move(action));
}

Submodule projective_module(AlgebraPtr alg, const Vec& e) {
  GradedModule a = regular_module(alg);
  Vec seed(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(alg->dim(0)));
  return generated_submodule(a, {{0, seed}});
}

GradedModule degree_zero_module(AlgebraPtr alg) {
  const GradedAlgebra& a = *alg;
  size_t n0 = a.dim(0);
  std::vector<std::vector<Matrix>> action;
  for (size_t g : a.generators()) {
    if (a.degree(g) == 0) {
      Matrix m(a.field(), n0, n0);
      for (size_t b = 0; b < n0; ++b)
        for (const auto& [k, c] : a.product(g, b)) m.at(k, b) = c;
      action.push_back({m});
    } else {
      action.push_back({Matrix(a.field(), 0, n0)});
    }
  }
  return GradedModule(alg, {n0}, std::nullopt, std::move(action));
}

GradedModule shift(const GradedModule& m, int i, std::string* note) {
  const GradedAlgebra& a = m.algebra();
  std::optional<int> window = m.window();
  if (window) window = std::max(*window + i, -1);
  int new_top = (window ? *window : m.top() + i);
  if (new_top < -1) new_top = -1;
  std::vector<size_t> dims;
  for (int s = 0; s <= new_top; ++s) dims.push_back(m.dim(s - i));
  if (i < 0 && note) {
    size_t dropped = 0;
    for (int d = 0; d < -i; ++d) dropped += m.dim(d);
    if (dropped > 0) *note = "shift by " + std::to_string(i) + " dropped " + std::to_string(dropped) + " dimensions below degree " + std::to_string(-i);
  }
  std::vector<std::vector<Matrix>> action(a.generators().size());
  for (size_t k = 0; k < a.generators().size(); ++k) {
    int g = a.degree(a.generators()[k]);
    for (int s = 0; s <= new_top; ++s) {
      if (s - i >= 0 && s - i <= m.top() && s + g <= new_top)
        action[k].push_back(m.generator_action(k, s - i));
      else
        action[k].push_back(Matrix(m.field(), s + g <= new_top ? dims[static_cast<size_t>(s + g)] : 0,
                                   dims[static_cast<size_t>(s)]));
    }
  }
  return GradedModule(m.algebra_ptr(), std::move(dims), window, std::move(action));
}

GradedModule direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw InvalidStructure("direct sum of no modules");
  AlgebraPtr alg = parts[0].algebra_ptr();
  const GradedAlgebra& a = *alg;
  std::optional<int> window;
  int top = -1;
  for (const auto& p : parts) {
    if (p.window()) window = window ? std::min(*window, *p.window()) : *p.window();
    top = std::max(top, p.top());
  }
  if (window) top = *window;
  std::vector<size_t> dims(static_cast<size_t>(top + 1), 0);
  for (const auto& p : parts)
    for (int d = 0; d <= top; ++d) dims[static_cast<size_t>(d)] += p.dim(d);
  auto dimat = [&](int d) { return d < 0 || d > top ? size_t{0} : dims[static_cast<size_t>(d)]; };
  std::vector<std::vector<Matrix>> action(a.generators().size());
  for (size_t k = 0; k < a.generators().size(); ++k) {
    int g = a.degree(a.generators()[k]);
    for (int d = 0; d <= top; ++d) {
      Matrix m(a.field(), dimat(d + g), dimat(d));
      size_t ro = 0, co = 0;
      for (const auto& p : parts) {
        if (d + g <= top) {
          const Matrix& blk = p.generator_action(k, d);
          for (size_t r = 0; r < blk.rows(); ++r)
            for (size_t c = 0; c < blk.cols(); ++c) m.at(ro + r, co + c) = blk(r, c);
        }
        ro += p.dim(d + g);
        co += p.dim(d);
      }
      action[k].push_back(std::move(m));
    }
  }
  return GradedModule(alg, std::move(dims), window, std::move(action));
}

GradedModule truncate_window(const GradedModule& m, int d) {
  int w = m.window() ? std::min(*m.window(), d) : d;
  const GradedAlgebra& a = m.algebra();
  std::vector<size_t> dims;
  for (int s = 0; s <= w; ++s) dims.push_back(m.dim(s));
  std::vector<std::vector<Matrix>> action(a.generators().size());
  for (size_t k = 0; k < a.generators().size(); ++k) {
    int g = a.degree(a.generators()[k]);
    for (int s = 0; s <= w; ++s)
      action[k].push_back(s + g <= w ? m.generator_action(k, s) : Matrix(m.field(), 0, m.dim(s)));
  }
  return GradedModule(m.algebra_ptr(), std::move(dims), w, std::move(action));
}

std::vector<Subspace> zero_spaces(const GradedModule& m) {
  std::vector<Subspace> s;
  for (int d = 0; d <= m.top(); ++d) s.emplace_back(m.field(), m.dim(d));
  return s;
}

std::vector<Subspace> close_under_action(const GradedModule& m, std::vector<Subspace> spaces) {
  const GradedAlgebra& a = m.algebra();
  const Field& f = m.field();
  for (int d = 0; d <= m.top(); ++d) {
    std::vector<Vec> gens;
    Subspace& cur = spaces[static_cast<size_t>(d)];
    for (size_t j = 0; j < cur.dim(); ++j) gens.push_back(cur.basis_vector(j));
    if (d > 0) {
      const Subspace& prev = spaces[static_cast<size_t>(d - 1)];
      for (size_t k = 0; k < a.generators().size(); ++k) {
        if (a.degree(a.generators()[k]) != 1) continue;
        const Matrix& act = m.generator_action(k, d - 1);
        for (size_t j = 0; j < prev.dim(); ++j) gens.push_back(act.apply(prev.basis_vector(j)));
      }
    }
    Subspace s = Subspace::span(f, m.dim(d), gens);
    std::vector<Vec> all;
    for (size_t k = 0; k < a.generators().size(); ++k) {
      if (a.degree(a.generators()[k]) != 0) continue;
      const Matrix& act = m.generator_action(k, d);
      for (size_t j = 0; j < s.dim(); ++j) all.push_back(act.apply(s.basis_vector(j)));
    }
    for (size_t j = 0; j < s.dim(); ++j) all.push_back(s.basis_vector(j));
    cur = Subspace::span(f, m.dim(d), all);
  }
  return spaces;
}

Submodule make_submodule(const GradedModule& m, std::vector<Subspace> spaces) {
  const GradedAlgebra& a = m.algebra();
  std::vector<size_t> dims;
  for (const auto& s : spaces) dims.push_back(s.dim());
  int top = m.top();
  std::vector<std::vector<Matrix>> action(a.generators().size());
  for (size_t k = 0; k < a.generators().size(); ++k) {
    int g = a.degree(a.generators()[k]);
    for (int d = 0; d <= top; ++d) {
      const Subspace& src = spaces[static_cast<size_t>(d)];
      if (d + g > top) {
        action[k].push_back(Matrix(m.field(), 0, src.dim()));
        continue;
      }
      const Subspace& tgt = spaces[static_cast<size_t>(d + g)];
      Matrix blk(m.field(), tgt.dim(), src.dim());
      const Matrix& act = m.generator_action(k, d);
      for (size_t j = 0; j < src.dim(); ++j) {
        Vec w = act.apply(src.basis_vector(j));
        Vec coords = tgt.coordinates(w);
        if (!is_zero_vec(tgt.reduce(w))) throw InvalidStructure("subspaces are not stable under the action");
        blk.set_column(j, coords);
      }
      action[k].push_back(std::move(blk));
    }
  }
  Submodule s{GradedModule(m.algebra_ptr(), std::move(dims), m.window(), std::move(action)), std::move(spaces)};
  return s;
}

Submodule generated_submodule(const GradedModule& m, const std::vector<ModuleElement>& elements) {
  std::vector<Subspace> spaces = zero_spaces(m);
  std::vector<std::vector<Vec>> seeds(spaces.size());
  for (const auto& e : elements) {
    if (e.degree < 0 || e.degree > m.top()) continue;
    seeds[static_cast<size_t>(e.degree)].push_back(e.coords);
  }
  for (size_t d = 0; d < spaces.size(); ++d)
    spaces[d] = Subspace::span(m.field(), m.dim(static_cast<int>(d)), seeds[d]);
  return make_submodule(m, close_under_action(m, std::move(spaces)));
}

QuotientModule quotient(const GradedModule& m, const std::vector<Subspace>& sub) {
  const GradedAlgebra& a = m.algebra();
  int top = m.top();
  std::vector<size_t> dims;
  std::vector<std::vector<size_t>> comp;
  for (int d = 0; d <= top; ++d) {
    comp.push_back(sub[static_cast<size_t>(d)].complement_rows());
    dims.push_back(comp.back().size());
  }
  std::vector<std::vector<Matrix>> action(a.generators().size());
  for (size_t k = 0; k < a.generators().size(); ++k) {
    int g = a.degree(a.generators()[k]);
    for (int d = 0; d <= top; ++d) {
      if (d + g > top) {
        action[k].push_back(Matrix(m.field(), 0, dims[static_cast<size_t>(d)]));
        continue;
      }
      Matrix blk(m.field(), dims[static_cast<size_t>(d + g)], dims[static_cast<size_t>(d)]);
      const Matrix& act = m.generator_action(k, d);
      for (size_t j = 0; j < comp[static_cast<size_t>(d)].size(); ++j) {
        Vec w = act.column(comp[static_cast<size_t>(d)][j]);
        blk.set_column(j, sub[static_cast<size_t>(d + g)].quotient_coordinates(w));
      }
      action[k].push_back(std::move(blk));
    }
  }
  return QuotientModule{GradedModule(m.algebra_ptr(), std::move(dims), m.window(), std::move(action)), sub};
}

std::vector<Subspace> graded_radical(const GradedModule& m) {
  const GradedAlgebra& a = m.algebra();
  const auto& dz = a.degree_zero();
  const Field& f = m.field();
  std::vector<Subspace> out;
  for (int d = 0; d <= m.top(); ++d) {
    std::vector<Vec> gens;
    for (size_t r = 0; r < dz.radical.dim(); ++r) {
      Vec elem(a.dim());
      Vec rv = dz.radical.basis_vector(r);
      for (size_t i = 0; i < rv.size(); ++i) elem[i] = rv[i];
      Matrix act = m.element_action(elem, 0, d);
      for (size_t j = 0; j < m.dim(d); ++j) gens.push_back(act.column(j));
    }
    if (d > 0)
      for (size_t k = 0; k < a.generators().size(); ++k) {
        if (a.degree(a.generators()[k]) != 1) continue;
        const Matrix& act = m.generator_action(k, d - 1);
        for (size_t j = 0; j < act.cols(); ++j) gens.push_back(act.column(j));
      }
    out.push_back(Subspace::span(f, m.dim(d), gens));
  }
  return out;
}

GradedModule top(const GradedModule& m) { return quotient(m, graded_radical(m)).module; }

Submodule j_multiple(const GradedModule& m, int i) {
  const GradedAlgebra& a = m.algebra();
  std::vector<Subspace> cur;
  for (int d = 0; d <= m.top(); ++d) cur.push_back(Subspace::whole(m.field(), m.dim(d)));
  for (int step = 0; step < i; ++step) {
    std::vector<Subspace> next;
    for (int d = 0; d <= m.top(); ++d) {
      std::vector<Vec> gens;
      if (d > 0)
        for (size_t k = 0; k < a.generators().size(); ++k) {
          if (a.degree(a.generators()[k]) != 1) continue;
          const Matrix& act = m.generator_action(k, d - 1);
          const Subspace& prev = cur[static_cast<size_t>(d - 1)];
          for (size_t j = 0; j < prev.dim(); ++j) gens.push_back(act.apply(prev.basis_vector(j)));
        }
      next.push_back(Subspace::span(m.field(), m.dim(d), gens));
    }
    cur = std::move(next);
  }
  return make_submodule(m, std::move(cur));
}

std::vector<Subspace> generated_by_degree(const GradedModule& m, int s) {
  std::vector<Subspace> spaces = zero_spaces(m);
  if (s >= 0 && s <= m.top()) spaces[static_cast<size_t>(s)] = Subspace::whole(m.field(), m.dim(s));
  return close_under_action(m, std::move(spaces));
}

Verdict is_generated_in_degree(const GradedModule& m, int s) {
  Verdict v;
  if (m.window()) v.window = *m.window();
  for (int d = 0; d < s && d <= m.top(); ++d)
    if (m.dim(d) > 0) {
      Verdict f = Verdict::fails("nonzero component of dimension " + std::to_string(m.dim(d)) + " in degree " +
                                     std::to_string(d) + " below " + std::to_string(s),
                                 d);
      f.window = v.window;
      return f;
    }
  auto gen = generated_by_degree(m, s);
  for (int d = s; d <= m.top(); ++d)
    if (gen[static_cast<size_t>(d)].dim() < m.dim(d)) {
      Verdict f = Verdict::fails("A_" + std::to_string(d - s) + " M_" + std::to_string(s) + " has dimension " +
                                     std::to_string(gen[static_cast<size_t>(d)].dim()) + " but M_" + std::to_string(d) +
                                     " has dimension " + std::to_string(m.dim(d)),
                                 d);
      f.window = v.window;
      return f;
    }
  return v;
}

Verdict is_projective_over_a0(const GradedModule& m) {
  const GradedAlgebra& a = m.algebra();
  const auto& dz = a.degree_zero();
  const Field& f = m.field();
  size_t n0 = a.dim(0);
  std::vector<size_t> proj_dim;
  for (size_t rep : dz.representatives) {
    std::vector<Vec> cols;
    for (size_t b = 0; b < n0; ++b) cols.push_back(dz.algebra.multiply(unit_vec(n0, b), dz.idempotents[rep]));
    proj_dim.push_back(Subspace::span(f, n0, cols).dim());
  }
  auto rad = graded_radical(m);
  Verdict v;
  if (m.window()) v.window = *m.window();
  for (int d = 0; d <= m.top(); ++d) {
    std::vector<Vec> rvecs;
    for (size_t r = 0; r < dz.radical.dim(); ++r) {
      Vec elem(a.dim());
      Vec rv = dz.radical.basis_vector(r);
      std::copy(rv.begin(), rv.end(), elem.begin());
      Matrix act = m.element_action(elem, 0, d);
      for (size_t j = 0; j < act.cols(); ++j) rvecs.push_back(act.column(j));
    }
    Subspace rm = Subspace::span(f, m.dim(d), rvecs);
    size_t expected = 0;
    for (size_t c = 0; c < dz.representatives.size(); ++c) {
      Vec e(a.dim());
      std::copy(dz.idempotents[dz.representatives[c]].begin(), dz.idempotents[dz.representatives[c]].end(), e.begin());
      Matrix act = m.element_action(e, 0, d);
      Subspace em = Subspace::span(act).sum(rm);
      expected += (em.dim() - rm.dim()) * proj_dim[c];
    }
    if (expected != m.dim(d)) {
      Verdict fv = Verdict::fails("component in degree " + std::to_string(d) + " has dimension " +
                                      std::to_string(m.dim(d)) + " but its A_0-projective cover has dimension " +
                                      std::to_string(expected),
                                  d);
      fv.window = v.window;
      return fv;
    }
  }
  return v;
}

GradedModule restrict_along(const GradedModule& m, AlgebraPtr alg, const std::vector<Vec>& generator_images) {
  const GradedAlgebra& b = *alg;
  if (generator_images.size() != b.generators().size()) throw InvalidStructure("wrong number of generator images");
  std::vector<std::vector<Matrix>> action;
  for (size_t k = 0; k < b.generators().size(); ++k) {
    int g = b.degree(b.generators()[k]);
    std::vector<Matrix> blocks;
    for (int d = 0; d <= m.top(); ++d) blocks.push_back(m.element_action(generator_images[k], g, d));
    action.push_back(std::move(blocks));
  }
  std::optional<int> window = m.window();
  return GradedModule(alg, m.dims(), window, std::move(action));
}

void validate_module(const GradedModule& m) {
  const GradedAlgebra& a = m.algebra();
  for (int d = 0; d <= m.top(); ++d)
    if (m.element_action(a.unit(), 0, d) != Matrix::identity(m.field(), m.dim(d)))
      throw InvalidStructure("unit does not act as the identity in degree " + std::to_string(d));
  for (size_t k = 0; k < a.generators().size(); ++k) {
    size_t g = a.generators()[k];
    for (size_t y = 0; y < a.dim(); ++y) {
      int deg = a.degree(g) + a.degree(y);
      Vec prod = to_dense(a.product(g, y), a.dim());
      for (int d = 0; d + deg <= m.top(); ++d) {
        if (a.degree(y) + d > m.top()) continue;
        Matrix lhs = m.generator_action(k, d + a.degree(y)) * m.basis_action(y, d);
        if (deg > a.top_degree()) {
          if (!a.exact()) continue;
          if (!lhs.is_zero()) throw InvalidStructure("relation beyond the algebra's top degree fails");
          continue;
        }
        if (lhs != m.element_action(prod, deg, d))
          throw InvalidStructure("relation fails for " + a.label(g) + " * " + a.label(y) + " in degree " +
                                 std::to_string(d));
      }
    }
  }
}

bool is_homomorphism(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f) {
  const GradedAlgebra& a = src.algebra();
  int top = std::min(src.top(), tgt.top());
  for (size_t k = 0; k < a.generators().size(); ++k) {
    int g = a.degree(a.generators()[k]);
    for (int d = 0; d <= src.top(); ++d) {
      if (d + g > src.top() || d + g > tgt.top() || d > top) continue;
      Matrix lhs = f.block(d + g) * src.generator_action(k, d);
      Matrix rhs = tgt.generator_action(k, d) * f.block(d);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Submodule kernel(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f) {
  std::vector<Subspace> spaces;
  for (int d = 0; d <= src.top(); ++d) {
    if (d > tgt.top() || tgt.dim(d) == 0)
      spaces.push_back(Subspace::whole(src.field(), src.dim(d)));
    else
      spaces.push_back(Subspace::span(kernel_basis(f.block(d))));
  }
  return make_submodule(src, std::move(spaces));
}

std::vector<Subspace> image(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f) {
  std::vector<Subspace> spaces;
  for (int d = 0; d <= tgt.top(); ++d) {
    if (d > src.top() || src.dim(d) == 0)
      spaces.emplace_back(tgt.field(), tgt.dim(d));
    else
      spaces.push_back(Subspace::span(f.block(d)));
  }
  return spaces;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  size_t n = std::min(g.blocks.size(), f.blocks.size());
  for (size_t d = 0; d < n; ++d) h.blocks.push_back(g.blocks[d] * f.blocks[d]);
  return h;
}

ModuleMap identity_map(const GradedModule& m) {
  ModuleMap f;
  for (int d = 0; d <= m.top(); ++d) f.blocks.push_back(Matrix::identity(m.field(), m.dim(d)));
  return f;
}

ModuleMap inclusion_map(const Submodule& s) {
  ModuleMap f;
  for (const auto& sp : s.spaces) f.blocks.push_back(sp.basis());
  return f;
}

ModuleMap projection_map(const GradedModule& m, const QuotientModule& q) {
  ModuleMap f;
  for (int d = 0; d <= m.top(); ++d) {
    Matrix blk(m.field(), q.module.dim(d), m.dim(d));
    for (size_t j = 0; j < m.dim(d); ++j) blk.set_column(j, q.project(d, unit_vec(m.dim(d), j)));
    f.blocks.push_back(std::move(blk));
  }
  return f;
}

std::string dims_string(const std::vector<size_t>& dims) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  return os.str();
}

}  // namespace koszul
