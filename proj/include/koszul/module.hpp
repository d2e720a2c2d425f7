#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

// Graded left module M_0 + M_1 + ... over a GradedAlgebra. Only the actions of
// the algebra generators are stored; other basis elements act through their
// factorizations. When window() is set, components above it are unknown.
class GradedModule {
 public:
  GradedModule() = default;
  // action[k][d] is generator k acting M_d -> M_{d + deg}.
  GradedModule(AlgebraPtr alg, std::vector<size_t> dims, std::optional<int> window,
               std::vector<std::vector<Matrix>> action);

  const GradedAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  int top() const { return static_cast<int>(dims_.size()) - 1; }
  size_t dim(int d) const { return d < 0 || d > top() ? 0 : dims_[static_cast<size_t>(d)]; }
  const std::vector<size_t>& dims() const { return dims_; }
  size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const std::optional<int>& window() const { return window_; }
  bool complete() const { return !window_.has_value(); }
  // Largest degree whose component is known.
  int known_through() const { return window_ ? *window_ : top(); }
  // Lowest degree with a nonzero component, or -1 for the zero module.
  int bottom() const;

  const Matrix& generator_action(size_t k, int d) const;
  // Action of algebra basis element b on M_d.
  const Matrix& basis_action(size_t b, int d) const;
  // Action of a homogeneous algebra element of degree g on M_d.
  Matrix element_action(const Vec& a, int g, int d) const;
  Vec act(const Vec& a, int g, int d, const Vec& v) const;

 private:
  AlgebraPtr alg_;
  std::vector<size_t> dims_;
  std::optional<int> window_;
  std::vector<std::vector<Matrix>> action_;
  struct Cache {
    std::once_flag once;
    std::vector<std::vector<Matrix>> full;
  };
  std::shared_ptr<Cache> cache_;
  void fill_cache() const;
};

// A homogeneous element of a module.
struct ModuleElement {
  int degree = 0;
  Vec coords;
};

// Degree-preserving linear map between graded modules; blocks[d] is
// target_d x source_d.
struct ModuleMap {
  std::vector<Matrix> blocks;
  const Matrix& block(int d) const { return blocks[static_cast<size_t>(d)]; }
};

struct Submodule {
  GradedModule module;
  std::vector<Subspace> spaces;
};

struct QuotientModule {
  GradedModule module;
  std::vector<Subspace> kernel;
  Vec project(int d, const Vec& v) const { return kernel[static_cast<size_t>(d)].quotient_coordinates(v); }
};

GradedModule zero_module(AlgebraPtr alg);
// A as a left module over itself.
GradedModule regular_module(AlgebraPtr alg);
// The left ideal A e for an idempotent e of degree 0, in algebra coordinates.
Submodule projective_module(AlgebraPtr alg, const Vec& e);
// A_0 = A / J as a graded module concentrated in degree 0.
GradedModule degree_zero_module(AlgebraPtr alg);
// M[i]: the component of M[i] in degree s is M_{s-i}. Components that leave
// the nonnegative range are dropped and recorded in `note` when given.
GradedModule shift(const GradedModule& m, int i, std::string* note = nullptr);
GradedModule direct_sum(const std::vector<GradedModule>& parts);
// Keeps the degrees up to d and marks the rest unknown.
GradedModule truncate_window(const GradedModule& m, int d);

std::vector<Subspace> zero_spaces(const GradedModule& m);
std::vector<Subspace> close_under_action(const GradedModule& m, std::vector<Subspace> spaces);
// Submodule with the given A-stable components.
Submodule make_submodule(const GradedModule& m, std::vector<Subspace> spaces);
Submodule generated_submodule(const GradedModule& m, const std::vector<ModuleElement>& elements);
QuotientModule quotient(const GradedModule& m, const std::vector<Subspace>& sub);

// Graded radical r*M + J*M, with r the radical of A_0.
std::vector<Subspace> graded_radical(const GradedModule& m);
GradedModule top(const GradedModule& m);
// J^i M, the image of the degree >= i part of A.
Submodule j_multiple(const GradedModule& m, int i);
// The submodule A * M_s.
std::vector<Subspace> generated_by_degree(const GradedModule& m, int s);

Verdict is_generated_in_degree(const GradedModule& m, int s);
Verdict is_projective_over_a0(const GradedModule& m);

// Module over `alg` whose generators act as the given elements of the old
// algebra (each of degree at most 1, matching the new generator degree).
GradedModule restrict_along(const GradedModule& m, AlgebraPtr alg, const std::vector<Vec>& generator_images);
// Throws InvalidStructure when the actions do not satisfy the algebra relations.
void validate_module(const GradedModule& m);

bool is_homomorphism(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f);
Submodule kernel(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f);
std::vector<Subspace> image(const GradedModule& src, const GradedModule& tgt, const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap identity_map(const GradedModule& m);
ModuleMap inclusion_map(const Submodule& s);
ModuleMap projection_map(const GradedModule& m, const QuotientModule& q);

std::string dims_string(const std::vector<size_t>& dims);

}  // namespace koszul
