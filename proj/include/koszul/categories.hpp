#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/bar.hpp"
#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

// A finite group given by its Cayley table: table[a * order + b] = a b.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  // Verifies the group axioms; throws InvalidStructure.
  FiniteGroup(std::vector<size_t> table, std::vector<std::string> names = {});

  static FiniteGroup cyclic(size_t n);
  static FiniteGroup dihedral(size_t n);  // order 2n
  static FiniteGroup symmetric(size_t n);
  // Group generated by permutations of {0, ..., degree-1}.
  static FiniteGroup from_permutations(const std::vector<std::vector<size_t>>& generators);
  static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

  size_t order() const { return n_; }
  size_t identity() const { return id_; }
  size_t mul(size_t a, size_t b) const { return table_[a * n_ + b]; }
  size_t inv(size_t a) const { return inv_[a]; }
  const std::string& name(size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  size_t element(const std::string& name) const;
  // Subgroup generated by the given elements, as a sorted element list.
  std::vector<size_t> generated(const std::vector<size_t>& gens) const;
  bool is_subgroup(const std::vector<size_t>& s) const;
  const std::vector<size_t>& table() const { return table_; }

 private:
  size_t n_ = 0;
  size_t id_ = 0;
  std::vector<size_t> table_;
  std::vector<size_t> inv_;
  std::vector<std::string> names_;
};

struct Morphism {
  size_t source = 0;
  size_t target = 0;
  std::string label;
};

// A finite category: compose(g, f) is g after f, defined when
// target(f) = source(g).
class FiniteCategory {
 public:
  FiniteCategory() = default;
  // Verifies identities and associativity; throws InvalidStructure.
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<size_t> identities,
                 std::vector<size_t> composition);

  size_t num_objects() const { return objects_.size(); }
  size_t num_morphisms() const { return morphisms_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(size_t f) const { return morphisms_[f]; }
  size_t identity(size_t x) const { return identities_[x]; }
  size_t compose(size_t g, size_t f) const { return composition_[g * morphisms_.size() + f]; }
  const std::vector<size_t>& hom(size_t x, size_t y) const { return hom_[x * objects_.size() + y]; }
  bool is_endomorphism(size_t f) const { return morphisms_[f].source == morphisms_[f].target; }

  static constexpr size_t none = static_cast<size_t>(-1);

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<size_t> identities_;
  std::vector<size_t> composition_;
  std::vector<std::vector<size_t>> hom_;
};

// Holds iff every endomorphism is invertible.
Verdict is_ei(const FiniteCategory& c);
// Holds iff each End(y) acts freely on every Hom(x, y) by composition.
Verdict has_free_actions(const FiniteCategory& c);

struct Subgroup {
  std::string name;
  std::vector<size_t> elements;
};

// Objects are the subgroups; Hom(H, K) = {g : g H g^-1 in K}, with h after g
// being hg. Throws NotASubgroup.
FiniteCategory transporter_category(const FiniteGroup& g, const std::vector<Subgroup>& subgroups);
// Objects are the coset spaces G/H; a morphism G/H -> G/K sends H to gK with
// H in gKg^-1, stored by the smallest element of the coset gK.
FiniteCategory orbit_category(const FiniteGroup& g, const std::vector<Subgroup>& subgroups);
// Equivariant maps G/H -> G/K counted by enumerating all maps of cosets.
size_t count_equivariant_maps(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

// degree[f] = 0 for endomorphisms, otherwise the largest number of
// non-endomorphisms f factors into.
struct EIGrading {
  std::vector<int> degree;
  std::vector<std::vector<size_t>> classes;
};

// Throws NotEI, or NotEI when distinct objects are isomorphic.
EIGrading ei_grading(const FiniteCategory& c);

// Graded algebra with A_i spanned by C_i; products that land in a higher
// filtration degree vanish.
GradedAlgebra associated_graded_algebra(const FiniteCategory& c, const Field& f, const EIGrading& grading);
GradedAlgebra associated_graded_algebra(const FiniteCategory& c, const Field& f);
// The ungraded category algebra kC.
FiniteDimAlgebra category_algebra(const FiniteCategory& c, const Field& f);
// dim J^i / J^{i+1} for the ideal J of kC spanned by non-endomorphisms,
// computed from powers of J in kC.
std::vector<size_t> nonendomorphism_power_dims(const FiniteCategory& c, const Field& f);

// Holds when the indecomposable projectives of A/R can be ordered so that
// Hom(Q_i, Q_j) = 0 for i after j and every End(Q_i) is the field.
Verdict quotient_is_directed(const GradedAlgebra& bar);

// B: the identities together with every basis element between distinct objects.
struct BSubalgebra {
  AlgebraPtr a;
  AlgebraPtr b;
  // Basis index in A of each basis element of B.
  std::vector<size_t> embedding;
  // Objects in an order compatible with the morphisms.
  std::vector<size_t> order;
};

// Requires object data on A. Throws NotDirected when the objects admit no
// compatible order or an endomorphism has positive degree.
BSubalgebra build_b_subalgebra(const AlgebraPtr& a);
GradedModule restrict_to_b(const BSubalgebra& b, const GradedModule& m);

struct Theorem42Report {
  // Generalized check on A (or M).
  KoszulVerdict generalized;
  // Projectivity over A_0 of A (or M), and the classical check on B (or M restricted).
  Verdict projective;
  KoszulVerdict classical;
  bool agreement = false;
  bool violation = false;
  // The second-part direction: hypotheses checked, and whether the conclusion held.
  bool converse_applicable = false;
  bool converse_consistent = true;
  std::vector<std::string> notes;
};

// For a module, the part relating M to its restriction needs A generalized
// Koszul; when that fails the report records it and compares nothing.
Theorem42Report theorem42_pipeline(const AlgebraPtr& a, const std::optional<GradedModule>& m, int bound);

// Degree-i part of M as a module concentrated in degree i.
GradedModule degree_slice(const GradedModule& m, int i);

}  // namespace koszul
