#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "koszul/resolution.hpp"

namespace koszul {

// A homogeneous element of Hom_A(P^i, N) of internal degree t: values[s] is
// the image of generator s of P^i, an element of N in degree shift_s + t.
struct Cochain {
  int i = 0;
  int t = 0;
  std::vector<Vec> values;
};

// Evaluates the map P -> N given by generator images of internal degree t on
// an element x of P in degree d. The result lies in N_{d+t}.
Vec eval_from_projective(const ProjectiveModule& p, const GradedModule& n, const std::vector<Vec>& images, int t,
                         int d, const Vec& x);

// Ext^i_A(M, N) in internal degree t as cocycles modulo coboundaries.
struct ExtGroup {
  int i = 0;
  int t = 0;
  // Offsets of the summand blocks inside the ambient space sum_s N_{shift_s+t}.
  std::vector<size_t> offsets;
  Subspace cocycles;
  Subspace coboundaries;
  // Columns are cocycles whose classes form a basis.
  Matrix representatives;
  Matrix rep_quotient;
  size_t dim() const { return representatives.cols(); }
};

// The Hom complex Hom_A(P^*, N) over a minimal resolution of M.
class ExtComplex {
 public:
  ExtComplex(MinimalResolution res, GradedModule n, int bound);

  const MinimalResolution& resolution() const { return res_; }
  const GradedModule& target() const { return n_; }
  int bound() const { return bound_; }
  // Internal degrees with a nonzero cochain space in homological degree i.
  std::vector<int> internal_degrees(int i) const;
  const ExtGroup& group(int i, int t) const;
  size_t dim(int i) const;

  Vec to_ambient(const Cochain& c) const;
  Cochain from_ambient(int i, int t, const Vec& v) const;
  // Class coordinates of a cocycle.
  Vec class_of(const Cochain& c) const;
  Cochain representative(int i, int t, size_t k) const;
  // Coboundary of a cochain, as a cochain on P^{i+1}.
  Cochain coboundary(const Cochain& c) const;

 private:
  MinimalResolution res_;
  GradedModule n_;
  int bound_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ExtGroup>> groups_;
  std::vector<size_t> layout(int i, int t) const;
  Matrix delta(int i, int t) const;
};

// Chain map F_k : P_src^{j+k} -> P_tgt^k (k = 0..depth) lifting the cocycle
// psi : P_src^j -> M, where tgt resolves M. lift[k][s] is the image of
// generator s of P_src^{j+k}.
std::vector<std::vector<Vec>> lift_cocycle(const MinimalResolution& src, const Cochain& psi,
                                           const MinimalResolution& tgt, int depth);

// phi o F_i for a cocycle phi : P_tgt^i -> N of `phi_complex` (which
// resolves by tgt) and a lift F of psi : P_src^j -> M of internal degree psi_t.
Cochain compose_with_lift(const ExtComplex& phi_complex, const MinimalResolution& src, const Cochain& phi,
                          const std::vector<std::vector<Vec>>& lift, int psi_degree, int psi_t);

// Yoneda product of x in Ext(M, N) and y in Ext(L, M): x o F(y).
Cochain yoneda(const ExtComplex& xm, const Cochain& x, const ExtComplex& yl, const Cochain& y);

struct ExtPresentation {
  std::shared_ptr<ExtComplex> complex;
  std::vector<size_t> dims;
  std::optional<int> window;
  std::vector<std::string> notes;
};

ExtPresentation ext_spaces(const GradedModule& m, const GradedModule& n, int bound);

// A degree-0 basis element of an Ext algebra: an endomorphism of the module.
struct EndoBasis {
  std::string label;
  ModuleMap map;
  size_t source = 0;
  size_t target = 0;
};

// Ext*_A(M, M) assembled as a GradedAlgebra graded by homological degree.
struct ExtAlgebra {
  AlgebraPtr gamma;
  std::shared_ptr<ExtComplex> complex;
  // Cochain of each basis element of gamma.
  std::vector<Cochain> basis;
  // Gamma_1 * Gamma_i = Gamma_{i+1} within the computed range.
  Verdict generated;
  std::vector<std::string> notes;

  // Coordinates in gamma of a homogeneous cocycle.
  Vec coordinates(const Cochain& c) const;

  struct Block {
    size_t first = 0;
    // Columns: the basis elements of this block in raw class coordinates.
    Matrix change;
  };
  std::map<std::pair<int, int>, Block> blocks;
};

// object_names and identities describe a decomposition of M; degree_zero
// must be a basis of End_A(M) made of maps between the summands.
ExtAlgebra ext_algebra(const GradedModule& m, const std::vector<EndoBasis>& degree_zero,
                       const std::vector<std::string>& object_names, const std::vector<size_t>& identities,
                       int bound);

// Gamma = Ext*_A(A_0, A_0). Degree 0 is spanned by the right multiplications
// rho_b (b in the basis of A_0), which identifies Gamma_0 with A_0^op.
ExtAlgebra gamma_algebra(const AlgebraPtr& a, int bound);

// E(M) = Ext*_A(M, A_0) as a graded module over gamma.
struct EModule {
  GradedModule module;
  std::shared_ptr<ExtComplex> complex;
  // Class representatives of the module basis, per homological degree.
  std::vector<std::vector<Cochain>> basis;
};

// Builds E(M) with the Yoneda action of the generators of gamma. Requires
// nothing of M; the result is a well-defined gamma-module when gamma is
// generated in degrees 0 and 1.
EModule ext_module(const ExtAlgebra& g, const GradedModule& m);
// As ext_module, after checking that A and M are generalized Koszul.
EModule apply_e(const ExtAlgebra& g, const GradedModule& m, int bound);

Verdict check_ext_generation(const ExtAlgebra& g, const GradedModule& m);

struct DualityReport {
  Verdict verdict;
  std::vector<size_t> dims_m;
  std::vector<size_t> dims_ee;
  AlgebraPtr gamma;
  AlgebraPtr gamma_dual;
};

// Computes E_Gamma E(M), pulls it back to A along the canonical map
// A -> Ext*_Gamma(Gamma_0, Gamma_0) and compares with M.
DualityReport check_duality_roundtrip(const AlgebraPtr& a, const GradedModule& m, int bound);

// Evidence for fdim A_0 = 0: semisimple, or each block local or
// self-injective; otherwise a bounded search for an injective map between
// projectives whose cokernel has finite nonzero projective dimension.
Verdict fdim_zero_certificate(const FiniteDimAlgebra& a0, int search_bound = 3);

}  // namespace koszul
