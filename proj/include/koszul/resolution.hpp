#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/module.hpp"

namespace koszul {

struct ProjectiveSummand {
  // Isomorphism class of the primitive idempotent, as in DegreeZeroStructure.
  size_t cls = 0;
  int shift = 0;
  friend bool operator==(const ProjectiveSummand&, const ProjectiveSummand&) = default;
};

// A direct sum of shifted indecomposable projectives A e_c [j].
struct ProjectiveModule {
  GradedModule module;
  std::vector<ProjectiveSummand> summands;
  // basis[d][i]: summand index and the algebra element (global coordinates)
  // represented by basis vector i of module degree d.
  std::vector<std::vector<std::pair<size_t, Vec>>> basis;
};

// Caches the left ideals A e_c of one algebra.
class ProjectiveFactory {
 public:
  explicit ProjectiveFactory(AlgebraPtr alg);
  const AlgebraPtr& algebra() const { return alg_; }
  // window caps the known degrees, as for a truncated target module.
  ProjectiveModule make(const std::vector<ProjectiveSummand>& summands, std::optional<int> window) const;
  const Submodule& indecomposable(size_t cls) const;

 private:
  AlgebraPtr alg_;
  mutable std::map<size_t, Submodule> cache_;
};

// The map P -> N sending the generator of summand s to images[s] (in N of
// degree shift_s, fixed by the summand's idempotent).
ModuleMap map_from_projective(const ProjectiveModule& p, const GradedModule& n, const std::vector<Vec>& images);

struct ProjectiveCover {
  ProjectiveModule cover;
  std::vector<Vec> generators;
  ModuleMap map;
};

ProjectiveCover projective_cover(const GradedModule& m, const ProjectiveFactory& factory);
ProjectiveCover projective_cover(const GradedModule& m);
Submodule syzygy(const GradedModule& m);

struct MinimalResolution {
  GradedModule target;
  // covers[i] is P^i -> Omega^i, with Omega^0 the target.
  std::vector<ProjectiveCover> covers;
  // syzygies[i] = Omega^i; syzygies[i + 1] sits inside covers[i].cover.
  std::vector<GradedModule> syzygies;
  std::vector<std::vector<Subspace>> embeddings;
  // The last computed syzygy vanished.
  bool terminated = false;
  // The vanishing was only seen inside a degree window.
  bool terminated_in_window = false;

  size_t terms() const { return covers.size(); }
  // d_i : P^i -> P^{i-1} for i >= 1.
  ModuleMap differential(size_t i) const;
  std::string betti_string(const GradedAlgebra& a) const;
};

MinimalResolution minimal_resolution(const GradedModule& m, int n);

struct KoszulVerdict {
  Verdict verdict;
  // Homological step of the first failure.
  std::optional<int> step;
  int bound = 0;
  // Pairs (i, j, s) with Omega^j isomorphic to Omega^i[s].
  std::vector<std::string> periodicity;
  std::optional<Verdict> a0_projective;
  MinimalResolution resolution;
};

struct KoszulOptions {
  int bound = 8;
  bool look_for_periodicity = true;
};

KoszulVerdict is_generalized_koszul(const GradedModule& m, const KoszulOptions& opts = {});
// Throws DegreeZeroNotSemisimple unless the radical of A_0 vanishes.
KoszulVerdict is_classical_koszul(const GradedModule& m, const KoszulOptions& opts = {});
KoszulVerdict algebra_is_generalized_koszul(const AlgebraPtr& a, const KoszulOptions& opts = {});
KoszulVerdict algebra_is_classical_koszul(const AlgebraPtr& a, const KoszulOptions& opts = {});

}  // namespace koszul
