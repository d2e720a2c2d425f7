#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/ext.hpp"
#include "koszul/iso.hpp"
#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

// A partial order on named elements, given by relations a < b and closed
// transitively. Throws InvalidStructure on a cycle or an unknown name.
class PartialOrder {
 public:
  PartialOrder() = default;
  PartialOrder(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& less);
  // The discrete order.
  explicit PartialOrder(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  size_t index(const std::string& name) const;
  bool leq(size_t a, size_t b) const { return leq_[a * size() + b]; }
  bool less(size_t a, size_t b) const { return a != b && leq(a, b); }
  // h(l) = i when l is minimal once the elements of height < i are removed.
  std::vector<int> heights() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
};

struct StratifiedData {
  AlgebraPtr a;
  // Indexed like the isomorphism classes of simples of A.
  PartialOrder order;
  std::vector<int> height;
  std::vector<GradedModule> projective;
  std::vector<GradedModule> standard;
  // K_l inside P_l, the kernel of P_l -> Delta_l.
  std::vector<Submodule> kernel;
};

// A is taken ungraded: an algebra with positive degrees is flattened to
// degree 0 first. The order's names must be the class names of A; throws
// InvalidStructure when A is not basic.
StratifiedData standard_modules(const AlgebraPtr& a, const PartialOrder& order);

// [M : S_l] for each class l.
std::vector<size_t> composition_factors(const GradedModule& m);

// chain[0] = M > chain[1] > ... > chain.back() = 0 with
// chain[k] / chain[k+1] isomorphic to Delta_{factors[k]}.
struct DeltaFiltration {
  std::vector<std::vector<Subspace>> chain;
  std::vector<size_t> factors;
  std::vector<size_t> multiplicities;
};

struct FiltrationSearchOptions {
  size_t budget = 200000;
  // Shuffles the order in which tops and maps are tried.
  std::optional<uint64_t> seed;
};

struct FiltrationSearch {
  std::optional<DeltaFiltration> filtration;
  // When no filtration was found: every candidate map was tried.
  bool exhaustive = true;
  size_t explored = 0;
};

// Backtracking search for a filtration of m whose factors are Delta_l with
// allowed[l]. Throws SearchBudgetExceeded.
FiltrationSearch delta_filtration_search(const GradedModule& m, const StratifiedData& s, const std::vector<bool>& allowed,
                                         const FiltrationSearchOptions& opts = {});
// Re-checks every factor of f against its standard module.
Verdict verify_filtration(const GradedModule& m, const StratifiedData& s, const DeltaFiltration& f);

struct StratificationReport {
  Verdict verdict;
  // Filtration of each K_l, when found.
  std::vector<std::optional<DeltaFiltration>> kernel_filtrations;
};

StratificationReport is_standardly_stratified(const StratifiedData& s, const FiltrationSearchOptions& opts = {});

// Heights of the simple summands of the top of m.
std::vector<int> top_heights(const StratifiedData& s, const GradedModule& m);
// Throws NotGeneratedInSingleHeight.
Verdict is_linearly_filtered(const StratifiedData& s, const GradedModule& m, int bound);

// Delta = sum of the standard modules, with a basis of End(Delta) made of
// maps between summands; the identity of each summand comes first in its block.
struct DeltaEndomorphisms {
  GradedModule delta;
  std::vector<EndoBasis> basis;
  std::vector<size_t> identities;
};
DeltaEndomorphisms delta_endomorphisms(const StratifiedData& s);

// Delta as a module over Gamma_0 = End(Delta), compared with the regular module.
Verdict delta_matches_gamma0(const DeltaEndomorphisms& d, const ExtAlgebra& g, const IsoOptions& opts = {});

struct Theorem52Report {
  Verdict stratified;
  std::vector<Verdict> linearly_filtered;
  Verdict delta_is_gamma0;
  bool preconditions = false;
  std::string refusal;
  ExtAlgebra gamma;
  std::vector<size_t> gamma_dims;
  Verdict projective;
  KoszulVerdict generalized;
  Verdict commutation;
  std::optional<KoszulVerdict> bar_classical;
  std::vector<size_t> bar_dims;
  // Preconditions verified and some conclusion Fails.
  bool violation = false;
};

// With strict set, a precondition that does not hold throws PreconditionFailed.
Theorem52Report theorem52_pipeline(const StratifiedData& s, int bound, bool strict = false);

}  // namespace koszul
