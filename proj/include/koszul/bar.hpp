#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/module.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

// The ideal R = A r A generated by the radical r of A_0, and A/R.
struct BarData {
  AlgebraPtr source;
  Subspace radical;  // in A_0 coordinates
  // R as a graded subspace of A in global coordinates, and its dimension per degree.
  Subspace ideal;
  std::vector<size_t> ideal_dims;
  AlgebraPtr bar;
  // Basis index in A of each basis element of A/R.
  std::vector<size_t> representatives;

  // Image in A/R of an element of A.
  Vec project(const Vec& a) const { return ideal.quotient_coordinates(a); }
};

BarData bar_algebra(const AlgebraPtr& a);

// M/RM as a module over A/R, with RM recorded per degree.
struct BarModule {
  GradedModule module;
  std::vector<Subspace> kernel;
};

// The submodule RM.
std::vector<Subspace> ideal_times_module(const BarData& b, const GradedModule& m);
BarModule bar_module(const BarData& b, const GradedModule& m);
// Map induced on the barred modules.
ModuleMap bar_map(const BarModule& src, const BarModule& tgt, const ModuleMap& f);

// Holds iff r A_1 and A_1 r coincide as subspaces of A_1.
Verdict commutation_check(const GradedAlgebra& a);

// Checks that 0 -> l -> m -> n -> 0 is exact; the witness names the failing spot.
Verdict short_exact(const GradedModule& l, const GradedModule& m, const GradedModule& n, const ModuleMap& f,
                    const ModuleMap& g);

struct CorrespondenceReport {
  Verdict commutation;
  Verdict algebra_projective;
  std::optional<Verdict> module_projective;
  bool refused = false;
  std::string refusal;
  // Generalized check on A (or M) and classical check on A/R (or M/RM).
  KoszulVerdict generalized;
  KoszulVerdict classical;
  bool agreement = false;
  // Set when the preconditions hold and the two verdicts contradict each other.
  bool theorem_violation = false;
  std::vector<size_t> bar_dims;
};

// Runs the generalized check on A or M and the classical check on the barred
// side, independently. The report is marked refused when the commutation or
// A_0-projectivity hypotheses do not hold; with strict set this throws
// PreconditionFailed instead.
CorrespondenceReport correspondence_pipeline(const AlgebraPtr& a, const std::optional<GradedModule>& m, int bound,
                                             bool strict = false);

}  // namespace koszul
