#pragma once

#include <cstdint>
#include <vector>

#include "koszul/algebra.hpp"
#include "koszul/quiver.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

// Images of the vertices and arrows of a presentation inside a graded algebra.
struct PresentationMatch {
  Verdict verdict;
  std::vector<Vec> vertex_images;
  std::vector<Vec> arrow_images;
};

struct PresentationMatchOptions {
  // Nodes visited by the backtracking search before giving up.
  size_t budget = 400000;
  // Seeds the random candidates used when a Peirce component is too large to enumerate.
  uint64_t seed = 1;
};

// Holds when the assignment extends to a graded algebra isomorphism from the
// presented algebra onto the target: relations map to zero, the map is
// multiplicative on every pair of basis elements within the known window, and
// it is bijective degree by degree.
Verdict check_presentation_map(const QuiverPresentation& q, const GradedAlgebra& target,
                               const std::vector<Vec>& vertex_images, const std::vector<Vec>& arrow_images);

// Searches for such an isomorphism. Vertices go to a complete set of primitive
// idempotents of the target, arrows to the matching Peirce components (inside
// the radical for degree-0 arrows). Over GF(p) a finished search without a
// match is a proof; over the rationals coefficients are drawn from {-1, 0, 1}
// first and then at random, and a miss is reported as inconclusive.
PresentationMatch match_presentation(const QuiverPresentation& q, const GradedAlgebra& target,
                                     const PresentationMatchOptions& opts = {});

}  // namespace koszul

namespace koszul {

// Central idempotents of a graded algebra, from the linkage classes of the
// primitive idempotents of A_0 through all known degrees.
std::vector<Vec> graded_block_idempotents(const GradedAlgebra& a);
// The graded algebra eAe for an idempotent e of degree 0, with unit e.
GradedAlgebra graded_corner(const GradedAlgebra& a, const Vec& e);

}  // namespace koszul
