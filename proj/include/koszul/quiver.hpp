#pragma once

#include <string>
#include <vector>

#include "koszul/algebra.hpp"

namespace koszul {

struct Arrow {
  std::string name;
  size_t source = 0;
  size_t target = 0;
  int degree = 1;
};

// A path written right to left: arrows.front() is applied last. A path with
// no arrows is the trivial path at `vertex`.
struct Path {
  std::vector<size_t> arrows;
  size_t vertex = 0;
  friend bool operator<(const Path& a, const Path& b) {
    return a.arrows != b.arrows ? a.arrows < b.arrows : a.vertex < b.vertex;
  }
  friend bool operator==(const Path& a, const Path& b) = default;
};

struct PathTerm {
  Scalar coeff;
  Path path;
};
using PathCombination = std::vector<PathTerm>;

struct QuiverPresentation {
  Field field = Field::rationals();
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<PathCombination> relations;
  int truncation = 10;
  // Longest degree-0 path allowed before the degree-0 part is declared infinite.
  int degree_zero_length_bound = 24;

  size_t vertex_index(const std::string& name) const;
  size_t source(const Path& p) const;
  size_t target(const Path& p) const;
  int degree(const Path& p) const;
  std::string path_label(const Path& p) const;
  // "a*b" means b then a; "1_x" or "e_x" is the trivial path at x.
  Path parse_path(const std::string& text) const;
  // Linear combination such as "theta*alpha - alpha*delta" or "2*a - 1/2*b".
  PathCombination parse_combination(const std::string& text) const;
  // Adds relations from text: "a = b" gives a - b, and "a = b = 0" gives a and b.
  void add_relations(const std::string& text);
};

struct QuiverAlgebra {
  GradedAlgebra algebra;
  std::vector<Vec> vertex_elements;
  std::vector<Vec> arrow_elements;
  // Element given by a path combination; paths beyond the window map to zero.
  Vec element(const PathCombination& c) const;
};

QuiverAlgebra build_quiver_algebra(const QuiverPresentation& q);
GradedAlgebra build_graded(const QuiverPresentation& q);

}  // namespace koszul
