#pragma once

// Random small graded quiver algebras and modules over them, for the
// property suites. Everything is driven by an explicit seed.

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/quiver.hpp"
#include "koszul/resolution.hpp"

namespace randomized {

using namespace koszul;

struct AlgebraShape {
  size_t max_vertices = 3;
  // Degree-1 arrows; zero leaves a semisimple-by-loops algebra concentrated in degree 0.
  size_t max_positive_arrows = 3;
  double loop_probability = 0.5;
  double degree_zero_arrow_probability = 0.3;
  double zero_relation_probability = 0.35;
  double commuting_probability = 0.5;
  // Ungraded algebras for the stratified suite: every arrow in degree 0.
  bool ungraded = false;
};

inline Field random_field(std::mt19937_64& rng) {
  static const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)};
  return fields[std::uniform_int_distribution<size_t>(0, fields.size() - 1)(rng)];
}

// Vertices are ordered so that every non-loop arrow goes from a lower to a
// higher index; loops square to zero. The algebra is finite dimensional.
inline QuiverPresentation random_presentation(std::mt19937_64& rng, const AlgebraShape& shape, Field f) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  QuiverPresentation q;
  q.field = f;
  size_t n = std::uniform_int_distribution<size_t>(1, shape.max_vertices)(rng);
  for (size_t v = 0; v < n; ++v) q.vertices.push_back("v" + std::to_string(v));
  std::vector<std::string> squares;
  for (size_t v = 0; v < n; ++v)
    if (coin(rng) < shape.loop_probability) {
      std::string name = "l" + std::to_string(v);
      q.arrows.push_back({name, v, v, 0});
      squares.push_back(name + "*" + name);
    }
  for (size_t s = 0; s < n; ++s)
    for (size_t t = s + 1; t < n; ++t)
      if (coin(rng) < shape.degree_zero_arrow_probability)
        q.arrows.push_back({"z" + std::to_string(s) + std::to_string(t), s, t, 0});
  if (n > 1) {
    size_t k = std::uniform_int_distribution<size_t>(shape.ungraded ? 0 : 1, shape.max_positive_arrows)(rng);
    for (size_t i = 0; i < k; ++i) {
      size_t s = std::uniform_int_distribution<size_t>(0, n - 2)(rng);
      size_t t = std::uniform_int_distribution<size_t>(s + 1, n - 1)(rng);
      q.arrows.push_back({"a" + std::to_string(i), s, t, shape.ungraded ? 0 : 1});
    }
  }
  for (const auto& sq : squares) q.add_relations(sq + " = 0");
  // Arrow names by index for relation texts.
  auto name = [&](size_t i) { return q.arrows[i].name; };
  for (size_t i = 0; i < q.arrows.size(); ++i)
    for (size_t j = 0; j < q.arrows.size(); ++j) {
      const Arrow& first = q.arrows[j];
      const Arrow& second = q.arrows[i];
      if (first.target != second.source || i == j) continue;
      if (first.source == first.target && second.source == second.target) continue;
      if (coin(rng) < shape.zero_relation_probability) q.add_relations(name(i) + "*" + name(j) + " = 0");
    }
  // theta*alpha = c alpha*delta for loops delta, theta at the ends of alpha.
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (a.source == a.target) continue;
    std::optional<size_t> ls, lt;
    for (size_t j = 0; j < q.arrows.size(); ++j) {
      if (q.arrows[j].source == q.arrows[j].target && q.arrows[j].source == a.source && q.arrows[j].degree == 0) ls = j;
      if (q.arrows[j].source == q.arrows[j].target && q.arrows[j].source == a.target && q.arrows[j].degree == 0) lt = j;
    }
    if (ls && lt && coin(rng) < shape.commuting_probability) {
      int c = std::uniform_int_distribution<int>(1, 2)(rng);
      q.add_relations(name(*lt) + "*" + name(i) + " = " + std::to_string(c) + "*" + name(i) + "*" + name(*ls));
    }
  }
  return q;
}

inline AlgebraPtr build(const QuiverPresentation& q) {
  return std::make_shared<const GradedAlgebra>(build_graded(q));
}

inline Vec random_vector(std::mt19937_64& rng, const Field& f, size_t n) {
  std::uniform_int_distribution<int> c(-2, 2);
  Vec v(n);
  for (auto& x : v) x = f.from_int(c(rng));
  return v;
}

inline GradedModule projective(const AlgebraPtr& a, size_t cls) { return ProjectiveFactory(a).indecomposable(cls).module; }

inline size_t num_classes(const AlgebraPtr& a) { return a->degree_zero().representatives.size(); }

// One of: an indecomposable projective, a simple, A_0, a radical, a
// quotient of a projective by a random cyclic submodule, or a sum of two.
inline GradedModule random_module(std::mt19937_64& rng, const AlgebraPtr& a, int depth = 0) {
  size_t classes = num_classes(a);
  size_t c = std::uniform_int_distribution<size_t>(0, classes - 1)(rng);
  int kind = std::uniform_int_distribution<int>(0, depth > 0 ? 5 : 6)(rng);
  switch (kind) {
    case 0:
      return projective(a, c);
    case 1:
      return top(projective(a, c));
    case 2:
      return degree_zero_module(a);
    case 3: {
      GradedModule p = projective(a, c);
      return make_submodule(p, graded_radical(p)).module;
    }
    case 4:
    case 5: {
      GradedModule p = projective(a, c);
      int d = std::uniform_int_distribution<int>(0, p.top())(rng);
      if (p.dim(d) == 0) return p;
      Vec v = random_vector(rng, a->field(), p.dim(d));
      if (is_zero_vec(v)) return p;
      Submodule s = generated_submodule(p, {{d, v}});
      return quotient(p, s.spaces).module;
    }
    default:
      return direct_sum({random_module(rng, a, depth + 1), random_module(rng, a, depth + 1)});
  }
}

// A random submodule generated by one or two random homogeneous elements.
inline Submodule random_submodule(std::mt19937_64& rng, const GradedModule& m) {
  std::vector<ModuleElement> els;
  size_t count = std::uniform_int_distribution<size_t>(1, 2)(rng);
  for (size_t k = 0; k < count; ++k) {
    int d = std::uniform_int_distribution<int>(0, std::max(0, m.top()))(rng);
    if (m.dim(d) == 0) continue;
    els.push_back({d, random_vector(rng, m.field(), m.dim(d))});
  }
  return generated_submodule(m, els);
}

// A random algebra that builds; presentations that the builder refuses are
// redrawn.
inline std::pair<QuiverPresentation, AlgebraPtr> random_algebra(std::mt19937_64& rng, const AlgebraShape& shape,
                                                                 std::optional<Field> f = std::nullopt) {
  for (;;) {
    QuiverPresentation q = random_presentation(rng, shape, f ? *f : random_field(rng));
    try {
      return {q, build(q)};
    } catch (const Error&) {
    }
  }
}

}  // namespace randomized
