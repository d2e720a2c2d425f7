#include <gtest/gtest.h>

#include "koszul/module.hpp"
#include "koszul/quiver.hpp"

using namespace koszul;

namespace {

QuiverPresentation loop_and_arrow() {
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"delta", 0, 0, 0}, {"alpha", 0, 1, 1}};
  q.add_relations("delta*delta = alpha*delta = 0");
  q.truncation = 6;
  return q;
}

QuiverPresentation two_loops_commuting() {
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"delta", 0, 0, 0}, {"theta", 1, 1, 0}, {"alpha", 0, 1, 1}};
  q.add_relations("delta*delta = theta*theta = 0");
  q.add_relations("theta*alpha = alpha*delta");
  q.truncation = 6;
  return q;
}

struct Fixture {
  QuiverAlgebra qa;
  AlgebraPtr alg;
  explicit Fixture(const QuiverPresentation& q) : qa(build_quiver_algebra(q)) {
    alg = std::make_shared<const GradedAlgebra>(qa.algebra);
  }
  GradedModule projective(size_t v) const {
    return projective_module(alg, qa.vertex_elements[v]).module;
  }
};

}  // namespace

TEST(GradedModule, RegularModuleIsValid) {
  Fixture fx(two_loops_commuting());
  GradedModule a = regular_module(fx.alg);
  EXPECT_EQ(a.dims(), (std::vector<size_t>{4, 2}));
  EXPECT_TRUE(a.complete());
  EXPECT_NO_THROW(validate_module(a));
}

TEST(GradedModule, DegreeZeroModuleGeneratedInDegreeZero) {
  Fixture fx(loop_and_arrow());
  GradedModule a0 = degree_zero_module(fx.alg);
  EXPECT_EQ(a0.dims(), (std::vector<size_t>{3}));
  EXPECT_NO_THROW(validate_module(a0));
  EXPECT_TRUE(is_generated_in_degree(a0, 0).ok());
}

TEST(GradedModule, RadicalOfProjectiveNotGeneratedInDegreeZero) {
  Fixture fx(two_loops_commuting());
  GradedModule px = fx.projective(0);
  EXPECT_EQ(px.dims(), (std::vector<size_t>{2, 2}));
  GradedModule rad = make_submodule(px, graded_radical(px)).module;
  EXPECT_EQ(rad.dims(), (std::vector<size_t>{1, 2}));
  Verdict v = is_generated_in_degree(rad, 0);
  EXPECT_EQ(v.status, Status::Fails);
  EXPECT_EQ(v.degree, 1);
}

TEST(GradedModule, JMultipleOfTrivialModuleIsZero) {
  Fixture fx(two_loops_commuting());
  EXPECT_TRUE(j_multiple(degree_zero_module(fx.alg), 1).module.is_zero());
}

TEST(GradedModule, JMultipleOfProjective) {
  Fixture fx(two_loops_commuting());
  GradedModule px = fx.projective(0);
  EXPECT_EQ(j_multiple(px, 0).module.dims(), px.dims());
  GradedModule jp = j_multiple(px, 1).module;
  EXPECT_EQ(jp.dims(), (std::vector<size_t>{0, 2}));
  EXPECT_TRUE(is_generated_in_degree(jp, 1).ok());
  EXPECT_EQ(is_generated_in_degree(jp, 0).status, Status::Fails);
}

TEST(GradedModule, ShiftOfSimple) {
  Fixture fx(two_loops_commuting());
  GradedModule sy = top(fx.projective(1));
  EXPECT_EQ(sy.dims(), (std::vector<size_t>{1}));
  GradedModule s1 = shift(sy, 1);
  EXPECT_EQ(s1.dims(), (std::vector<size_t>{0, 1}));
  EXPECT_NO_THROW(validate_module(s1));
  EXPECT_EQ(shift(s1, -1).dims(), sy.dims());
  EXPECT_EQ(shift(sy, 0).dims(), sy.dims());
}

TEST(GradedModule, NegativeShiftRecordsDroppedPart) {
  Fixture fx(two_loops_commuting());
  std::string note;
  GradedModule m = shift(fx.projective(0), -1, &note);
  EXPECT_EQ(m.dims(), (std::vector<size_t>{2}));
  EXPECT_FALSE(note.empty());
  EXPECT_NO_THROW(validate_module(m));
}

TEST(GradedModule, TopOfProjectiveAndRadical) {
  Fixture fx(two_loops_commuting());
  GradedModule px = fx.projective(0);
  EXPECT_EQ(top(px).dims(), (std::vector<size_t>{1}));
  GradedModule rad = make_submodule(px, graded_radical(px)).module;
  GradedModule t = top(rad);
  EXPECT_EQ(t.dims(), (std::vector<size_t>{1, 1}));
  EXPECT_NO_THROW(validate_module(t));
  // The degree-0 part is S_x and the degree-1 part is S_y.
  const auto& dz = fx.alg->degree_zero();
  Vec ex(fx.alg->dim()), ey(fx.alg->dim());
  std::copy(dz.idempotents[0].begin(), dz.idempotents[0].end(), ex.begin());
  std::copy(dz.idempotents[1].begin(), dz.idempotents[1].end(), ey.begin());
  EXPECT_EQ(rank(t.element_action(ex, 0, 0)), 1u);
  EXPECT_EQ(rank(t.element_action(ey, 0, 1)), 1u);
}

TEST(GradedModule, TopOfSemisimpleIsItself) {
  Fixture fx(two_loops_commuting());
  GradedModule s = top(fx.projective(0));
  EXPECT_EQ(top(s).dims(), s.dims());
}

TEST(GradedModule, ProjectivityOverDegreeZero) {
  Fixture fx(loop_and_arrow());
  EXPECT_TRUE(is_projective_over_a0(regular_module(fx.alg)).ok());
  auto op = std::make_shared<const GradedAlgebra>(opposite(*fx.alg));
  Verdict v = is_projective_over_a0(regular_module(op));
  EXPECT_EQ(v.status, Status::Fails);
  EXPECT_EQ(v.degree, 1);
}

TEST(GradedModule, SemisimpleDegreeZeroMakesEverythingProjective) {
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"a", 0, 1, 1}, {"b", 0, 1, 1}};
  auto alg = std::make_shared<const GradedAlgebra>(build_graded(q));
  GradedModule a = regular_module(alg);
  EXPECT_TRUE(is_projective_over_a0(a).ok());
  EXPECT_TRUE(is_projective_over_a0(top(a)).ok());
}

TEST(GradedModule, QuotientAndKernelMaps) {
  Fixture fx(two_loops_commuting());
  GradedModule px = fx.projective(0);
  Submodule rad = make_submodule(px, graded_radical(px));
  QuotientModule q = quotient(px, rad.spaces);
  ModuleMap inc = inclusion_map(rad);
  ModuleMap proj = projection_map(px, q);
  EXPECT_TRUE(is_homomorphism(rad.module, px, inc));
  EXPECT_TRUE(is_homomorphism(px, q.module, proj));
  Submodule k = kernel(px, q.module, proj);
  EXPECT_EQ(k.module.dims(), rad.module.dims());
  ModuleMap zero = compose(proj, inc);
  for (const auto& b : zero.blocks) EXPECT_TRUE(b.is_zero());
}

TEST(GradedModule, DirectSumDims) {
  Fixture fx(two_loops_commuting());
  GradedModule s = direct_sum({fx.projective(0), fx.projective(1)});
  EXPECT_EQ(s.dims(), (std::vector<size_t>{4, 2}));
  EXPECT_NO_THROW(validate_module(s));
}

TEST(GradedModule, TruncatedAlgebraKeepsWindow) {
  QuiverPresentation q;
  q.vertices = {"x"};
  q.arrows = {{"t", 0, 0, 1}};
  q.truncation = 4;
  auto alg = std::make_shared<const GradedAlgebra>(build_graded(q));
  GradedModule a = regular_module(alg);
  EXPECT_FALSE(a.complete());
  EXPECT_EQ(a.known_through(), 4);
  Verdict v = is_generated_in_degree(a, 0);
  EXPECT_TRUE(v.ok());
  EXPECT_EQ(v.window, 4);
  EXPECT_NO_THROW(validate_module(a));
}

TEST(GradedModuleProperty, JMultiplesCompose) {
  for (auto q : {loop_and_arrow(), two_loops_commuting()}) {
    Fixture fx(q);
    for (size_t v = 0; v < 2; ++v) {
      GradedModule p = fx.projective(v);
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
          EXPECT_EQ(j_multiple(p, i + j).module.dims(), j_multiple(j_multiple(p, i).module, j).module.dims());
    }
  }
}

TEST(GradedModuleProperty, TopVanishesOnlyOnZero) {
  for (auto q : {loop_and_arrow(), two_loops_commuting()}) {
    Fixture fx(q);
    for (size_t v = 0; v < 2; ++v) {
      GradedModule p = fx.projective(v);
      for (int i = 0; i <= 2; ++i) {
        GradedModule m = j_multiple(p, i).module;
        EXPECT_EQ(top(m).is_zero(), m.is_zero());
      }
    }
  }
}
