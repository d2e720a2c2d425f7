#include <gtest/gtest.h>

#include "koszul/algebra_iso.hpp"
#include "koszul/bar.hpp"
#include "koszul/errors.hpp"
#include "koszul/iso.hpp"
#include "support/examples.hpp"

using namespace koszul;
using namespace fixtures;

namespace {

QuiverPresentation named_line(std::vector<std::string> vertices, std::vector<std::string> arrows) {
  QuiverPresentation q;
  q.vertices = std::move(vertices);
  for (size_t i = 0; i < arrows.size(); ++i) q.arrows.push_back({arrows[i], i, i + 1, 1});
  return q;
}

bool same_spaces(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// r M in each degree.
std::vector<Subspace> radical_times(const GradedModule& m) {
  const GradedAlgebra& a = m.algebra();
  const Subspace& r = a.degree_zero().radical;
  std::vector<Subspace> out;
  for (int d = 0; d <= m.top(); ++d) {
    std::vector<Vec> gens;
    for (size_t j = 0; j < r.dim(); ++j) {
      Vec e(a.dim());
      Vec rv = r.basis_vector(j);
      std::copy(rv.begin(), rv.end(), e.begin());
      Matrix act = m.element_action(e, 0, d);
      for (size_t c = 0; c < act.cols(); ++c) gens.push_back(act.column(c));
    }
    out.push_back(Subspace::span(m.field(), m.dim(d), gens));
  }
  return out;
}

}  // namespace

TEST(Bar, IdealAndQuotientForCommutingLoops) {
  QuiverAlgebra qa = build_quiver_algebra(two_loops(true));
  auto a = std::make_shared<const GradedAlgebra>(qa.algebra);
  const QuiverPresentation q = two_loops(true);
  BarData b = bar_algebra(a);
  EXPECT_EQ(b.ideal.dim(), 3u);
  for (const char* e : {"delta", "theta", "theta*alpha"}) EXPECT_TRUE(b.ideal.contains(qa.element(q.parse_combination(e)))) << e;
  EXPECT_EQ(b.ideal_dims, (std::vector<size_t>{2, 1}));
  EXPECT_EQ(b.bar->dims(), (std::vector<size_t>{2, 1}));
  EXPECT_TRUE(b.bar->degree_zero().radical.dim() == 0);
  validate(*b.bar);
  PresentationMatch pm = match_presentation(named_line({"x", "y"}, {"alpha"}), *b.bar);
  EXPECT_TRUE(pm.verdict.ok()) << pm.verdict.witness;
}

TEST(Bar, RadicalOfProjectiveBarsToTwoSimples) {
  auto a = make(two_loops(true));
  BarData b = bar_algebra(a);
  GradedModule px = proj(a, 0);
  GradedModule m = make_submodule(px, graded_radical(px)).module;
  EXPECT_EQ(m.dims(), (std::vector<size_t>{1, 2}));
  EXPECT_TRUE(is_generated_in_degree(m, 0).failed());
  GradedModule mb = bar_module(b, m).module;
  validate_module(mb);
  EXPECT_EQ(mb.dims(), (std::vector<size_t>{1, 1}));
  EXPECT_TRUE(is_generated_in_degree(mb, 0).failed());
  GradedModule sx = top(proj(b.bar, 0));
  GradedModule sy1 = shift(top(proj(b.bar, 1)), 1);
  EXPECT_TRUE(graded_iso(mb, direct_sum({sx, sy1})).verdict.ok());
  EXPECT_EQ(top(mb).total_dim(), 2u);
}

TEST(Bar, LoopAndLineGivesTypeA4) {
  QuiverAlgebra qa = build_quiver_algebra(loop_and_line());
  auto a = std::make_shared<const GradedAlgebra>(qa.algebra);
  const QuiverPresentation q = loop_and_line();
  BarData b = bar_algebra(a);
  EXPECT_EQ(b.ideal.dim(), 3u);
  for (const char* e : {"delta", "alpha*delta", "beta*alpha*delta"})
    EXPECT_TRUE(b.ideal.contains(qa.element(q.parse_combination(e)))) << e;
  EXPECT_EQ(b.bar->dims(), (std::vector<size_t>{4, 3, 2, 1}));
  PresentationMatch pm = match_presentation(named_line({"x", "y", "z", "w"}, {"a", "b", "c"}), *b.bar);
  EXPECT_TRUE(pm.verdict.ok()) << pm.verdict.witness;
  EXPECT_TRUE(commutation_check(*a).failed());
}

TEST(Bar, SemisimpleDegreeZeroLeavesAlgebraUnchanged) {
  auto a = make(line(3));
  BarData b = bar_algebra(a);
  EXPECT_EQ(b.ideal.dim(), 0u);
  EXPECT_EQ(b.bar->dims(), a->dims());
  EXPECT_TRUE(match_presentation(line(3), *b.bar).verdict.ok());
}

TEST(Bar, ProjectivesBarToProjectives) {
  for (bool commuting : {true, false}) {
    auto a = make(two_loops(commuting));
    BarData b = bar_algebra(a);
    for (size_t c = 0; c < 2; ++c) {
      GradedModule pb = bar_module(b, proj(a, c)).module;
      EXPECT_TRUE(graded_iso(pb, proj(b.bar, c)).verdict.ok());
    }
  }
}

TEST(Bar, CommutationCheck) {
  EXPECT_TRUE(commutation_check(*make(two_loops(true))).ok());
  EXPECT_TRUE(commutation_check(*make(three_loops())).ok());
  EXPECT_TRUE(commutation_check(*make(dual_numbers(0))).ok());
  EXPECT_TRUE(commutation_check(*make(loop_and_arrow())).ok());
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"delta", 0, 0, 0}, {"alpha", 0, 1, 1}};
  q.add_relations("delta*delta = 0");
  Verdict v = commutation_check(*make(q));
  EXPECT_TRUE(v.failed());
  EXPECT_NE(v.witness.find("alpha*delta"), std::string::npos) << v.witness;
}

TEST(Bar, CommutationGivesOneSidedIdeal) {
  for (const auto& q : {two_loops(true), three_loops()}) {
    auto a = make(q);
    ASSERT_TRUE(commutation_check(*a).ok());
    BarData b = bar_algebra(a);
    GradedModule reg = regular_module(a);
    EXPECT_TRUE(same_spaces(ideal_times_module(b, reg), radical_times(reg)));
    for (size_t c = 0; c < a->degree_zero().representatives.size(); ++c) {
      GradedModule p = proj(a, c);
      GradedModule m = make_submodule(p, graded_radical(p)).module;
      EXPECT_TRUE(same_spaces(ideal_times_module(b, m), radical_times(m)));
    }
  }
}

TEST(Bar, BarringZeroAndNonzeroModules) {
  auto a = make(two_loops(false));
  BarData b = bar_algebra(a);
  EXPECT_TRUE(bar_module(b, zero_module(a)).module.is_zero());
  GradedModule px = proj(a, 0);
  std::vector<GradedModule> ms{px, top(px), make_submodule(px, graded_radical(px)).module, regular_module(a)};
  for (const auto& m : ms) EXPECT_FALSE(bar_module(b, m).module.is_zero());
}

TEST(Bar, DualNumbersSequenceDoesNotStayExact) {
  QuiverAlgebra qa = build_quiver_algebra(dual_numbers(0));
  auto a = std::make_shared<const GradedAlgebra>(qa.algebra);
  GradedModule reg = regular_module(a);
  Submodule s = generated_submodule(reg, {{0, qa.arrow_elements[0]}});
  QuotientModule q = quotient(reg, s.spaces);
  ModuleMap f = inclusion_map(s), g = projection_map(reg, q);
  ASSERT_TRUE(short_exact(s.module, reg, q.module, f, g).ok());
  EXPECT_TRUE(is_projective_over_a0(s.module).failed());

  BarData b = bar_algebra(a);
  EXPECT_EQ(b.bar->dims(), (std::vector<size_t>{1}));
  BarModule sb = bar_module(b, s.module), rb = bar_module(b, reg), qb = bar_module(b, q.module);
  ModuleMap fb = bar_map(sb, rb, f), gb = bar_map(rb, qb, g);
  EXPECT_TRUE(fb.block(0).is_zero());
  EXPECT_TRUE(short_exact(sb.module, rb.module, qb.module, fb, gb).failed());
}

TEST(Bar, PipelineAgreesOnThreeLoops) {
  auto a = make(three_loops());
  CorrespondenceReport r = correspondence_pipeline(a, std::nullopt, 6);
  EXPECT_FALSE(r.refused) << r.refusal;
  EXPECT_TRUE(r.generalized.verdict.ok());
  EXPECT_TRUE(r.classical.verdict.ok());
  EXPECT_TRUE(r.agreement);
  EXPECT_FALSE(r.theorem_violation);
  EXPECT_EQ(r.bar_dims, (std::vector<size_t>{3, 2, 1}));
}

TEST(Bar, PipelineRefusesWithoutCommutation) {
  auto a = make(loop_and_line());
  CorrespondenceReport r = correspondence_pipeline(a, std::nullopt, 6);
  EXPECT_TRUE(r.refused);
  EXPECT_NE(r.refusal.find("commutation"), std::string::npos);
  EXPECT_TRUE(r.generalized.verdict.failed());
  EXPECT_TRUE(r.classical.verdict.ok());
  EXPECT_FALSE(r.agreement);
  EXPECT_FALSE(r.theorem_violation);
  EXPECT_THROW(correspondence_pipeline(a, std::nullopt, 6, true), PreconditionFailed);
}

TEST(Bar, PipelineRefusesWithoutProjectivity) {
  auto a = make(two_loops(false));
  GradedModule px = proj(a, 0);
  Submodule sy = generated_submodule(px, {{1, unit_vec(px.dim(1), 0)}});
  GradedModule dx = quotient(px, sy.spaces).module;
  CorrespondenceReport r = correspondence_pipeline(a, dx, 6);
  EXPECT_TRUE(r.commutation.ok());
  EXPECT_TRUE(r.refused);
  EXPECT_TRUE(r.algebra_projective.failed());
  EXPECT_NE(r.refusal.find("A projective"), std::string::npos);
  EXPECT_TRUE(r.generalized.verdict.failed());
  EXPECT_EQ(r.generalized.step, 2);
  EXPECT_TRUE(r.classical.verdict.ok());

  BarData b = bar_algebra(a);
  GradedModule db = bar_module(b, dx).module;
  EXPECT_TRUE(graded_iso(db, top(proj(b.bar, 0))).verdict.ok());
  CorrespondenceReport ra = correspondence_pipeline(a, std::nullopt, 6);
  EXPECT_TRUE(ra.generalized.verdict.failed());
  EXPECT_TRUE(ra.classical.verdict.ok());
}

TEST(Bar, PipelineAgreesOnCommutingLoopsModules) {
  auto a = make(two_loops(true));
  GradedModule px = proj(a, 0);
  std::vector<GradedModule> ms{degree_zero_module(a), px, make_submodule(px, graded_radical(px)).module,
                               shift(proj(a, 1), 1)};
  for (const auto& m : ms) {
    CorrespondenceReport r = correspondence_pipeline(a, m, 5);
    EXPECT_FALSE(r.theorem_violation) << dims_string(m.dims());
    if (!r.refused) EXPECT_TRUE(r.agreement) << dims_string(m.dims());
  }
}
