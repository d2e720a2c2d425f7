#include <gtest/gtest.h>

#include <set>

#include "koszul/algebra_iso.hpp"
#include "koszul/categories.hpp"
#include "koszul/errors.hpp"
#include "support/examples.hpp"

using namespace koszul;
using namespace fixtures;

namespace {

// Category of a finite poset given by its order relation leq[x][y].
FiniteCategory poset_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq) {
  size_t n = names.size();
  std::vector<Morphism> ms;
  std::vector<std::vector<size_t>> idx(n, std::vector<size_t>(n, FiniteCategory::none));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (leq[x][y]) {
        idx[x][y] = ms.size();
        ms.push_back({x, y, names[x] + "<" + names[y]});
      }
  std::vector<size_t> comp(ms.size() * ms.size(), FiniteCategory::none);
  for (size_t g = 0; g < ms.size(); ++g)
    for (size_t f = 0; f < ms.size(); ++f)
      if (ms[f].target == ms[g].source) comp[g * ms.size() + f] = idx[ms[f].source][ms[g].target];
  std::vector<size_t> ids;
  for (size_t x = 0; x < n; ++x) ids.push_back(idx[x][x]);
  return FiniteCategory(names, ms, ids, comp);
}

std::vector<Subgroup> c6_subgroups(const FiniteGroup& g) {
  return {{"x", {g.identity()}},
          {"y", g.generated({g.element("g^3")})},
          {"z", g.generated({g.element("g^2")})},
          {"w", g.generated({g.element("g")})}};
}

std::vector<Subgroup> s3_subgroups(const FiniteGroup& g) {
  std::vector<size_t> swap, cycle;
  for (size_t a = 0; a < g.order(); ++a) {
    if (g.name(a) == "[1 0 2]") swap = {a};
    if (g.name(a) == "[1 2 0]") cycle = {a};
  }
  std::vector<size_t> all(g.order());
  for (size_t a = 0; a < g.order(); ++a) all[a] = a;
  return {{"1", {g.identity()}}, {"C2", g.generated(swap)}, {"C3", g.generated(cycle)}, {"S3", all}};
}

QuiverPresentation diamond(Field f) {
  QuiverPresentation q;
  q.field = f;
  q.vertices = {"b", "l", "r", "t"};
  q.arrows = {{"p", 0, 1, 1}, {"q", 0, 2, 1}, {"u", 1, 3, 1}, {"v", 2, 3, 1}};
  q.add_relations("u*p = v*q");
  return q;
}

QuiverPresentation doubled_arrows_with_relations() {
  QuiverPresentation q;
  q.vertices = {"x", "y", "z"};
  q.arrows = {{"alpha1", 0, 1, 1}, {"alpha2", 0, 1, 1}, {"beta1", 1, 2, 1}, {"beta2", 1, 2, 1}};
  q.add_relations("beta2*alpha1 = beta1*alpha2");
  q.add_relations("beta2*alpha2 = 0");
  return q;
}

QuiverPresentation doubled_first_arrow() {
  QuiverPresentation q;
  q.vertices = {"x", "y", "z", "w"};
  q.arrows = {{"alpha", 0, 1, 1}, {"alpha2", 0, 1, 1}, {"beta", 1, 2, 1}, {"gamma", 2, 3, 1}};
  q.add_relations("gamma*beta*alpha2 = 0");
  return q;
}

}  // namespace

TEST(Groups, Constructions) {
  EXPECT_EQ(FiniteGroup::cyclic(6).order(), 6u);
  EXPECT_EQ(FiniteGroup::symmetric(3).order(), 6u);
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24u);
  EXPECT_EQ(FiniteGroup::dihedral(4).order(), 8u);
  FiniteGroup p = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  EXPECT_EQ(p.order(), 6u);
  FiniteGroup c6 = FiniteGroup::cyclic(6);
  EXPECT_EQ(c6.generated({c6.element("g^2")}).size(), 3u);
  EXPECT_TRUE(c6.is_subgroup({0, 3}));
  EXPECT_FALSE(c6.is_subgroup({0, 1}));
  EXPECT_THROW(FiniteGroup({0, 1, 1, 1}), InvalidStructure);
  for (size_t a = 0; a < p.order(); ++a) EXPECT_EQ(p.mul(a, p.inv(a)), p.identity());
}

TEST(Transporter, CyclicGroupOfOrderSix) {
  FiniteGroup g = FiniteGroup::cyclic(6);
  FiniteCategory c = transporter_category(g, c6_subgroups(g));
  EXPECT_EQ(c.num_morphisms(), 54u);
  for (size_t x = 0; x < 4; ++x) EXPECT_EQ(c.hom(x, x).size(), 6u);
  const size_t x = 0, y = 1, z = 2, w = 3;
  for (auto [s, t] : std::vector<std::pair<size_t, size_t>>{{x, y}, {x, z}, {y, w}, {z, w}, {x, w}})
    EXPECT_EQ(c.hom(s, t).size(), 6u);
  EXPECT_TRUE(c.hom(y, z).empty());
  EXPECT_TRUE(c.hom(w, x).empty());
  std::set<size_t> via_y, via_z;
  for (size_t f : c.hom(x, y))
    for (size_t h : c.hom(y, w)) via_y.insert(c.compose(h, f));
  for (size_t f : c.hom(x, z))
    for (size_t h : c.hom(z, w)) via_z.insert(c.compose(h, f));
  EXPECT_EQ(via_y, via_z);
  EXPECT_EQ(via_y.size(), 6u);
  EXPECT_TRUE(is_ei(c).ok());
  EXPECT_TRUE(has_free_actions(c).ok());
}

TEST(Transporter, WholeGroupOnly) {
  FiniteGroup g = FiniteGroup::symmetric(3);
  std::vector<size_t> all(6);
  for (size_t a = 0; a < 6; ++a) all[a] = a;
  FiniteCategory c = transporter_category(g, {{"G", all}});
  EXPECT_EQ(c.num_objects(), 1u);
  EXPECT_EQ(c.hom(0, 0).size(), 6u);
  GradedAlgebra a = associated_graded_algebra(c, Field::rationals());
  EXPECT_EQ(a.dims(), (std::vector<size_t>{6}));
  size_t three_cycle = g.element("[1 2 0]");
  EXPECT_THROW(transporter_category(g, {{"bad", {g.identity(), three_cycle}}}), NotASubgroup);
}

TEST(Orbit, HomCountsMatchEnumeration) {
  FiniteGroup s3 = FiniteGroup::symmetric(3), c6 = FiniteGroup::cyclic(6), d4 = FiniteGroup::dihedral(4);
  std::vector<size_t> d4_all(d4.order());
  for (size_t a = 0; a < d4.order(); ++a) d4_all[a] = a;
  std::vector<size_t> rotation = d4.generated({d4.element("[1 2 3 0]")});
  std::vector<size_t> reflection = d4.generated({d4.element("[0 3 2 1]")});
  std::vector<std::pair<const FiniteGroup*, std::vector<Subgroup>>> cases{
      {&s3, s3_subgroups(s3)},
      {&c6, c6_subgroups(c6)},
      {&d4, {{"1", {d4.identity()}}, {"R", rotation}, {"F", reflection}, {"G", d4_all}}}};
  for (const auto& [g, subs] : cases) {
    FiniteCategory c = orbit_category(*g, subs);
    EXPECT_TRUE(is_ei(c).ok());
    EXPECT_TRUE(has_free_actions(c).ok());
    for (size_t h = 0; h < subs.size(); ++h)
      for (size_t k = 0; k < subs.size(); ++k)
        EXPECT_EQ(c.hom(h, k).size(), count_equivariant_maps(*g, subs[h], subs[k])) << subs[h].name << " " << subs[k].name;
  }
}

TEST(Orbit, TrivialSubgroupGivesTheGroup) {
  FiniteGroup g = FiniteGroup::symmetric(3);
  FiniteCategory c = orbit_category(g, {{"1", {g.identity()}}});
  EXPECT_EQ(c.hom(0, 0).size(), 6u);
  EXPECT_TRUE(is_ei(c).ok());
}

TEST(Grading, ChainPoset) {
  FiniteCategory c = poset_category({"x", "y", "z"}, {{true, true, true}, {false, true, true}, {false, false, true}});
  EIGrading gr = ei_grading(c);
  ASSERT_EQ(gr.classes.size(), 3u);
  EXPECT_EQ(gr.classes[1].size(), 2u);
  ASSERT_EQ(gr.classes[2].size(), 1u);
  EXPECT_EQ(c.morphism(gr.classes[2][0]).label, "x<z");
  GradedAlgebra a = associated_graded_algebra(c, Field::rationals(), gr);
  EXPECT_TRUE(match_presentation(line(3), a).verdict.ok());
}

TEST(Grading, OneObjectHasNoPositiveDegrees) {
  FiniteGroup g = FiniteGroup::cyclic(4);
  FiniteCategory c = transporter_category(g, {{"1", {g.identity()}}});
  EXPECT_EQ(ei_grading(c).classes.size(), 1u);
}

TEST(Grading, IsomorphicObjectsAreRejected) {
  FiniteGroup g = FiniteGroup::symmetric(3);
  auto subs = s3_subgroups(g);
  std::vector<size_t> other;
  for (size_t a = 0; a < g.order(); ++a)
    if (g.name(a) == "[0 2 1]") other = g.generated({a});
  FiniteCategory c = transporter_category(g, {subs[1], {"C2'", other}});
  EXPECT_THROW(ei_grading(c), NotEI);
}

TEST(Grading, TransporterOverCyclicGroup) {
  FiniteGroup g = FiniteGroup::cyclic(6);
  FiniteCategory c = transporter_category(g, c6_subgroups(g));
  EIGrading gr = ei_grading(c);
  ASSERT_EQ(gr.classes.size(), 3u);
  EXPECT_EQ(gr.classes[0].size(), 24u);
  EXPECT_EQ(gr.classes[1].size(), 24u);
  EXPECT_EQ(gr.classes[2].size(), 6u);
  for (size_t f : gr.classes[2]) {
    EXPECT_EQ(c.morphism(f).source, 0u);
    EXPECT_EQ(c.morphism(f).target, 3u);
  }
  for (size_t f : gr.classes[1]) EXPECT_FALSE(c.morphism(f).source == 0 && c.morphism(f).target == 3);
}

TEST(Associated, TransporterAlgebraOverGF3) {
  FiniteGroup g = FiniteGroup::cyclic(6);
  FiniteCategory c = transporter_category(g, c6_subgroups(g));
  Field f3 = Field::prime(3);
  auto a = std::make_shared<const GradedAlgebra>(associated_graded_algebra(c, f3));
  validate(*a);
  EXPECT_EQ(a->dims(), (std::vector<size_t>{24, 24, 6}));
  EXPECT_EQ(nonendomorphism_power_dims(c, f3), (std::vector<size_t>{24, 24, 6}));
  EXPECT_EQ(a->degree_zero().radical.dim(), 16u);
  EXPECT_TRUE(is_projective_over_a0(regular_module(a)).ok());
  EXPECT_TRUE(commutation_check(*a).ok());

  BarData b = bar_algebra(a);
  EXPECT_EQ(b.bar->dims(), (std::vector<size_t>{8, 8, 2}));
  EXPECT_TRUE(quotient_is_directed(*b.bar).ok());
  auto blocks = graded_block_idempotents(*b.bar);
  ASSERT_EQ(blocks.size(), 2u);
  for (const Vec& e : blocks) {
    GradedAlgebra blk = graded_corner(*b.bar, e);
    validate(blk);
    EXPECT_EQ(blk.dims(), (std::vector<size_t>{4, 4, 1}));
    PresentationMatch pm = match_presentation(diamond(f3), blk);
    EXPECT_TRUE(pm.verdict.ok()) << pm.verdict.witness;
  }
}

TEST(Associated, CyclicGroupRadicalOverGF3) {
  FiniteGroup g = FiniteGroup::cyclic(6);
  FiniteCategory c = transporter_category(g, {{"1", {g.identity()}}});
  auto a = std::make_shared<const GradedAlgebra>(associated_graded_algebra(c, Field::prime(3)));
  EXPECT_EQ(a->degree_zero().radical.dim(), 4u);
  EXPECT_EQ(a->degree_zero().idempotents.size(), 2u);
}

TEST(BSub, ThreeLoops) {
  QuiverPresentation tq = three_loops();
  QuiverAlgebra qa = build_quiver_algebra(tq);
  auto a = std::make_shared<const GradedAlgebra>(qa.algebra);
  EXPECT_EQ(a->dims(), (std::vector<size_t>{6, 4, 2}));
  BSubalgebra b = build_b_subalgebra(a);
  EXPECT_EQ(b.b->dims(), (std::vector<size_t>{3, 4, 2}));
  validate(*b.b);
  auto in_b = [&](const std::string& text) {
    Vec v = qa.element(tq.parse_combination(text));
    Vec out(b.b->dim());
    for (size_t i = 0; i < out.size(); ++i) out[i] = v[b.embedding[i]];
    return out;
  };
  QuiverPresentation q = doubled_arrows_with_relations();
  std::vector<Vec> vi{in_b("1_x"), in_b("1_y"), in_b("1_z")};
  std::vector<Vec> ai{in_b("alpha"), in_b("alpha*delta"), in_b("beta"), in_b("beta*rho")};
  Verdict explicit_map = check_presentation_map(q, *b.b, vi, ai);
  EXPECT_TRUE(explicit_map.ok()) << explicit_map.witness;
  PresentationMatch pm = match_presentation(q, *b.b);
  EXPECT_TRUE(pm.verdict.ok()) << pm.verdict.witness;
  EXPECT_TRUE(algebra_is_classical_koszul(b.b, {6, false}).verdict.ok());
}

TEST(BSub, LoopAndLine) {
  auto a = make(loop_and_line());
  BSubalgebra b = build_b_subalgebra(a);
  EXPECT_TRUE(match_presentation(doubled_first_arrow(), *b.b).verdict.ok());
  EXPECT_TRUE(algebra_is_classical_koszul(b.b, {6, false}).verdict.failed());
}

TEST(BSub, TrivialEndomorphismsGiveTheSameAlgebra) {
  auto a = make(line(3));
  BSubalgebra b = build_b_subalgebra(a);
  EXPECT_EQ(b.b->dims(), a->dims());
  EXPECT_EQ(b.embedding.size(), a->dim());
}

TEST(BSub, RejectsCycles) {
  QuiverPresentation q;
  q.vertices = {"x", "y"};
  q.arrows = {{"a", 0, 1, 1}, {"b", 1, 0, 1}};
  q.add_relations("a*b = b*a = 0");
  EXPECT_THROW(build_b_subalgebra(make(q)), NotDirected);
}

TEST(BSub, RestrictionKeepsDimensions) {
  auto a = make(three_loops());
  BSubalgebra b = build_b_subalgebra(a);
  GradedModule a0 = degree_zero_module(a);
  GradedModule r = restrict_to_b(b, a0);
  validate_module(r);
  EXPECT_EQ(r.dims(), a0.dims());
  EXPECT_TRUE(is_classical_koszul(r, {6, false}).verdict.ok());
  GradedModule p = proj(b.b, 0);
  BSubalgebra bb = build_b_subalgebra(b.b);
  EXPECT_EQ(restrict_to_b(bb, p).dims(), p.dims());
}

TEST(Theorem42, AgreementOnExamples) {
  Theorem42Report r = theorem42_pipeline(make(three_loops()), std::nullopt, 6);
  EXPECT_TRUE(r.generalized.verdict.ok());
  EXPECT_TRUE(r.projective.ok());
  EXPECT_TRUE(r.classical.verdict.ok());
  EXPECT_TRUE(r.agreement);
  EXPECT_FALSE(r.violation);
  EXPECT_TRUE(r.converse_applicable);

  Theorem42Report r2 = theorem42_pipeline(make(loop_and_line()), std::nullopt, 6);
  EXPECT_TRUE(r2.generalized.verdict.failed());
  EXPECT_TRUE(r2.classical.verdict.failed());
  EXPECT_TRUE(r2.agreement);
  EXPECT_FALSE(r2.violation);

  QuiverPresentation pt;
  pt.vertices = {"x"};
  Theorem42Report r3 = theorem42_pipeline(make(pt), std::nullopt, 4);
  EXPECT_TRUE(r3.generalized.verdict.ok());
  EXPECT_TRUE(r3.classical.verdict.ok());
  EXPECT_TRUE(r3.agreement);
}

TEST(Theorem42, ModulesOverThreeLoops) {
  auto a = make(three_loops());
  std::vector<GradedModule> ms;
  for (size_t c = 0; c < 3; ++c) {
    GradedModule p = proj(a, c);
    ms.push_back(p);
    ms.push_back(top(p));
    ms.push_back(make_submodule(p, graded_radical(p)).module);
  }
  for (const auto& m : ms) {
    Theorem42Report r = theorem42_pipeline(a, m, 5);
    EXPECT_FALSE(r.violation) << dims_string(m.dims());
  }
}
