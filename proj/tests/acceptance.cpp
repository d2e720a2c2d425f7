// Acceptance run: one PASS/FAIL line per criterion, reproducing the worked
// examples from the corpus reports and running the property and oracle suites.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "koszul/document.hpp"
#include "support/free_ext.hpp"
#include "support/properties.hpp"

namespace fs = std::filesystem;
using namespace koszul;

namespace {

const fs::path kCorpus = KOSZUL_CORPUS_DIR;

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Json report_for(const std::string& stem) {
  SpecDocument doc = load_document(kCorpus / (stem + ".spec"));
  return run_document(doc, {});
}

const Json& check(const Json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  throw SchemaError(report.value("document", "?") + ": no check " + name);
}

std::string field(const Json& report, const std::string& name, const std::string& key) {
  const Json& c = check(report, name);
  if (!c.contains(key)) return "<missing>";
  return c[key].is_string() ? c[key].get<std::string>() : c[key].dump();
}

void expect_field(Outcome& o, const Json& report, const std::string& name, const std::string& key, const std::string& want) {
  std::string got = field(report, name, key);
  o.expect(got == want, name + "." + key + " is " + got + ", wanted " + want);
}

void expect_status(Outcome& o, const Json& report, const std::string& name, const std::string& want) {
  expect_field(o, report, name, "status", want);
}

void expect_property(Outcome& o, const properties::Result& r, size_t want_instances) {
  o.notes.push_back(r.summary());
  o.expect(r.instances >= want_instances, r.name + ": only " + std::to_string(r.instances) + " instances");
  o.expect(r.applicable > 0, r.name + ": no instance met the hypotheses");
  o.expect(r.violations == 0, r.summary());
}

Outcome koszul_algebra_with_non_koszul_opposite() {
  Outcome o;
  Json r = report_for("example_2_final");
  expect_status(o, r, "koszul_A", "Holds");
  expect_field(o, r, "koszul_A", "bound", "8");
  expect_status(o, r, "koszul_Aop", "Fails");
  expect_status(o, r, "a0_projective_A", "Holds");
  expect_status(o, r, "a0_projective_Aop", "Fails");
  return o;
}

Outcome bar_of_loops_with_commuting_square() {
  Outcome o;
  Json r = report_for("example_3_1");
  expect_field(o, r, "bar_algebra", "ideal_dims", "[2,1]");
  expect_field(o, r, "bar_algebra", "bar_dims", "[2,1]");
  expect_field(o, r, "bar_algebra", "match", "Holds");
  expect_field(o, r, "bar_M", "bar_module_dims", "[1,1]");
  expect_field(o, r, "bar_M", "iso", "Holds");
  return o;
}

Outcome barring_sequences() {
  Outcome o;
  Json r = report_for("example_3_5");
  expect_field(o, r, "barred_sequence", "exact", "Holds");
  expect_field(o, r, "barred_sequence", "bar_exact", "Fails");
  expect_field(o, r, "barred_sequence", "bar_first_map_zero", "true");
  // Every corpus sequence with A_0-projective terms over a commuting algebra stays exact.
  size_t covered = 0;
  for (const auto& entry : fs::directory_iterator(kCorpus)) {
    if (entry.path().extension() != ".spec") continue;
    SpecDocument doc = load_document(entry.path());
    Json rep = run_document(doc, {});
    for (const auto& c : rep["checks"]) {
      if (c["op"] != "sequence") continue;
      if (c.value("terms_a0_projective", "") != "Holds" || c.value("commutation", "") != "Holds" || c.value("exact", "") != "Holds")
        continue;
      ++covered;
      o.expect(c.value("bar_exact", "") == "Holds", doc.name + "/" + c["name"].get<std::string>() + " loses exactness");
    }
  }
  o.notes.push_back(std::to_string(covered) + " corpus sequences with A_0-projective terms and commutation");
  o.expect(covered > 0, "no corpus sequence meets the hypotheses");
  expect_property(o, properties::barring_exactness(1000, 17), 1000);
  return o;
}

Outcome delta_x_of_non_projective_algebra() {
  Outcome o;
  Json r = report_for("example_3_8");
  expect_status(o, r, "first_syzygy", "Holds");
  expect_field(o, r, "first_syzygy", "dims", "[0,1]");
  expect_status(o, r, "second_syzygy", "Holds");
  expect_field(o, r, "second_syzygy", "dims", "[0,1]");
  expect_status(o, r, "koszul_Dx", "Fails");
  expect_field(o, r, "koszul_Dx", "step", "2");
  expect_status(o, r, "classical_bar_Dx", "Holds");
  expect_status(o, r, "koszul_A", "Fails");
  expect_status(o, r, "classical_bar", "Holds");
  expect_status(o, r, "correspondence", "Refused");
  expect_field(o, r, "correspondence", "algebra_projective", "Fails");
  return o;
}

Outcome commuting_loops_on_a_line() {
  Outcome o;
  Json r = report_for("example_4_3");
  expect_field(o, r, "dims", "dims", "[6,4,2]");
  expect_status(o, r, "b_presentation", "Holds");
  expect_status(o, r, "classical_B", "Holds");
  expect_status(o, r, "classical_bar", "Holds");
  expect_status(o, r, "koszul_A", "Holds");
  expect_field(o, r, "correspondence", "agreement", "true");
  expect_field(o, r, "theorem42", "agreement", "true");
  return o;
}

Outcome non_commuting_loops() {
  Outcome o;
  Json r = report_for("example_4_4");
  expect_status(o, r, "commutation", "Fails");
  expect_status(o, r, "koszul_A", "Fails");
  expect_status(o, r, "classical_bar", "Holds");
  expect_status(o, r, "classical_B", "Fails");
  expect_field(o, r, "theorem42", "agreement", "true");
  return o;
}

Outcome transporter_category_of_c6() {
  Outcome o;
  Json r = report_for("example_4_6");
  expect_field(o, r, "category", "endomorphisms", "[6,6,6,6]");
  const Json& homs = check(r, "category")["hom_sizes"];
  size_t bisets = 0;
  for (const auto& [k, v] : homs.items()) {
    o.expect(v == 6, "hom set " + k + " has " + v.dump() + " elements");
    if (k.substr(0, k.find("->")) != k.substr(k.find("->") + 2)) ++bisets;
  }
  o.expect(bisets >= 4, "only " + std::to_string(bisets) + " non-endomorphism hom sets");
  expect_field(o, r, "bar_blocks", "count", "2");
  expect_field(o, r, "bar_blocks", "matches", "[\"Holds\",\"Holds\"]");
  expect_status(o, r, "koszul_A", "Holds");
  expect_field(o, r, "koszul_A", "bound", "8");
  return o;
}

Outcome extension_algebra_of_standard_modules() {
  Outcome o;
  Json r = report_for("example_5_4");
  expect_field(o, r, "standard", "standard_dims", "{\"x\":2,\"y\":2,\"z\":1}");
  expect_field(o, r, "extension_algebra", "ext_at_least_2", "0");
  const Json& e = check(r, "extension_algebra");
  std::vector<size_t> g = e.value("gamma_dims", std::vector<size_t>{});
  o.expect(g.size() >= 2 && g[0] == 5 && g[1] == 2, "gamma_dims is " + e["gamma_dims"].dump() + ", wanted Gamma_0 = 5, Gamma_1 = 2");
  expect_field(o, r, "extension_algebra", "gamma_match", "Holds");
  expect_field(o, r, "extension_algebra", "radical_annihilates_gamma1", "true");
  expect_field(o, r, "extension_algebra", "bar_classical", "Holds");
  expect_field(o, r, "extension_algebra", "gamma0_fdim_zero", "Fails");
  o.expect(!e.value("gamma0_fdim_witness", std::string()).empty(), "fdim refutation carries no witness");
  return o;
}

Outcome property_suites() {
  Outcome o;
  constexpr size_t n = 1000;
  expect_property(o, properties::middle_term_generation(n, 11), n);
  expect_property(o, properties::two_of_three(n, 12), n);
  expect_property(o, properties::truncation_closure(n, 13), n);
  expect_property(o, properties::koszul_modules_are_a0_projective(n, 14), n);
  expect_property(o, properties::ext_generation_biconditional(n, 15), n);
  expect_property(o, properties::bar_generation(n, 16), n);
  expect_property(o, properties::ei_dimension_identity(n, 18), n);
  expect_property(o, properties::filtration_multiplicities(n, 19), n);
  return o;
}

// Projectives, their tops and radicals, A_0 and A.
std::vector<GradedModule> standard_modules_of(const AlgebraPtr& a) {
  std::vector<GradedModule> out = {degree_zero_module(a), regular_module(a)};
  for (size_t c = 0; c < randomized::num_classes(a); ++c) {
    GradedModule p = randomized::projective(a, c);
    out.push_back(p);
    out.push_back(top(p));
    out.push_back(make_submodule(p, graded_radical(p)).module);
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  constexpr int ext_bound = 3;
  constexpr size_t max_dim = 20;
  size_t ext_instances = 0;
  auto compare = [&](const AlgebraPtr& a, const GradedModule& m, const GradedModule& n, const std::string& where) {
    if (m.total_dim() > max_dim || n.total_dim() > max_dim || m.is_zero()) return;
    ++ext_instances;
    std::vector<size_t> minimal = ext_spaces(m, n, ext_bound).dims;
    std::vector<size_t> free = oracle::free_ext_dims(m, n, ext_bound);
    o.expect(minimal == free, where + ": minimal " + dims_string(minimal) + ", free " + dims_string(free) + " for " +
                                  properties::describe(*a, m));
  };

  std::vector<std::pair<std::string, SpecDocument>> docs;
  for (const auto& entry : fs::directory_iterator(kCorpus))
    if (entry.path().extension() == ".spec") docs.emplace_back(entry.path().stem().string(), load_document(entry.path()));
  std::sort(docs.begin(), docs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  for (const auto& [stem, doc] : docs) {
    const AlgebraPtr& a = doc.algebra;
    if (a->dim() > max_dim) continue;
    std::vector<GradedModule> ms = standard_modules_of(a);
    for (const auto& [name, expr] : doc.modules) ms.push_back(evaluate_module(doc, expr));
    for (const auto& m : ms)
      for (const auto& n : {degree_zero_module(a), regular_module(a)}) compare(a, m, n, stem);
  }
  std::mt19937_64 rng(20);
  for (size_t k = 0; k < 300; ++k) {
    auto [q, a] = randomized::random_algebra(rng, {});
    if (a->dim() > max_dim) continue;
    GradedModule m = randomized::random_module(rng, a);
    GradedModule n = std::uniform_int_distribution<int>(0, 1)(rng) ? degree_zero_module(a) : randomized::random_module(rng, a);
    compare(a, m, n, "random");
  }
  o.notes.push_back(std::to_string(ext_instances) + " Ext comparisons against the free-resolution oracle");

  constexpr int duality_bound = 6;
  size_t duality_instances = 0;
  for (const auto& [stem, doc] : docs) {
    const AlgebraPtr& a = doc.algebra;
    if (!algebra_is_generalized_koszul(a, {duality_bound, false}).verdict.ok()) continue;
    std::vector<GradedModule> ms = standard_modules_of(a);
    for (const auto& [name, expr] : doc.modules) ms.push_back(evaluate_module(doc, expr));
    for (const auto& m : ms) {
      if (m.is_zero() || !is_generalized_koszul(m, {duality_bound, false}).verdict.ok()) continue;
      ++duality_instances;
      DualityReport d = check_duality_roundtrip(a, m, duality_bound);
      o.expect(d.verdict.ok(), stem + ": duality " + status_name(d.verdict.status) + " for " + dims_string(m.dims()) + ": " +
                                   d.verdict.witness);
    }
  }
  o.notes.push_back(std::to_string(duality_instances) + " corpus generalized Koszul modules checked for duality");
  o.expect(duality_instances > 0, "no corpus module reached the duality check");
  return o;
}

}  // namespace

int main() {
  struct Item {
    int id;
    std::string title;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {1, "generalized Koszul algebra with a non-Koszul opposite", koszul_algebra_with_non_koszul_opposite},
      {2, "bar construction for loops with a commuting square", bar_of_loops_with_commuting_square},
      {3, "barring short exact sequences", barring_sequences},
      {4, "standard module over an algebra that is not A_0-projective", delta_x_of_non_projective_algebra},
      {5, "commuting loops along a line", commuting_loops_on_a_line},
      {6, "loops that do not commute with the arrows", non_commuting_loops},
      {7, "transporter category of C6", transporter_category_of_c6},
      {8, "extension algebra of standard modules", extension_algebra_of_standard_modules},
      {9, "property suites", property_suites},
      {10, "oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (const auto& item : items) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = item.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.failures.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << item.id << ": " << item.title << " (" << std::fixed
              << std::setprecision(1) << secs << " s)\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    for (const auto& f : o.failures) std::cout << "    mismatch: " << f << "\n";
    std::cout.flush();
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
