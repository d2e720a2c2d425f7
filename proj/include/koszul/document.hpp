#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "koszul/categories.hpp"
#include "koszul/quiver.hpp"
#include "koszul/stratified.hpp"

namespace koszul {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// A named pipeline invocation from the "checks" block.
struct CheckSpec {
  std::string name;
  std::string op;
  std::string target = "A";
  std::optional<int> bound;
  Json params;
};

// An algebra-spec document. Exactly one of the blocks quiver, structure,
// group, category selects the species; a stratified block rides on a quiver.
struct SpecDocument {
  std::string name;
  std::string species;
  Field field = Field::rationals();
  int truncation = 10;
  std::optional<QuiverPresentation> quiver;
  std::optional<QuiverAlgebra> quiver_algebra;
  std::optional<FiniteGroup> group;
  std::optional<std::vector<Subgroup>> subgroups;
  std::optional<FiniteCategory> category;
  std::optional<PartialOrder> order;
  AlgebraPtr algebra;
  // Module name -> ModuleExpression text, in document order.
  std::vector<std::pair<std::string, std::string>> modules;
  std::vector<CheckSpec> checks;
};

struct LoadOptions {
  std::optional<Field> field;
  std::optional<int> truncation;
};

// Throws SchemaError with line and column for syntax errors and with the
// offending JSON path for schema violations.
SpecDocument parse_document(const std::string& text, const LoadOptions& opts = {}, const std::string& name = "document");
SpecDocument load_document(const std::filesystem::path& path, const LoadOptions& opts = {});

// Builds the presentation described by a quiver block (also used inline by checks).
QuiverPresentation parse_quiver_block(const Json& block, const Field& f, int truncation, const std::string& where);

// ModuleExpression terms: Projective(v), Simple(v), Radical(E), Top(E),
// Jpower(E, i), Shift(E, i), Syzygy(E, i), DirectSum(E, ...), Quotient(E, S),
// Regular, DegreeZero, and names of other modules of the document. S is
// Radical, Jpower(i) or Elements(c, ...) on a projective, with c a path
// combination or a combination of basis labels.
GradedModule evaluate_module(const SpecDocument& doc, const std::string& expr);

// Export and import of graded algebras as a structure block.
Json export_algebra(const GradedAlgebra& a);
GradedAlgebra import_algebra(const Json& structure, const std::string& where = "structure");

struct RunOptions {
  int hdeg = 8;
  uint64_t seed = 1;
  // Runs only the named check when set.
  std::optional<std::string> only;
};

Json run_check(const SpecDocument& doc, const CheckSpec& check, const RunOptions& opts);
// Report: {"schema_version", "document", "species", "field", "checks": [...],
// "theorem_violation"}.
Json run_document(const SpecDocument& doc, const RunOptions& opts);
std::string render_text(const Json& report);

// Entries of `expected` (check name -> key -> value) that the report does not reproduce.
std::vector<std::string> compare_expected(const Json& report, const Json& expected);

struct CorpusEntry {
  std::string file;
  bool passed = false;
  std::vector<std::string> mismatches;
  std::string error;
};

struct CorpusResult {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> warnings;
  bool passed() const;
};

// Runs every *.spec file of the directory against the *.expected.json beside
// it, or only the files named in `only`.
CorpusResult run_corpus(const std::filesystem::path& dir, const RunOptions& opts, const std::vector<std::string>& only = {});
Json corpus_report(const CorpusResult& r);

}  // namespace koszul
