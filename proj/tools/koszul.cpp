#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "koszul/document.hpp"
#include "koszul/errors.hpp"

using namespace koszul;

namespace {

struct Common {
  int hdeg = 8;
  std::optional<int> trunc;
  std::string field;
  bool json = false;
  uint64_t seed = 1;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--hdeg", c.hdeg, "Homological bound for resolutions")->capture_default_str();
  app->add_option("--trunc", c.trunc, "Degree truncation for infinite algebras (default 10)");
  app->add_option("--field", c.field, "Field: q or p:K");
  app->add_flag("--json", c.json, "Print the JSON report");
  app->add_option("--seed", c.seed, "Seed for randomized isomorphism probing")->capture_default_str();
}

LoadOptions load_options(const Common& c) {
  LoadOptions o;
  if (!c.field.empty()) o.field = Field::parse(c.field);
  o.truncation = c.trunc;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const Json& report, const Common& c) {
  if (c.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_text(report);
  return report.value("theorem_violation", false) || report.value("errors", 0) > 0 ? 1 : 0;
}

// Runs the given checks instead of the document's own.
int run_with(SpecDocument doc, std::vector<CheckSpec> checks, const Common& c) {
  doc.checks = std::move(checks);
  RunOptions ro;
  ro.hdeg = c.hdeg;
  ro.seed = c.seed;
  return emit(run_document(doc, ro), c);
}

CheckSpec make_check(std::string name, std::string op, std::string target = "A", Json params = Json::object()) {
  CheckSpec s;
  s.name = std::move(name);
  s.op = std::move(op);
  s.target = std::move(target);
  s.params = std::move(params);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides generalized and classical Koszul properties of graded algebras"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> corpus_files;
  std::string file, check_name, module_expr, with_expr, corpus_dir = KOSZUL_CORPUS_DIR;

  auto* check = app.add_subcommand("check", "Run the checks of a spec document");
  check->add_option("file", file, "Spec document")->required();
  check->add_option("--check", check_name, "Run only this check");
  add_common(check, common);

  auto* bar = app.add_subcommand("bar", "Bar algebra, and the barred module when --module is given");
  bar->add_option("file", file)->required();
  bar->add_option("--module", module_expr, "Module expression");
  add_common(bar, common);

  auto* ext = app.add_subcommand("ext", "Ext dimensions of a module");
  ext->add_option("file", file)->required();
  ext->add_option("--module", module_expr, "Module expression")->required();
  ext->add_option("--with", with_expr, "Second argument (default A_0)");
  add_common(ext, common);

  auto* duality = app.add_subcommand("duality", "Koszul duality roundtrip of a module");
  duality->add_option("file", file)->required();
  duality->add_option("--module", module_expr, "Module expression")->required();
  add_common(duality, common);

  auto* transporter = app.add_subcommand("transporter", "Transporter category of a group document");
  transporter->add_option("file", file)->required();
  add_common(transporter, common);

  auto* orbit = app.add_subcommand("orbit", "Orbit category of a group document");
  orbit->add_option("file", file)->required();
  add_common(orbit, common);

  auto* stratified = app.add_subcommand("stratified", "Standard modules and the extension algebra");
  stratified->add_option("file", file)->required();
  add_common(stratified, common);

  auto* corpus = app.add_subcommand("corpus", "Run the regression corpus");
  corpus->add_option("dir", corpus_dir, "Corpus directory")->capture_default_str();
  corpus->add_option("--file", corpus_files, "Run only these corpus files");
  add_common(corpus, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) {
      RunOptions ro;
      ro.hdeg = common.hdeg;
      ro.seed = common.seed;
      CorpusResult r = run_corpus(corpus_dir, ro, corpus_files);
      Json j = corpus_report(r);
      if (common.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
        for (const auto& e : r.entries) {
          std::cout << (e.passed ? "PASS " : "FAIL ") << e.file << "\n";
          for (const auto& m : e.mismatches) std::cout << "    " << m << "\n";
          if (!e.error.empty()) std::cout << "    error: " << e.error << "\n";
        }
        std::cout << j["passed"].get<size_t>() << "/" << j["total"].get<size_t>() << " corpus files pass\n";
      }
      return r.passed() ? 0 : 1;
    }

    LoadOptions lo = load_options(common);
    if (transporter->parsed() || orbit->parsed()) {
      Json j = Json::parse(read_file(file));
      if (!j.contains("group")) throw SchemaError(file + ": a group block is required");
      j["group"]["construction"] = transporter->parsed() ? "transporter" : "orbit";
      SpecDocument doc = parse_document(j.dump(), lo, file);
      return run_with(doc,
                      {make_check("category", "category"), make_check("commutation", "commutation"),
                       make_check("generalized_koszul", "generalized_koszul"),
                       make_check("correspondence", "correspondence")},
                      common);
    }

    SpecDocument doc = load_document(file, lo);
    if (check->parsed()) {
      RunOptions ro;
      ro.hdeg = common.hdeg;
      ro.seed = common.seed;
      if (!check_name.empty()) ro.only = check_name;
      return emit(run_document(doc, ro), common);
    }
    if (bar->parsed()) return run_with(doc, {make_check("bar", "bar", module_expr.empty() ? "A" : module_expr)}, common);
    if (ext->parsed()) {
      Json p = Json::object();
      if (!with_expr.empty()) p["with"] = with_expr;
      return run_with(doc, {make_check("ext", "ext", module_expr, p)}, common);
    }
    if (duality->parsed()) return run_with(doc, {make_check("duality", "duality", module_expr)}, common);
    if (stratified->parsed())
      return run_with(doc, {make_check("standard", "stratified"), make_check("theorem52", "theorem52")}, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
