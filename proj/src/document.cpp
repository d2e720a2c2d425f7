#include "koszul/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include "koszul/algebra_iso.hpp"
#include "koszul/bar.hpp"
#include "koszul/errors.hpp"
#include "koszul/ext.hpp"
#include "koszul/iso.hpp"

namespace koszul {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void schema(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where, "missing key \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

int need_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> need_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(need_string(j[i], where + "/" + std::to_string(i)));
  return out;
}

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) schema(where, "unknown key \"" + k + "\"");
}

size_t find_name(const std::vector<std::string>& names, const std::string& n, const std::string& where) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) schema(where, "unknown name \"" + n + "\"");
  return static_cast<size_t>(it - names.begin());
}

Scalar parse_scalar(const Field& f, const Json& j, const std::string& where) {
  if (j.is_number_integer()) return f.from_int(j.get<int64_t>());
  if (j.is_string()) {
    try {
      return f.from_rational(Rational::parse(j.get<std::string>()));
    } catch (const std::exception& e) {
      schema(where, std::string("bad scalar: ") + e.what());
    }
  }
  schema(where, "expected a number or a rational string");
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (v.degree) j["degree"] = *v.degree;
  if (v.window) j["window"] = *v.window;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

std::vector<std::vector<size_t>> syzygy_dims(const MinimalResolution& r) {
  std::vector<std::vector<size_t>> out;
  for (const auto& s : r.syzygies) out.push_back(s.dims());
  return out;
}

Json koszul_json(const KoszulVerdict& k, const GradedAlgebra& a) {
  Json j = verdict_json(k.verdict);
  j["bound"] = k.bound;
  if (k.step) j["step"] = *k.step;
  if (!k.periodicity.empty()) j["periodicity"] = k.periodicity;
  if (k.a0_projective) j["a0_projective"] = status_name(k.a0_projective->status);
  j["betti"] = k.resolution.betti_string(a);
  j["syzygy_dims"] = syzygy_dims(k.resolution);
  return j;
}

}  // namespace

QuiverPresentation parse_quiver_block(const Json& block, const Field& f, int truncation, const std::string& where) {
  only_keys(block, {"vertices", "arrows", "relations", "degree_zero_length_bound"}, where);
  QuiverPresentation q;
  q.field = f;
  q.truncation = truncation;
  q.vertices = need_strings(need(block, "vertices", where), where + "/vertices");
  const Json& arrows = need(block, "arrows", where);
  if (!arrows.is_array()) schema(where + "/arrows", "expected an array");
  for (size_t i = 0; i < arrows.size(); ++i) {
    std::string w = where + "/arrows/" + std::to_string(i);
    only_keys(arrows[i], {"name", "from", "to", "degree"}, w);
    Arrow a;
    a.name = need_string(need(arrows[i], "name", w), w + "/name");
    a.source = find_name(q.vertices, need_string(need(arrows[i], "from", w), w + "/from"), w + "/from");
    a.target = find_name(q.vertices, need_string(need(arrows[i], "to", w), w + "/to"), w + "/to");
    a.degree = arrows[i].contains("degree") ? need_int(arrows[i]["degree"], w + "/degree") : 1;
    q.arrows.push_back(a);
  }
  if (block.contains("degree_zero_length_bound"))
    q.degree_zero_length_bound = need_int(block["degree_zero_length_bound"], where + "/degree_zero_length_bound");
  if (block.contains("relations")) {
    auto rel = need_strings(block["relations"], where + "/relations");
    for (size_t i = 0; i < rel.size(); ++i) {
      try {
        q.add_relations(rel[i]);
      } catch (const Error& e) {
        schema(where + "/relations/" + std::to_string(i), e.what());
      }
    }
  }
  return q;
}

Json export_algebra(const GradedAlgebra& a) {
  Json j;
  j["field"] = a.field().spec_string();
  j["labels"] = a.labels();
  std::vector<int> deg;
  for (size_t i = 0; i < a.dim(); ++i) deg.push_back(a.degree(i));
  j["degrees"] = deg;
  j["exact"] = a.exact();
  j["truncation"] = a.truncation();
  auto sparse = [](const SparseVec& s) {
    Json out = Json::array();
    for (const auto& [k, c] : s) out.push_back(Json::array({k, c.str()}));
    return out;
  };
  j["unit"] = sparse(to_sparse(a.unit()));
  Json prods = Json::array();
  for (size_t x = 0; x < a.dim(); ++x)
    for (size_t y = 0; y < a.dim(); ++y)
      if (!a.product(x, y).empty()) prods.push_back(Json::array({x, y, sparse(a.product(x, y))}));
  j["products"] = prods;
  if (a.objects()) {
    const auto& o = *a.objects();
    j["objects"] = {{"names", o.names}, {"identity", o.identity}, {"source", o.source}, {"target", o.target}};
  }
  return j;
}

GradedAlgebra import_algebra(const Json& s, const std::string& where) {
  only_keys(s, {"field", "labels", "degrees", "exact", "truncation", "unit", "products", "objects"}, where);
  GradedAlgebra::Data d;
  d.field = Field::parse(need_string(need(s, "field", where), where + "/field"));
  d.labels = need_strings(need(s, "labels", where), where + "/labels");
  size_t n = d.labels.size();
  const Json& deg = need(s, "degrees", where);
  if (!deg.is_array() || deg.size() != n) schema(where + "/degrees", "expected one degree per label");
  for (size_t i = 0; i < n; ++i) d.degree.push_back(need_int(deg[i], where + "/degrees/" + std::to_string(i)));
  if (!std::is_sorted(d.degree.begin(), d.degree.end())) schema(where + "/degrees", "basis must be sorted by degree");
  d.exact = s.value("exact", true);
  d.truncation = s.contains("truncation") ? need_int(s["truncation"], where + "/truncation") : (n ? d.degree.back() : 0);
  auto read_sparse = [&](const Json& j, const std::string& w) {
    if (!j.is_array()) schema(w, "expected [[index, coefficient], ...]");
    SparseVec out;
    for (size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != 2) schema(w + "/" + std::to_string(i), "expected [index, coefficient]");
      size_t k = static_cast<size_t>(need_int(j[i][0], w + "/" + std::to_string(i) + "/0"));
      if (k >= n) schema(w + "/" + std::to_string(i), "index out of range");
      Scalar c = parse_scalar(d.field, j[i][1], w + "/" + std::to_string(i) + "/1");
      if (!c.is_zero()) out.push_back({static_cast<uint32_t>(k), c});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };
  d.unit = to_dense(read_sparse(need(s, "unit", where), where + "/unit"), n);
  d.table.assign(n * n, {});
  const Json& prods = need(s, "products", where);
  if (!prods.is_array()) schema(where + "/products", "expected an array");
  for (size_t i = 0; i < prods.size(); ++i) {
    std::string w = where + "/products/" + std::to_string(i);
    if (!prods[i].is_array() || prods[i].size() != 3) schema(w, "expected [left, right, value]");
    size_t x = static_cast<size_t>(need_int(prods[i][0], w + "/0"));
    size_t y = static_cast<size_t>(need_int(prods[i][1], w + "/1"));
    if (x >= n || y >= n) schema(w, "index out of range");
    d.table[x * n + y] = read_sparse(prods[i][2], w + "/2");
  }
  if (s.contains("objects")) {
    const Json& o = s["objects"];
    std::string w = where + "/objects";
    ObjectStructure obj;
    obj.names = need_strings(need(o, "names", w), w + "/names");
    try {
      obj.identity = need(o, "identity", w).get<std::vector<size_t>>();
      obj.source = need(o, "source", w).get<std::vector<size_t>>();
      obj.target = need(o, "target", w).get<std::vector<size_t>>();
    } catch (const Json::exception& e) {
      schema(w, e.what());
    }
    if (obj.identity.size() != obj.names.size() || obj.source.size() != n || obj.target.size() != n)
      schema(w, "object data has inconsistent sizes");
    d.objects = obj;
  }
  GradedAlgebra a(std::move(d));
  try {
    validate(a);
  } catch (const Error& e) {
    schema(where, e.what());
  }
  return a;
}

namespace {

FiniteGroup parse_group(const Json& g, const std::string& where) {
  only_keys(g, {"cyclic", "dihedral", "symmetric", "permutations", "table", "names", "construction", "subgroups"}, where);
  if (g.contains("cyclic")) return FiniteGroup::cyclic(static_cast<size_t>(need_int(g["cyclic"], where + "/cyclic")));
  if (g.contains("dihedral")) return FiniteGroup::dihedral(static_cast<size_t>(need_int(g["dihedral"], where + "/dihedral")));
  if (g.contains("symmetric"))
    return FiniteGroup::symmetric(static_cast<size_t>(need_int(g["symmetric"], where + "/symmetric")));
  try {
    if (g.contains("permutations")) return FiniteGroup::from_permutations(g["permutations"].get<std::vector<std::vector<size_t>>>());
    if (g.contains("table")) {
      auto rows = g["table"].get<std::vector<std::vector<size_t>>>();
      std::vector<size_t> flat;
      for (const auto& r : rows) {
        if (r.size() != rows.size()) schema(where + "/table", "Cayley table must be square");
        flat.insert(flat.end(), r.begin(), r.end());
      }
      std::vector<std::string> names;
      if (g.contains("names")) names = need_strings(g["names"], where + "/names");
      return FiniteGroup(flat, names);
    }
  } catch (const Json::exception& e) {
    schema(where, e.what());
  } catch (const InvalidStructure& e) {
    schema(where, e.what());
  }
  schema(where, "one of cyclic, dihedral, symmetric, permutations, table is required");
}

FiniteCategory parse_category(const Json& c, const std::string& where) {
  only_keys(c, {"objects", "morphisms", "composition"}, where);
  std::vector<std::string> objects = need_strings(need(c, "objects", where), where + "/objects");
  std::vector<Morphism> morphisms;
  std::vector<std::string> labels;
  std::vector<size_t> identities;
  for (size_t x = 0; x < objects.size(); ++x) {
    identities.push_back(morphisms.size());
    morphisms.push_back({x, x, "1_" + objects[x]});
    labels.push_back("1_" + objects[x]);
  }
  const Json& ms = need(c, "morphisms", where);
  if (!ms.is_array()) schema(where + "/morphisms", "expected an array");
  for (size_t i = 0; i < ms.size(); ++i) {
    std::string w = where + "/morphisms/" + std::to_string(i);
    only_keys(ms[i], {"name", "from", "to"}, w);
    std::string name = need_string(need(ms[i], "name", w), w + "/name");
    if (std::find(labels.begin(), labels.end(), name) != labels.end()) schema(w, "duplicate morphism " + name);
    morphisms.push_back({find_name(objects, need_string(need(ms[i], "from", w), w + "/from"), w + "/from"),
                         find_name(objects, need_string(need(ms[i], "to", w), w + "/to"), w + "/to"), name});
    labels.push_back(name);
  }
  size_t n = morphisms.size();
  std::vector<size_t> comp(n * n, FiniteCategory::none);
  for (size_t f = 0; f < n; ++f) {
    comp[identities[morphisms[f].target] * n + f] = f;
    comp[f * n + identities[morphisms[f].source]] = f;
  }
  if (c.contains("composition")) {
    const Json& cs = c["composition"];
    for (size_t i = 0; i < cs.size(); ++i) {
      std::string w = where + "/composition/" + std::to_string(i);
      auto t = need_strings(cs[i], w);
      if (t.size() != 3) schema(w, "expected [g, f, g after f]");
      size_t g = find_name(labels, t[0], w), f = find_name(labels, t[1], w), h = find_name(labels, t[2], w);
      comp[g * n + f] = h;
    }
  }
  try {
    return FiniteCategory(objects, morphisms, identities, comp);
  } catch (const InvalidStructure& e) {
    schema(where, e.what());
  }
}

size_t line_of(const std::string& text, size_t byte, size_t& col) {
  size_t line = 1, last = 0;
  for (size_t i = 0; i < std::min(byte, text.size()); ++i)
    if (text[i] == '\n') {
      ++line;
      last = i + 1;
    }
  col = byte - last + (byte > last ? 0 : 1);
  return line;
}

}  // namespace

SpecDocument parse_document(const std::string& text, const LoadOptions& opts, const std::string& name) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    size_t col = 0;
    size_t line = line_of(text, e.byte, col);
    throw SchemaError(name + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
  const std::string w = name;
  only_keys(j, {"schema_version", "name", "description", "field", "truncation", "quiver", "relations", "grading", "structure",
                "group", "category", "stratified", "modules", "checks"},
            w);
  int version = need_int(need(j, "schema_version", w), w + "/schema_version");
  if (version != kSchemaVersion) schema(w + "/schema_version", "unsupported version " + std::to_string(version));
  SpecDocument doc;
  doc.name = j.contains("name") ? need_string(j["name"], w + "/name") : name;
  doc.field = j.contains("field") ? Field::parse(need_string(j["field"], w + "/field")) : Field::rationals();
  if (opts.field) doc.field = *opts.field;
  doc.truncation = j.contains("truncation") ? need_int(j["truncation"], w + "/truncation") : 10;
  if (opts.truncation) doc.truncation = *opts.truncation;

  int blocks = static_cast<int>(j.contains("quiver")) + static_cast<int>(j.contains("structure")) +
               static_cast<int>(j.contains("group")) + static_cast<int>(j.contains("category"));
  if (blocks != 1) schema(w, "exactly one of quiver, structure, group, category is required");

  try {
    if (j.contains("quiver")) {
      doc.species = "quiver";
      QuiverPresentation q = parse_quiver_block(j["quiver"], doc.field, doc.truncation, w + "/quiver");
      if (j.contains("relations")) {
        auto rel = need_strings(j["relations"], w + "/relations");
        for (size_t i = 0; i < rel.size(); ++i) {
          try {
            q.add_relations(rel[i]);
          } catch (const Error& e) {
            schema(w + "/relations/" + std::to_string(i), e.what());
          }
        }
      }
      if (j.contains("grading")) {
        const Json& g = j["grading"];
        if (!g.is_object()) schema(w + "/grading", "expected arrow degrees");
        for (const auto& [arrow, deg] : g.items()) {
          bool found = false;
          for (auto& a : q.arrows)
            if (a.name == arrow) {
              a.degree = need_int(deg, w + "/grading/" + arrow);
              found = true;
            }
          if (!found) schema(w + "/grading", "unknown arrow " + arrow);
        }
      }
      doc.quiver_algebra = build_quiver_algebra(q);
      doc.quiver = q;
      doc.algebra = std::make_shared<const GradedAlgebra>(doc.quiver_algebra->algebra);
      if (j.contains("stratified")) {
        doc.species = "stratified";
        only_keys(j["stratified"], {"order"}, w + "/stratified");
        std::vector<std::pair<std::string, std::string>> less;
        const Json& ord = need(j["stratified"], "order", w + "/stratified");
        for (size_t i = 0; i < ord.size(); ++i) {
          auto p = need_strings(ord[i], w + "/stratified/order/" + std::to_string(i));
          if (p.size() != 2) schema(w + "/stratified/order/" + std::to_string(i), "expected [smaller, larger]");
          less.push_back({p[0], p[1]});
        }
        doc.order = PartialOrder(q.vertices, less);
      }
    } else {
      if (j.contains("relations")) schema(w + "/relations", "relations need a quiver block");
      if (j.contains("stratified")) schema(w + "/stratified", "a stratified block needs a quiver block");
      if (j.contains("structure")) {
        doc.species = "structure";
        GradedAlgebra a = import_algebra(j["structure"], w + "/structure");
        if (opts.field && a.field() != *opts.field) schema(w + "/structure", "structure constants fix the field");
        doc.field = a.field();
        doc.algebra = std::make_shared<const GradedAlgebra>(std::move(a));
      } else if (j.contains("group")) {
        doc.species = "group";
        const Json& g = j["group"];
        doc.group = parse_group(g, w + "/group");
        std::vector<Subgroup> subs;
        const Json& sj = need(g, "subgroups", w + "/group");
        for (size_t i = 0; i < sj.size(); ++i) {
          std::string sw = w + "/group/subgroups/" + std::to_string(i);
          only_keys(sj[i], {"name", "generators", "elements"}, sw);
          Subgroup s;
          s.name = need_string(need(sj[i], "name", sw), sw + "/name");
          std::vector<size_t> els;
          std::string key = sj[i].contains("elements") ? "elements" : "generators";
          for (const auto& e : need_strings(need(sj[i], key, sw), sw + "/" + key)) els.push_back(doc.group->element(e));
          if (key == "generators") els = doc.group->generated(els);
          s.elements = els;
          subs.push_back(s);
        }
        std::string construction = g.contains("construction") ? need_string(g["construction"], w + "/group/construction") : "transporter";
        if (construction == "transporter")
          doc.category = transporter_category(*doc.group, subs);
        else if (construction == "orbit")
          doc.category = orbit_category(*doc.group, subs);
        else
          schema(w + "/group/construction", "expected transporter or orbit");
        doc.subgroups = subs;
        doc.algebra = std::make_shared<const GradedAlgebra>(associated_graded_algebra(*doc.category, doc.field));
      } else {
        doc.species = "category";
        doc.category = parse_category(j["category"], w + "/category");
        doc.algebra = std::make_shared<const GradedAlgebra>(associated_graded_algebra(*doc.category, doc.field));
      }
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(w + ": " + e.what());
  }

  if (j.contains("modules")) {
    const Json& m = j["modules"];
    if (!m.is_object()) schema(w + "/modules", "expected name -> expression");
    for (const auto& [k, v] : m.items()) doc.modules.push_back({k, need_string(v, w + "/modules/" + k)});
  }
  if (j.contains("checks")) {
    const Json& cs = j["checks"];
    if (!cs.is_array()) schema(w + "/checks", "expected an array");
    std::set<std::string> seen;
    for (size_t i = 0; i < cs.size(); ++i) {
      std::string cw = w + "/checks/" + std::to_string(i);
      CheckSpec c;
      c.name = need_string(need(cs[i], "name", cw), cw + "/name");
      if (!seen.insert(c.name).second) schema(cw, "duplicate check name " + c.name);
      c.op = need_string(need(cs[i], "op", cw), cw + "/op");
      if (cs[i].contains("target")) c.target = need_string(cs[i]["target"], cw + "/target");
      if (cs[i].contains("bound")) c.bound = need_int(cs[i]["bound"], cw + "/bound");
      c.params = Json::object();
      for (const auto& [k, v] : cs[i].items())
        if (k != "name" && k != "op" && k != "target" && k != "bound") c.params[k] = v;
      doc.checks.push_back(std::move(c));
    }
  }
  return doc;
}

SpecDocument load_document(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), opts, path.filename().string());
}

namespace {

// A parsed expression head with its raw argument texts.
struct Term {
  std::string head;
  std::vector<std::string> args;
  bool call = false;
};

Term split_term(const std::string& text) {
  Term t;
  std::string s = trim(text);
  size_t p = s.find('(');
  if (p == std::string::npos) {
    t.head = s;
    return t;
  }
  if (s.back() != ')') throw SchemaError("module expression \"" + s + "\": missing closing parenthesis");
  t.head = trim(s.substr(0, p));
  t.call = true;
  std::string inner = s.substr(p + 1, s.size() - p - 2);
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw SchemaError("module expression \"" + s + "\": unbalanced parentheses");
    if (ch == ',' && depth == 0) {
      t.args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw SchemaError("module expression \"" + s + "\": unbalanced parentheses");
  if (!trim(cur).empty() || !t.args.empty()) t.args.push_back(trim(cur));
  return t;
}

int parse_int_arg(const std::string& s, const std::string& ctx) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw SchemaError("module expression " + ctx + ": expected an integer, got \"" + s + "\"");
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

struct Evaluator {
  const SpecDocument& doc;
  AlgebraPtr alg;
  std::set<std::string> active;

  bool own_algebra() const { return alg == doc.algebra; }

  size_t vertex(const std::string& v, const std::string& ctx) const {
    const auto& names = alg->degree_zero().class_names;
    auto it = std::find(names.begin(), names.end(), v);
    if (it == names.end()) throw SchemaError("module expression " + ctx + ": unknown vertex " + v + " (vertices: " + joined(names) + ")");
    return static_cast<size_t>(it - names.begin());
  }

  Vec element(const std::string& text) const {
    if (own_algebra() && doc.quiver_algebra) return doc.quiver_algebra->element(doc.quiver->parse_combination(text));
    // Combination of basis labels: terms "label" or "c*label", joined by + and -.
    Vec out(alg->dim());
    const Field& f = alg->field();
    std::string s = trim(text);
    size_t i = 0;
    while (i < s.size()) {
      Scalar sign = f.one();
      while (i < s.size() && (s[i] == '+' || s[i] == '-' || s[i] == ' ')) {
        if (s[i] == '-') sign = f.neg(sign);
        ++i;
      }
      size_t j = i;
      while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] == ' ')) ++j;
      std::string term = trim(s.substr(i, j - i));
      i = j;
      if (term.empty()) continue;
      Scalar c = sign;
      size_t star = term.find('*');
      if (star != std::string::npos) {
        std::string lead = trim(term.substr(0, star));
        bool numeric = !lead.empty() && std::all_of(lead.begin(), lead.end(), [](char ch) { return std::isdigit(ch) || ch == '/'; });
        if (numeric) {
          c = f.mul(c, f.from_rational(Rational::parse(lead)));
          term = trim(term.substr(star + 1));
        }
      }
      auto it = std::find(alg->labels().begin(), alg->labels().end(), term);
      if (it == alg->labels().end()) throw SchemaError("unknown basis element \"" + term + "\"");
      size_t k = static_cast<size_t>(it - alg->labels().begin());
      out[k] = f.add(out[k], c);
    }
    return out;
  }

  GradedModule eval(const std::string& text) {
    Term t = split_term(text);
    const std::string ctx = "\"" + trim(text) + "\"";
    auto arity = [&](size_t n) {
      if (t.args.size() != n)
        throw SchemaError("module expression " + ctx + ": " + t.head + " takes " + std::to_string(n) + " arguments");
    };
    if (!t.call) {
      if (t.head == "Regular") return regular_module(alg);
      if (t.head == "DegreeZero") return degree_zero_module(alg);
      if (t.head == "Zero") return zero_module(alg);
      for (const auto& [name, expr] : doc.modules)
        if (name == t.head) {
          if (!active.insert(name).second) throw SchemaError("module " + name + " is defined in terms of itself");
          GradedModule m = eval(expr);
          active.erase(name);
          return m;
        }
      throw SchemaError("module expression " + ctx + ": unknown module " + t.head);
    }
    if (t.head == "Projective" || t.head == "P") {
      arity(1);
      return ProjectiveFactory(alg).indecomposable(vertex(t.args[0], ctx)).module;
    }
    if (t.head == "Simple" || t.head == "S") {
      arity(1);
      return top(ProjectiveFactory(alg).indecomposable(vertex(t.args[0], ctx)).module);
    }
    if (t.head == "Radical") {
      arity(1);
      GradedModule m = eval(t.args[0]);
      return make_submodule(m, graded_radical(m)).module;
    }
    if (t.head == "Top") {
      arity(1);
      return top(eval(t.args[0]));
    }
    if (t.head == "Jpower") {
      arity(2);
      return j_multiple(eval(t.args[0]), parse_int_arg(t.args[1], ctx)).module;
    }
    if (t.head == "Shift") {
      arity(2);
      return shift(eval(t.args[0]), parse_int_arg(t.args[1], ctx));
    }
    if (t.head == "Syzygy") {
      if (t.args.size() != 1) arity(2);
      GradedModule m = eval(t.args[0]);
      int n = t.args.size() == 2 ? parse_int_arg(t.args[1], ctx) : 1;
      for (int i = 0; i < n; ++i) m = syzygy(m).module;
      return m;
    }
    if (t.head == "DirectSum") {
      std::vector<GradedModule> parts;
      for (const auto& a : t.args) parts.push_back(eval(a));
      if (parts.empty()) return zero_module(alg);
      return direct_sum(parts);
    }
    if (t.head == "Quotient") {
      arity(2);
      GradedModule m = eval(t.args[0]);
      return quotient(m, sub(t.args[0], m, t.args[1], ctx)).module;
    }
    if (t.head == "Sub") {
      arity(2);
      GradedModule m = eval(t.args[0]);
      return make_submodule(m, sub(t.args[0], m, t.args[1], ctx)).module;
    }
    throw SchemaError("module expression " + ctx + ": unknown term " + t.head);
  }

  // A submodule of m = eval(base) described by s.
  std::vector<Subspace> sub(const std::string& base, const GradedModule& m, const std::string& s, const std::string& ctx) {
    Term t = split_term(s);
    if (t.head == "Radical" && !t.call) return graded_radical(m);
    if (t.head == "Jpower" && t.args.size() == 1) return j_multiple(m, parse_int_arg(t.args[0], ctx)).spaces;
    if (t.head == "Elements") {
      Term bt = split_term(base);
      std::optional<Submodule> proj;
      if ((bt.head == "Projective" || bt.head == "P") && bt.args.size() == 1)
        proj = ProjectiveFactory(alg).indecomposable(vertex(bt.args[0], ctx));
      else if (!(bt.head == "Regular" && !bt.call))
        throw SchemaError("module expression " + ctx + ": Elements needs a projective or the regular module");
      std::vector<ModuleElement> els;
      for (const auto& a : t.args) {
        Vec v = element(a);
        for (int d = 0; d <= alg->top_degree(); ++d) {
          Vec part(v.begin() + static_cast<long>(alg->offset(d)), v.begin() + static_cast<long>(alg->offset(d) + alg->dim(d)));
          if (is_zero_vec(part)) continue;
          if (d > m.top()) throw SchemaError("module expression " + ctx + ": " + a + " is not in the module");
          if (proj) {
            const Subspace& sp = proj->spaces[static_cast<size_t>(d)];
            Vec full(alg->dim());
            std::copy(part.begin(), part.end(), full.begin() + static_cast<long>(alg->offset(d)));
            if (sp.ambient() == alg->dim(d)) {
              if (!sp.contains(part)) throw SchemaError("module expression " + ctx + ": " + a + " is not in the projective");
              els.push_back({d, sp.coordinates(part)});
            } else {
              if (!sp.contains(full)) throw SchemaError("module expression " + ctx + ": " + a + " is not in the projective");
              els.push_back({d, sp.coordinates(full)});
            }
          } else {
            els.push_back({d, part});
          }
        }
      }
      return generated_submodule(m, els).spaces;
    }
    throw SchemaError("module expression " + ctx + ": unknown submodule " + s);
  }
};

}  // namespace

GradedModule evaluate_module(const SpecDocument& doc, const std::string& expr) { return Evaluator{doc, doc.algebra, {}}.eval(expr); }

namespace {

GradedModule evaluate_over(const SpecDocument& doc, const AlgebraPtr& a, const std::string& expr) {
  return Evaluator{doc, a, {}}.eval(expr);
}

struct Context {
  const SpecDocument& doc;
  const CheckSpec& check;
  int bound;
  uint64_t seed;

  std::string param_string(const std::string& key) const {
    return need_string(need(check.params, key, "check " + check.name), "check " + check.name + "/" + key);
  }
  bool module_target() const {
    static const std::set<std::string> algebras{"A", "A^op", "bar", "B", "gamma"};
    return !algebras.count(check.target);
  }
  // Barred targets are written "bar:M".
  bool barred_module() const { return check.target.rfind("bar:", 0) == 0; }

  ExtAlgebra stratified_gamma() const {
    StratifiedData s = standard_modules(doc.algebra, *doc.order);
    DeltaEndomorphisms d = delta_endomorphisms(s);
    return ext_algebra(d.delta, d.basis, s.order.names(), d.identities, bound);
  }

  AlgebraPtr algebra(const std::string& which) const {
    if (which == "A") return doc.algebra;
    if (which == "A^op") return std::make_shared<const GradedAlgebra>(opposite(*doc.algebra));
    if (which == "bar") return bar_algebra(doc.algebra).bar;
    if (which == "B") return build_b_subalgebra(doc.algebra).b;
    if (which == "gamma") return doc.order ? stratified_gamma().gamma : gamma_algebra(doc.algebra, bound).gamma;
    throw SchemaError("check " + check.name + ": unknown algebra " + which);
  }

  GradedModule module(const std::string& target) const {
    if (target.rfind("bar:", 0) == 0) {
      BarData b = bar_algebra(doc.algebra);
      return bar_module(b, evaluate_module(doc, target.substr(4))).module;
    }
    return evaluate_module(doc, target);
  }
};

QuiverPresentation inline_quiver(const Context& c, const std::string& key, const Field& f) {
  return parse_quiver_block(need(c.check.params, key, "check " + c.check.name), f, c.doc.truncation,
                            "check " + c.check.name + "/" + key);
}

Json op_dims(const Context& c) {
  Json j = verdict_json(Verdict::holds());
  j["dims"] = c.module_target() ? c.module(c.check.target).dims() : c.algebra(c.check.target)->dims();
  return j;
}

Json op_koszul(const Context& c, bool classical) {
  KoszulOptions ko;
  ko.bound = c.bound;
  if (c.module_target()) {
    GradedModule m = c.module(c.check.target);
    KoszulVerdict k = classical ? is_classical_koszul(m, ko) : is_generalized_koszul(m, ko);
    return koszul_json(k, m.algebra());
  }
  AlgebraPtr a = c.algebra(c.check.target);
  KoszulVerdict k = classical ? algebra_is_classical_koszul(a, ko) : algebra_is_generalized_koszul(a, ko);
  return koszul_json(k, *a);
}

Json op_projective(const Context& c) {
  GradedModule m = c.module_target() ? c.module(c.check.target) : regular_module(c.algebra(c.check.target));
  return verdict_json(is_projective_over_a0(m));
}

Json op_generated(const Context& c) {
  GradedModule m = c.module(c.check.target);
  int s = c.check.params.value("degree", 0);
  return verdict_json(is_generated_in_degree(m, s));
}

Json op_commutation(const Context& c) { return verdict_json(commutation_check(*c.algebra(c.check.target))); }

Json op_bar(const Context& c) {
  BarData b = bar_algebra(c.doc.algebra);
  Json j = verdict_json(Verdict::holds());
  j["ideal_dims"] = b.ideal_dims;
  j["bar_dims"] = b.bar->dims();
  j["ideal"] = Json::array();
  for (size_t k = 0; k < b.ideal.dim(); ++k) j["ideal"].push_back(format_element(*b.source, b.ideal.basis_vector(k)));
  if (c.module_target() && c.check.target != "A") {
    GradedModule m = c.module(c.check.target);
    GradedModule mb = bar_module(b, m).module;
    j["module_dims"] = m.dims();
    j["bar_module_dims"] = mb.dims();
    j["generated_in_degree_0"] = status_name(is_generated_in_degree(m, 0).status);
    j["bar_generated_in_degree_0"] = status_name(is_generated_in_degree(mb, 0).status);
    if (c.check.params.contains("iso")) {
      GradedModule other = evaluate_over(c.doc, b.bar, c.param_string("iso"));
      IsoOptions io;
      io.seed = c.seed;
      Verdict v = graded_iso(mb, other, io).verdict;
      j["iso"] = status_name(v.status);
      if (!v.ok()) j["status"] = status_name(v.status);
    }
  }
  if (c.check.params.contains("quiver")) {
    PresentationMatchOptions po;
    po.seed = c.seed;
    Verdict v = match_presentation(inline_quiver(c, "quiver", b.bar->field()), *b.bar, po).verdict;
    j["match"] = status_name(v.status);
    if (!v.ok()) j["status"] = status_name(v.status);
  }
  return j;
}

Json op_correspondence(const Context& c) {
  std::optional<GradedModule> m;
  if (c.module_target()) m = c.module(c.check.target);
  CorrespondenceReport r = correspondence_pipeline(c.doc.algebra, m, c.bound);
  Json j;
  j["status"] = r.theorem_violation ? "Fails" : (r.refused ? "Refused" : "Holds");
  j["commutation"] = status_name(r.commutation.status);
  j["algebra_projective"] = status_name(r.algebra_projective.status);
  if (r.module_projective) j["module_projective"] = status_name(r.module_projective->status);
  j["refused"] = r.refused;
  if (r.refused) j["refusal"] = r.refusal;
  j["generalized"] = status_name(r.generalized.verdict.status);
  if (r.generalized.step) j["generalized_step"] = *r.generalized.step;
  j["classical"] = status_name(r.classical.verdict.status);
  j["agreement"] = r.agreement;
  j["theorem_violation"] = r.theorem_violation;
  j["bar_dims"] = r.bar_dims;
  j["bound"] = c.bound;
  return j;
}

Json op_theorem42(const Context& c) {
  std::optional<GradedModule> m;
  if (c.module_target()) m = c.module(c.check.target);
  Theorem42Report r = theorem42_pipeline(c.doc.algebra, m, c.bound);
  Json j;
  j["status"] = r.violation ? "Fails" : "Holds";
  j["generalized"] = status_name(r.generalized.verdict.status);
  j["projective"] = status_name(r.projective.status);
  j["classical"] = status_name(r.classical.verdict.status);
  j["agreement"] = r.agreement;
  j["theorem_violation"] = r.violation;
  j["converse_applicable"] = r.converse_applicable;
  j["converse_consistent"] = r.converse_consistent;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["bound"] = c.bound;
  if (!m) {
    BSubalgebra b = build_b_subalgebra(c.doc.algebra);
    j["b_dims"] = b.b->dims();
    if (c.check.params.contains("quiver")) {
      PresentationMatchOptions po;
      po.seed = c.seed;
      Verdict v = match_presentation(inline_quiver(c, "quiver", b.b->field()), *b.b, po).verdict;
      j["b_match"] = status_name(v.status);
    }
  }
  return j;
}

Json op_resolution(const Context& c) {
  GradedModule m = c.module_target() ? c.module(c.check.target) : regular_module(c.algebra(c.check.target));
  MinimalResolution r = minimal_resolution(m, c.bound);
  Json j = verdict_json(Verdict::holds());
  j["betti"] = r.betti_string(m.algebra());
  j["syzygy_dims"] = syzygy_dims(r);
  j["terminated"] = r.terminated;
  j["bound"] = c.bound;
  return j;
}

Json op_ext(const Context& c) {
  GradedModule m = c.module(c.check.target);
  GradedModule n = c.check.params.contains("with") ? evaluate_module(c.doc, c.param_string("with")) : degree_zero_module(c.doc.algebra);
  ExtPresentation e = ext_spaces(m, n, c.bound);
  Json j = verdict_json(Verdict::holds());
  j["dims"] = e.dims;
  if (e.window) j["window"] = *e.window;
  if (!e.notes.empty()) j["notes"] = e.notes;
  j["bound"] = c.bound;
  return j;
}

Json op_duality(const Context& c) {
  GradedModule m = c.module(c.check.target);
  DualityReport r = check_duality_roundtrip(c.doc.algebra, m, c.bound);
  Json j = verdict_json(r.verdict);
  j["dims"] = r.dims_m;
  j["roundtrip_dims"] = r.dims_ee;
  j["bound"] = c.bound;
  return j;
}

Json op_fdim(const Context& c) {
  AlgebraPtr a = c.algebra(c.check.target);
  int sb = c.check.params.value("search_bound", 3);
  Verdict v = fdim_zero_certificate(a->degree_zero_algebra(), sb);
  Json j = verdict_json(v);
  // A Fails verdict here carries an explicit module of finite nonzero projective dimension.
  if (v.failed()) j["refuted_with_witness"] = true;
  return j;
}

Json op_iso(const Context& c) {
  GradedModule m = c.module(c.check.target);
  GradedModule n = c.barred_module() ? evaluate_over(c.doc, m.algebra_ptr(), c.param_string("with"))
                                     : evaluate_module(c.doc, c.param_string("with"));
  IsoOptions io;
  io.seed = c.seed;
  Json j = verdict_json(graded_iso(m, n, io).verdict);
  j["dims"] = m.dims();
  j["other_dims"] = n.dims();
  return j;
}

Json op_match(const Context& c) {
  AlgebraPtr a = c.algebra(c.check.target);
  PresentationMatchOptions po;
  po.seed = c.seed;
  PresentationMatch pm = match_presentation(inline_quiver(c, "quiver", a->field()), *a, po);
  Json j = verdict_json(pm.verdict);
  j["dims"] = a->dims();
  return j;
}

Json op_blocks(const Context& c) {
  AlgebraPtr a = c.algebra(c.check.target);
  std::vector<Vec> blocks = graded_block_idempotents(*a);
  Json j = verdict_json(Verdict::holds());
  j["count"] = blocks.size();
  j["block_dims"] = Json::array();
  std::optional<QuiverPresentation> q;
  if (c.check.params.contains("quiver")) q = inline_quiver(c, "quiver", a->field());
  Json matches = Json::array();
  Verdict all = Verdict::holds();
  for (const auto& e : blocks) {
    GradedAlgebra corner = graded_corner(*a, e);
    j["block_dims"].push_back(corner.dims());
    if (q) {
      PresentationMatchOptions po;
      po.seed = c.seed;
      Verdict v = match_presentation(*q, corner, po).verdict;
      matches.push_back(status_name(v.status));
      all = both(all, v);
    }
  }
  if (q) {
    j["matches"] = matches;
    j["status"] = status_name(all.status);
  }
  return j;
}

Json op_category(const Context& c) {
  if (!c.doc.category) throw SchemaError("check " + c.check.name + ": the document has no category");
  const FiniteCategory& cat = *c.doc.category;
  Json j = verdict_json(Verdict::holds());
  j["objects"] = cat.objects();
  j["morphisms"] = cat.num_morphisms();
  std::vector<size_t> endo;
  Json hom = Json::object();
  for (size_t x = 0; x < cat.num_objects(); ++x) {
    endo.push_back(cat.hom(x, x).size());
    for (size_t y = 0; y < cat.num_objects(); ++y)
      if (x != y && !cat.hom(x, y).empty()) hom[cat.objects()[x] + "->" + cat.objects()[y]] = cat.hom(x, y).size();
  }
  j["endomorphisms"] = endo;
  j["hom_sizes"] = hom;
  j["ei"] = status_name(is_ei(cat).status);
  j["free_actions"] = status_name(has_free_actions(cat).status);
  EIGrading g = ei_grading(cat);
  std::vector<size_t> sizes;
  for (const auto& cl : g.classes) sizes.push_back(cl.size());
  j["grading_class_sizes"] = sizes;
  j["algebra_dims"] = c.doc.algebra->dims();
  j["nonendomorphism_power_dims"] = nonendomorphism_power_dims(cat, c.doc.field);
  BarData b = bar_algebra(c.doc.algebra);
  j["bar_dims"] = b.bar->dims();
  j["bar_directed"] = status_name(quotient_is_directed(*b.bar).status);
  if (sizes != c.doc.algebra->dims()) j["status"] = "Fails";
  return j;
}

StratifiedData stratified_data(const Context& c) {
  if (!c.doc.order) throw SchemaError("check " + c.check.name + ": the document has no stratified block");
  return standard_modules(c.doc.algebra, *c.doc.order);
}

Json op_stratified(const Context& c) {
  StratifiedData s = stratified_data(c);
  StratificationReport r = is_standardly_stratified(s);
  Json j = verdict_json(r.verdict);
  Json dims = Json::object(), heights = Json::object(), linear = Json::object(), kernels = Json::object();
  const auto& names = s.order.names();
  for (size_t l = 0; l < names.size(); ++l) {
    dims[names[l]] = s.standard[l].total_dim();
    heights[names[l]] = s.height[l];
    Verdict lf = is_linearly_filtered(s, s.standard[l], c.bound);
    linear[names[l]] = status_name(lf.status);
    if (r.kernel_filtrations[l]) {
      Json f = Json::array();
      for (size_t k : r.kernel_filtrations[l]->factors) f.push_back(names[k]);
      kernels[names[l]] = f;
    }
  }
  j["standard_dims"] = dims;
  j["heights"] = heights;
  j["linearly_filtered"] = linear;
  j["kernel_factors"] = kernels;
  Json pd = Json::object();
  for (size_t l = 0; l < names.size(); ++l) {
    MinimalResolution res = minimal_resolution(s.standard[l], c.bound);
    if (res.terminated) pd[names[l]] = res.terms() - 1;
  }
  j["projective_dimensions"] = pd;
  return j;
}

Json op_theorem52(const Context& c) {
  StratifiedData s = stratified_data(c);
  Theorem52Report r = theorem52_pipeline(s, c.bound);
  Json j;
  j["status"] = r.violation ? "Fails" : (r.preconditions ? "Holds" : "Refused");
  j["stratified"] = status_name(r.stratified.status);
  j["delta_is_gamma0"] = status_name(r.delta_is_gamma0.status);
  j["preconditions"] = r.preconditions;
  if (!r.refusal.empty()) j["refusal"] = r.refusal;
  j["gamma_dims"] = r.gamma_dims;
  j["gamma_projective"] = status_name(r.projective.status);
  j["generalized"] = status_name(r.generalized.verdict.status);
  j["commutation"] = status_name(r.commutation.status);
  if (r.bar_classical) j["bar_classical"] = status_name(r.bar_classical->verdict.status);
  j["bar_dims"] = r.bar_dims;
  j["theorem_violation"] = r.violation;
  j["bound"] = c.bound;
  const GradedAlgebra& g = *r.gamma.gamma;
  size_t higher = 0;
  for (int d = 2; d <= g.top_degree(); ++d) higher += g.dim(d);
  j["ext_at_least_2"] = higher;
  j["gamma_radical_dim"] = g.degree_zero().radical.dim();
  bool kills = true;
  const Subspace& rad = g.degree_zero().radical;
  for (size_t k = 0; k < rad.dim() && kills; ++k) {
    Vec r(g.dim());
    Vec rk = rad.basis_vector(k);
    std::copy(rk.begin(), rk.end(), r.begin() + static_cast<long>(g.offset(0)));
    for (size_t b = 0; b < g.dim(1) && kills; ++b) {
      Vec x = g.basis_vector(g.offset(1) + b);
      kills = is_zero_vec(g.multiply(r, x)) && is_zero_vec(g.multiply(x, r));
    }
  }
  j["radical_annihilates_gamma1"] = kills;
  PresentationMatchOptions po;
  po.seed = c.seed;
  if (c.check.params.contains("quiver"))
    j["gamma_match"] = status_name(match_presentation(inline_quiver(c, "quiver", g.field()), g, po).verdict.status);
  if (r.bar_classical && c.check.params.contains("bar_quiver")) {
    BarData b = bar_algebra(r.gamma.gamma);
    j["bar_match"] = status_name(match_presentation(inline_quiver(c, "bar_quiver", g.field()), *b.bar, po).verdict.status);
  }
  Verdict fd = fdim_zero_certificate(g.degree_zero_algebra());
  j["gamma0_fdim_zero"] = status_name(fd.status);
  if (fd.failed()) j["gamma0_fdim_witness"] = fd.witness;
  return j;
}

Json op_sequence(const Context& c) {
  std::string base = c.check.target == "A" ? "Regular" : c.check.target;
  GradedModule m = evaluate_module(c.doc, base);
  Evaluator ev{c.doc, c.doc.algebra, {}};
  std::vector<Subspace> spaces = ev.sub(base, m, c.param_string("sub"), "check " + c.check.name);
  Submodule s = make_submodule(m, spaces);
  QuotientModule q = quotient(m, spaces);
  ModuleMap f = inclusion_map(s), g = projection_map(m, q);
  Json j;
  Verdict exact = short_exact(s.module, m, q.module, f, g);
  j["exact"] = status_name(exact.status);
  Verdict proj = both(both(is_projective_over_a0(s.module), is_projective_over_a0(m)), is_projective_over_a0(q.module));
  j["terms_a0_projective"] = status_name(proj.status);
  j["commutation"] = status_name(commutation_check(*c.doc.algebra).status);
  BarData b = bar_algebra(c.doc.algebra);
  BarModule sb = bar_module(b, s.module), mb = bar_module(b, m), qb = bar_module(b, q.module);
  ModuleMap fb = bar_map(sb, mb, f), gb = bar_map(mb, qb, g);
  Verdict bexact = short_exact(sb.module, mb.module, qb.module, fb, gb);
  j["bar_exact"] = status_name(bexact.status);
  if (!bexact.ok()) j["bar_witness"] = bexact.witness;
  bool zero = true;
  for (const auto& blk : fb.blocks) zero = zero && blk.is_zero();
  j["bar_first_map_zero"] = zero;
  // Exactness is only promised for A_0-projective terms under commutation.
  bool promised = exact.ok() && proj.ok() && commutation_check(*c.doc.algebra).ok();
  j["theorem_violation"] = promised && bexact.failed();
  j["status"] = j["theorem_violation"].get<bool>() ? "Fails" : "Holds";
  return j;
}

}  // namespace

Json run_check(const SpecDocument& doc, const CheckSpec& check, const RunOptions& opts) {
  Context c{doc, check, check.bound.value_or(opts.hdeg), opts.seed};
  Json j;
  try {
    const std::string& op = check.op;
    if (op == "dims") j = op_dims(c);
    else if (op == "generalized_koszul") j = op_koszul(c, false);
    else if (op == "classical_koszul") j = op_koszul(c, true);
    else if (op == "projective_over_a0") j = op_projective(c);
    else if (op == "generated_in_degree") j = op_generated(c);
    else if (op == "commutation") j = op_commutation(c);
    else if (op == "bar") j = op_bar(c);
    else if (op == "correspondence") j = op_correspondence(c);
    else if (op == "theorem42") j = op_theorem42(c);
    else if (op == "resolution") j = op_resolution(c);
    else if (op == "ext") j = op_ext(c);
    else if (op == "duality") j = op_duality(c);
    else if (op == "fdim_zero") j = op_fdim(c);
    else if (op == "iso") j = op_iso(c);
    else if (op == "match") j = op_match(c);
    else if (op == "blocks") j = op_blocks(c);
    else if (op == "category") j = op_category(c);
    else if (op == "stratified") j = op_stratified(c);
    else if (op == "theorem52") j = op_theorem52(c);
    else if (op == "sequence") j = op_sequence(c);
    else throw SchemaError("check " + check.name + ": unknown op " + op);
  } catch (const Error& e) {
    j = Json::object();
    j["status"] = "Error";
    j["error"] = e.what();
  }
  j["name"] = check.name;
  j["op"] = check.op;
  j["target"] = check.target;
  return j;
}

Json run_document(const SpecDocument& doc, const RunOptions& opts) {
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["document"] = doc.name;
  r["species"] = doc.species;
  r["field"] = doc.field.spec_string();
  r["algebra_dims"] = doc.algebra->dims();
  r["checks"] = Json::array();
  bool violation = false;
  size_t errors = 0;
  for (const auto& c : doc.checks) {
    if (opts.only && c.name != *opts.only) continue;
    Json j = run_check(doc, c, opts);
    violation = violation || j.value("theorem_violation", false);
    if (j["status"] == "Error") ++errors;
    r["checks"].push_back(std::move(j));
  }
  if (opts.only && r["checks"].empty()) throw SchemaError(doc.name + ": no check named " + *opts.only);
  r["theorem_violation"] = violation;
  r["errors"] = errors;
  return r;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "document " << report.value("document", "?") << " (" << report.value("species", "?") << ", field "
     << report.value("field", "?") << ")\n";
  if (report.contains("algebra_dims")) os << "  algebra dims " << report["algebra_dims"].dump() << "\n";
  size_t wn = 5, wo = 2, wt = 6;
  for (const auto& c : report["checks"]) {
    wn = std::max(wn, c["name"].get<std::string>().size());
    wo = std::max(wo, c["op"].get<std::string>().size());
    wt = std::max(wt, c["target"].get<std::string>().size());
  }
  os << "  " << std::left << std::setw(static_cast<int>(wn) + 2) << "check" << std::setw(static_cast<int>(wo) + 2) << "op"
     << std::setw(static_cast<int>(wt) + 2) << "target" << "status\n";
  static const std::set<std::string> header{"name", "op", "target", "status", "betti"};
  for (const auto& c : report["checks"]) {
    os << "  " << std::left << std::setw(static_cast<int>(wn) + 2) << c["name"].get<std::string>()
       << std::setw(static_cast<int>(wo) + 2) << c["op"].get<std::string>() << std::setw(static_cast<int>(wt) + 2)
       << c["target"].get<std::string>() << c["status"].get<std::string>() << "\n";
    for (const auto& [k, v] : c.items()) {
      if (header.count(k)) continue;
      os << "      " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (c.contains("betti")) {
      std::istringstream lines(c["betti"].get<std::string>());
      std::string line;
      while (std::getline(lines, line)) os << "      | " << line << "\n";
    }
  }
  os << "  theorem violation: " << (report.value("theorem_violation", false) ? "yes" : "no") << ", errors: "
     << report.value("errors", 0) << "\n";
  return os.str();
}

std::vector<std::string> compare_expected(const Json& report, const Json& expected) {
  std::vector<std::string> out;
  if (!expected.contains("checks") || !expected["checks"].is_object()) {
    out.push_back("expected file has no checks object");
    return out;
  }
  for (const auto& [name, keys] : expected["checks"].items()) {
    const Json* found = nullptr;
    for (const auto& c : report["checks"])
      if (c["name"] == name) found = &c;
    if (!found) {
      out.push_back(name + ": check missing from the report");
      continue;
    }
    for (const auto& [key, value] : keys.items()) {
      Json::json_pointer ptr(key.front() == '/' ? key : "/" + key);
      if (!found->contains(ptr)) {
        out.push_back(name + "." + key + ": expected " + value.dump() + ", missing");
      } else if (found->at(ptr) != value) {
        out.push_back(name + "." + key + ": expected " + value.dump() + ", got " + found->at(ptr).dump());
      }
    }
  }
  return out;
}

bool CorpusResult::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.passed; });
}

CorpusResult run_corpus(const std::filesystem::path& dir, const RunOptions& opts, const std::vector<std::string>& only) {
  CorpusResult r;
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir))
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".spec" &&
          (only.empty() || std::find(only.begin(), only.end(), e.path().filename().string()) != only.end()))
        files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& o : only)
    if (std::none_of(files.begin(), files.end(), [&](const auto& f) { return f.filename() == o; }))
      throw SchemaError(dir.string() + ": no corpus file " + o);
  if (files.empty()) {
    r.warnings.push_back("no .spec files in " + dir.string());
    return r;
  }
  std::vector<std::future<CorpusEntry>> jobs;
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, [f, opts] {
      CorpusEntry e;
      e.file = f.filename().string();
      try {
        SpecDocument doc = load_document(f);
        Json report = run_document(doc, opts);
        std::filesystem::path exp = f;
        exp.replace_extension(".expected.json");
        std::ifstream in(exp);
        if (!in) throw SchemaError(exp.filename().string() + ": expected file missing");
        Json expected = Json::parse(in);
        e.mismatches = compare_expected(report, expected);
        for (const auto& c : report["checks"])
          if (c["status"] == "Error") e.mismatches.push_back(c["name"].get<std::string>() + ": " + c["error"].get<std::string>());
        e.passed = e.mismatches.empty();
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
      return e;
    }));
  for (auto& j : jobs) r.entries.push_back(j.get());
  return r;
}

Json corpus_report(const CorpusResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["entries"] = Json::array();
  size_t passed = 0;
  for (const auto& e : r.entries) {
    Json x;
    x["file"] = e.file;
    x["passed"] = e.passed;
    if (!e.mismatches.empty()) x["mismatches"] = e.mismatches;
    if (!e.error.empty()) x["error"] = e.error;
    passed += e.passed;
    j["entries"].push_back(x);
  }
  j["passed"] = passed;
  j["total"] = r.entries.size();
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace koszul
