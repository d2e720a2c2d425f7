#include "koszul/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

size_t QuiverPresentation::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw SchemaError("unknown vertex '" + name + "'");
}

size_t QuiverPresentation::source(const Path& p) const {
  return p.arrows.empty() ? p.vertex : arrows[p.arrows.back()].source;
}

size_t QuiverPresentation::target(const Path& p) const {
  return p.arrows.empty() ? p.vertex : arrows[p.arrows.front()].target;
}

int QuiverPresentation::degree(const Path& p) const {
  int d = 0;
  for (size_t a : p.arrows) d += arrows[a].degree;
  return d;
}

std::string QuiverPresentation::path_label(const Path& p) const {
  if (p.arrows.empty()) return "1_" + vertices[p.vertex];
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + arrows[p.arrows[i]].name;
  return s;
}

namespace {

std::string trim_copy(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') return false;
  return true;
}

}  // namespace

Path QuiverPresentation::parse_path(const std::string& text) const {
  Path p;
  std::stringstream ss(text);
  std::string tok;
  std::vector<std::string> toks;
  while (std::getline(ss, tok, '*')) toks.push_back(trim_copy(tok));
  for (const auto& t : toks) {
    if (t.empty()) throw SchemaError("empty factor in path '" + text + "'");
    auto it = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.name == t; });
    if (it != arrows.end()) {
      p.arrows.push_back(static_cast<size_t>(it - arrows.begin()));
      continue;
    }
    if ((t.rfind("1_", 0) == 0 || t.rfind("e_", 0) == 0) && toks.size() == 1) {
      p.vertex = vertex_index(t.substr(2));
      return p;
    }
    throw SchemaError("unknown arrow '" + t + "' in path '" + text + "'");
  }
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (arrows[p.arrows[i]].source != arrows[p.arrows[i + 1]].target)
      throw SchemaError("path '" + text + "' is not composable (" + arrows[p.arrows[i + 1]].name + " must end where " +
                        arrows[p.arrows[i]].name + " starts)");
  if (!p.arrows.empty()) p.vertex = arrows[p.arrows.back()].source;
  return p;
}

PathCombination QuiverPresentation::parse_combination(const std::string& text) const {
  PathCombination out;
  std::string cur;
  int sign = 1;
  auto flush = [&](int next_sign) {
    std::string t = trim_copy(cur);
    cur.clear();
    if (!t.empty()) {
      Rational coeff(sign);
      std::string rest = t;
      size_t star = t.find('*');
      std::string head = trim_copy(star == std::string::npos ? t : t.substr(0, star));
      if (looks_numeric(head)) {
        coeff = coeff * Rational::parse(head);
        rest = star == std::string::npos ? "" : t.substr(star + 1);
      }
      rest = trim_copy(rest);
      if (rest.empty()) {
        if (!coeff.is_zero()) throw SchemaError("scalar term in path combination '" + text + "'");
      } else if (!coeff.is_zero()) {
        out.push_back({coeff, parse_path(rest)});
      }
    } else if (next_sign == 0) {
      // end of input with nothing pending
    }
    sign = next_sign;
  };
  for (char c : text) {
    if (c == '+' || c == '-') {
      if (trim_copy(cur).empty()) {
        sign = c == '-' ? -sign : sign;
        continue;
      }
      flush(c == '-' ? -1 : 1);
    } else {
      cur.push_back(c);
    }
  }
  flush(1);
  return out;
}

void QuiverPresentation::add_relations(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '=')) parts.push_back(tok);
  std::vector<PathCombination> combos;
  for (const auto& p : parts) combos.push_back(parse_combination(p));
  if (combos.size() == 1 || combos.back().empty()) {
    for (const auto& c : combos)
      if (!c.empty()) relations.push_back(c);
    return;
  }
  for (size_t i = 0; i + 1 < combos.size(); ++i) {
    PathCombination r = combos[i];
    for (const auto& t : combos[i + 1]) r.push_back({-t.coeff, t.path});
    if (!r.empty()) relations.push_back(r);
  }
}

namespace {

struct DegreeSpace {
  std::vector<Path> paths;
  std::map<Path, size_t> index;
  Subspace ideal;
};

int leading_run(const QuiverPresentation& q, const Path& p) {
  int run = 0;
  for (size_t a : p.arrows) {
    if (q.arrows[a].degree != 0) break;
    ++run;
  }
  return run;
}

int longest_run(const QuiverPresentation& q, const std::vector<size_t>& arrows) {
  int best = 0, run = 0;
  for (size_t a : arrows) {
    run = q.arrows[a].degree == 0 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

// Paths of degree <= max_degree whose degree-0 runs are shorter than run_cap,
// with total length <= length_cap.
std::vector<Path> enumerate_paths(const QuiverPresentation& q, int max_degree, int run_cap, int length_cap) {
  std::vector<Path> all, frontier;
  for (size_t v = 0; v < q.vertices.size(); ++v) frontier.push_back(Path{{}, v});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      all.push_back(p);
      if (static_cast<int>(p.arrows.size()) >= length_cap) continue;
      int deg = q.degree(p);
      int run = leading_run(q, p);
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != q.target(p)) continue;
        int nd = deg + q.arrows[a].degree;
        if (nd > max_degree) continue;
        int nrun = q.arrows[a].degree == 0 ? run + 1 : 0;
        if (nrun >= run_cap) continue;
        Path np;
        np.arrows.push_back(a);
        np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
        np.vertex = q.source(p);
        next.push_back(std::move(np));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Orders paths so the largest come first; they become pivots and the
// smallest surviving paths form the normal-form basis.
bool larger_path(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() > b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows > b.arrows;
  return a.vertex > b.vertex;
}

struct SplitRelation {
  size_t source, target;
  int degree;
  PathCombination terms;
};

std::vector<SplitRelation> split_relations(const QuiverPresentation& q) {
  std::vector<SplitRelation> out;
  for (const auto& rel : q.relations) {
    if (rel.empty()) continue;
    int d = q.degree(rel[0].path);
    for (const auto& t : rel)
      if (q.degree(t.path) != d)
        throw InhomogeneousRelation("relation mixes degrees " + std::to_string(d) + " and " +
                                    std::to_string(q.degree(t.path)) + " (" + q.path_label(rel[0].path) + ", " +
                                    q.path_label(t.path) + ")");
    std::map<std::pair<size_t, size_t>, PathCombination> parts;
    for (const auto& t : rel) parts[{q.source(t.path), q.target(t.path)}].push_back(t);
    for (auto& [st, terms] : parts) out.push_back({st.first, st.second, d, std::move(terms)});
  }
  return out;
}

// Ideal generated by the relations inside the span of the given paths of one
// degree. Products with a degree-0 run of length >= run_cap are dropped, and
// when max_term_length >= 0 only products whose every term fits are used.
Subspace ideal_in_degree(const QuiverPresentation& q, const std::vector<SplitRelation>& rels,
                         const std::vector<Path>& all_paths, DegreeSpace& space, int degree, int run_cap,
                         int max_term_length) {
  const Field& f = q.field;
  std::vector<Vec> gens;
  for (const auto& r : rels) {
    if (r.degree > degree) continue;
    int rest = degree - r.degree;
    for (const auto& left : all_paths) {
      int dl = q.degree(left);
      if (dl > rest || q.source(left) != r.target) continue;
      for (const auto& right : all_paths) {
        if (dl + q.degree(right) != rest || q.target(right) != r.source) continue;
        Vec v(space.paths.size());
        bool any = false, fits = true;
        for (const auto& t : r.terms) {
          Path p;
          p.arrows = left.arrows;
          p.arrows.insert(p.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
          p.arrows.insert(p.arrows.end(), right.arrows.begin(), right.arrows.end());
          p.vertex = p.arrows.empty() ? right.vertex : q.arrows[p.arrows.back()].source;
          if (max_term_length >= 0 && static_cast<int>(p.arrows.size()) > max_term_length) {
            fits = false;
            break;
          }
          if (longest_run(q, p.arrows) >= run_cap) continue;
          auto it = space.index.find(p);
          if (it == space.index.end()) continue;
          v[it->second] = f.add(v[it->second], f.from_rational(t.coeff));
          any = true;
        }
        if (fits && any) gens.push_back(std::move(v));
      }
    }
  }
  return Subspace::span(f, space.paths.size(), gens);
}

DegreeSpace make_space(const QuiverPresentation& q, const std::vector<Path>& all_paths, int degree) {
  DegreeSpace s;
  for (const auto& p : all_paths)
    if (q.degree(p) == degree) s.paths.push_back(p);
  std::sort(s.paths.begin(), s.paths.end(), larger_path);
  for (size_t i = 0; i < s.paths.size(); ++i) s.index[s.paths[i]] = i;
  return s;
}

}  // namespace

QuiverAlgebra build_quiver_algebra(const QuiverPresentation& q) {
  const Field& f = q.field;
  if (q.vertices.empty()) throw SchemaError("quiver has no vertices");
  if (q.truncation < 0) throw SchemaError("truncation must be nonnegative");
  for (const auto& a : q.arrows) {
    if (a.degree != 0 && a.degree != 1) throw SchemaError("arrow " + a.name + " must have degree 0 or 1");
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw SchemaError("arrow " + a.name + " has an unknown endpoint");
  }
  auto rels = split_relations(q);

  // Length at which every degree-0 path vanishes.
  int run_cap = -1;
  bool has_zero_arrows = std::any_of(q.arrows.begin(), q.arrows.end(), [](const Arrow& a) { return a.degree == 0; });
  if (!has_zero_arrows) {
    run_cap = 1;
  } else {
    for (int len = 1; len <= q.degree_zero_length_bound + 1; ++len) {
      auto paths = enumerate_paths(q, 0, len + 1, len);
      DegreeSpace space = make_space(q, paths, 0);
      Subspace ideal = ideal_in_degree(q, rels, paths, space, 0, len + 1, len);
      bool all_killed = true;
      for (size_t i = 0; i < space.paths.size() && all_killed; ++i)
        if (static_cast<int>(space.paths[i].arrows.size()) == len && !ideal.contains(unit_vec(space.paths.size(), i)))
          all_killed = false;
      if (all_killed) {
        run_cap = len;
        break;
      }
    }
    if (run_cap < 0)
      throw DegreeZeroPartInfinite("degree-0 paths of length " + std::to_string(q.degree_zero_length_bound) +
                                   " survive the relations");
  }

  int max_deg = q.truncation + 1;
  auto all_paths = enumerate_paths(q, max_deg, run_cap, 1 << 20);
  std::vector<DegreeSpace> spaces;
  std::vector<std::vector<size_t>> basis_rows;  // per degree: rows of the space forming the basis
  int top = -1;
  bool exact = false;
  for (int d = 0; d <= max_deg; ++d) {
    DegreeSpace s = make_space(q, all_paths, d);
    s.ideal = ideal_in_degree(q, rels, all_paths, s, d, run_cap, -1);
    auto comp = s.ideal.complement_rows();
    if (comp.empty()) {
      exact = true;
      break;
    }
    if (d == max_deg) break;
    std::sort(comp.begin(), comp.end(), [&](size_t a, size_t b) { return larger_path(s.paths[b], s.paths[a]); });
    basis_rows.push_back(comp);
    spaces.push_back(std::move(s));
    top = d;
  }

  GradedAlgebra::Data data;
  data.field = f;
  data.truncation = q.truncation;
  data.exact = exact;
  std::vector<std::vector<size_t>> global_of_row(spaces.size());
  ObjectStructure obj;
  obj.names = q.vertices;
  obj.identity.assign(q.vertices.size(), 0);
  for (int d = 0; d <= top; ++d) {
    auto& s = spaces[static_cast<size_t>(d)];
    global_of_row[static_cast<size_t>(d)].assign(s.paths.size(), static_cast<size_t>(-1));
    for (size_t r : basis_rows[static_cast<size_t>(d)]) {
      const Path& p = s.paths[r];
      size_t g = data.labels.size();
      global_of_row[static_cast<size_t>(d)][r] = g;
      data.labels.push_back(q.path_label(p));
      data.degree.push_back(d);
      obj.source.push_back(q.source(p));
      obj.target.push_back(q.target(p));
      if (p.arrows.empty()) obj.identity[p.vertex] = g;
    }
  }
  size_t n = data.labels.size();
  std::vector<Path> basis_paths;
  for (int d = 0; d <= top; ++d)
    for (size_t r : basis_rows[static_cast<size_t>(d)]) basis_paths.push_back(spaces[static_cast<size_t>(d)].paths[r]);

  std::vector<std::map<size_t, SparseVec>> nf_cache(spaces.size());
  auto normal_form = [&](const Path& p) -> SparseVec {
    int d = q.degree(p);
    if (d > top || longest_run(q, p.arrows) >= run_cap) return {};
    auto& s = spaces[static_cast<size_t>(d)];
    auto it = s.index.find(p);
    if (it == s.index.end()) return {};
    auto& cache = nf_cache[static_cast<size_t>(d)];
    auto c = cache.find(it->second);
    if (c != cache.end()) return c->second;
    Vec red = s.ideal.reduce(unit_vec(s.paths.size(), it->second));
    SparseVec out;
    for (size_t r = 0; r < red.size(); ++r)
      if (!red[r].is_zero()) out.emplace_back(static_cast<uint32_t>(global_of_row[static_cast<size_t>(d)][r]), red[r]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cache[it->second] = out;
    return out;
  };

  data.table.resize(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Path& u = basis_paths[i];
      const Path& v = basis_paths[j];
      if (q.source(u) != q.target(v)) continue;
      if (data.degree[i] + data.degree[j] > top) continue;
      Path w;
      w.arrows = u.arrows;
      w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
      w.vertex = w.arrows.empty() ? v.vertex : q.arrows[w.arrows.back()].source;
      data.table[i * n + j] = normal_form(w);
    }
  data.unit.assign(n, Scalar());
  for (size_t v = 0; v < q.vertices.size(); ++v) data.unit[obj.identity[v]] = f.one();
  data.objects = obj;

  QuiverAlgebra qa;
  qa.algebra = GradedAlgebra(std::move(data));
  for (size_t v = 0; v < q.vertices.size(); ++v) qa.vertex_elements.push_back(unit_vec(n, obj.identity[v]));
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    Path p{{a}, q.arrows[a].source};
    qa.arrow_elements.push_back(to_dense(normal_form(p), n));
  }
  return qa;
}

GradedAlgebra build_graded(const QuiverPresentation& q) { return build_quiver_algebra(q).algebra; }

Vec QuiverAlgebra::element(const PathCombination& c) const {
  const GradedAlgebra& a = algebra;
  const Field& f = a.field();
  Vec out(a.dim());
  for (const auto& t : c) {
    Vec v;
    if (t.path.arrows.empty()) {
      v = vertex_elements.at(t.path.vertex);
    } else {
      v = arrow_elements.at(t.path.arrows.back());
      for (size_t k = t.path.arrows.size() - 1; k-- > 0;) v = a.multiply(arrow_elements.at(t.path.arrows[k]), v);
    }
    axpy(f, out, f.from_rational(t.coeff), v);
  }
  return out;
}

}  // namespace koszul
