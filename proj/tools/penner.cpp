// Command line front end: dilatation, coxeter, genus, minimize, table1, limits.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>

#include "penner/coxeter.hpp"
#include "penner/document.hpp"
#include "penner/search.hpp"
#include "penner/topology.hpp"

using namespace penner;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kMinimalPolynomialDegree = 16;

// Ten significant digits, kept as a number so text and JSON agree.
double sig10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

Json min_poly_json(const RootApproximation& r) {
  const auto p = minimal_polynomial(r, kMinimalPolynomialDegree);
  if (!p) return "degree > " + std::to_string(kMinimalPolynomialDegree);
  return p->to_string();
}

Json value_json(const RootApproximation& r) {
  return {{"value", sig10(r.value)}, {"error_radius", sig10(r.radius)}, {"minimal_polynomial", min_poly_json(r)}};
}

std::string one_based(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x + 1);
  return out;
}

std::string signs_text(const std::vector<int>& signs) {
  std::string out;
  for (int s : signs) out += (out.empty() ? "" : " ") + std::string(s > 0 ? "+" : "-");
  return out;
}

// Scalars as text; floating values keep all ten digits.
std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.10g", v.get<double>());
    return buf;
  }
  return v.dump();
}

// Generic "key: value" rendering of a report.
void render(std::ostream& out, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render(out, value, indent + 2);
    } else if (value.is_array() && value.empty()) {
      out << pad << key << ": none\n";
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render(out, item, indent + 4);
        } else {
          out << pad << "  - " << scalar_text(item) << '\n';
        }
      }
    } else {
      out << pad << key << ": " << scalar_text(value) << '\n';
    }
  }
}

PatternDocument load(const std::string& path) { return path == "-" ? parse_document(std::string(std::istreambuf_iterator<char>(std::cin), {})) : read_document(path); }

IntersectionPattern pattern_of(const PatternDocument& d) {
  if (d.pattern) return *d.pattern;
  if (d.graph) return pattern_from_graph(*d.graph).pattern;
  fail(ErrorCode::invalid_document, "the document has neither a pattern nor a graph");
}

Json cmd_dilatation(const std::string& path, const std::string& word_text, double tol) {
  const PatternDocument d = load(path);
  const IntersectionPattern p = pattern_of(d);
  std::string source = "document";
  TwistWord w;
  if (!word_text.empty()) {
    w = parse_word(word_text);
    source = "command line";
  } else if (d.word) {
    w = *d.word;
  } else {
    w = bipartite_word(p);
    source = "bipartite (default)";
  }
  const SpectralReport r = dilatation_report(p, w, tol);
  Json out;
  out["pattern"] = std::to_string(p.alpha_count()) + " x " + std::to_string(p.beta_count());
  out["word"] = to_string(w);
  out["word_source"] = source;
  out["dilatation"] = sig10(r.radius.value);
  out["error_radius"] = sig10(r.radius.radius);
  out["char_poly"] = r.char_poly.to_string();
  out["minimal_polynomial"] = min_poly_json(r.radius);
  Json certs = Json::array();
  if (const auto c = double_intersection_certificate(p, tol)) {
    certs.push_back({{"kind", "double_intersection"},
                     {"curves", "a" + std::to_string(c->alpha + 1) + " b" + std::to_string(c->beta + 1)},
                     {"intersections", c->x},
                     {"polynomial", c->poly.to_string()},
                     {"lower_bound", sig10(c->bound.value)}});
  } else if (p.is_filling_candidate()) {
    const AdmissibilityReport a = classify(p);
    if (a.excluded())
      certs.push_back({{"kind", to_string(*a.excluded_by)},
                       {"subgraph", a.shape->name()},
                       {"lower_bound", sig10(3.0 + 2.0 * std::numbers::sqrt2)}});
    else
      out["survivor"] = a.shape->name();
  }
  out["certificates"] = certs;
  return out;
}

Json cmd_coxeter(const std::string& path, const std::string& order_mode, double tol) {
  const PatternDocument d = load(path);
  const Graph g = d.graph ? *d.graph : pattern_of(d).intersection_graph();
  const MixedSignCoxeterGraph cg = d.signs ? MixedSignCoxeterGraph(g, *d.signs)
                                           : MixedSignCoxeterGraph::with_mode(g, g.is_bipartite() ? SignMode::alternating
                                                                                                   : SignMode::classical);
  const ReflectionOrder order = order_mode == "bipartite"
                                    ? bipartite_order(cg)
                                    : (d.reflections ? ReflectionOrder(*d.reflections, g.vertex_count())
                                                     : ReflectionOrder::identity(g.vertex_count()));
  const CoxeterSpectrum s = coxeter_spectrum(cg, order, tol);
  Json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["signs"] = signs_text(cg.signs());
  out["order"] = one_based(order.indices());
  out["coxeter_char_poly"] = s.coxeter_char_poly.to_string();
  out["homological_char_poly"] = s.homological_char_poly.to_string();
  out["spectral_radius"] = sig10(s.spectral_radius);
  out["certified"] = s.certified.has_value();
  out["homological_nonnegative"] = s.homological_nonnegative;
  if (s.certified) out["minimal_polynomial"] = min_poly_json(*s.certified);
  if (g.is_tree()) out["note"] = "tree: the characteristic polynomial does not depend on the order";

  // Penner's construction for the same order: + vertices are α curves, - vertices β curves
  bool alternating = g.edge_count() > 0;
  for (const auto& [u, v] : g.edges()) alternating = alternating && cg.sign(u) != cg.sign(v);
  if (alternating) {
    std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()));
    int n = 0, m = 0;
    for (int v = 0; v < g.vertex_count(); ++v) slot[static_cast<std::size_t>(v)] = cg.sign(v) > 0 ? n++ : m++;
    if (n > 0 && m > 0) {
      Matrix<std::int64_t> x = Matrix<std::int64_t>::Zero(n, m);
      for (const auto& [u, v] : g.edges()) {
        const int a = cg.sign(u) > 0 ? u : v, b = a == u ? v : u;
        x(slot[static_cast<std::size_t>(a)], slot[static_cast<std::size_t>(b)]) = 1;
      }
      TwistWord w;
      for (int v : order.indices())
        w.push_back(cg.sign(v) > 0 ? Letter::alpha(slot[static_cast<std::size_t>(v)])
                                   : Letter::beta(slot[static_cast<std::size_t>(v)]));
      const RootApproximation r = dilatation(IntersectionPattern(x), w, tol);
      out["penner_word"] = to_string(w);
      out["penner_dilatation"] = value_json(r);
    }
  }
  return out;
}

Json genus_of_graph(const Graph& g, bool distribution) {
  Json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  if (g.is_tree()) {
    out["genus"] = tree_genus(g);
    out["note"] = "tree: every framing fills the same genus";
    return out;
  }
  out["genus_bound"] = genus_bound_from_parity(g);
  out["two_cell_parity"] = face_parity(g) == 1 ? "odd" : "even";
  if (distribution) {
    Json rows = Json::array();
    for (const auto& [faces, count] : face_distribution(pattern_from_graph(g).pattern))
      rows.push_back({{"two_cells", faces}, {"genus", (2 + g.edge_count() - faces) / 2}, {"framings", count}});
    out["distribution"] = rows;
  }
  return out;
}

Json cmd_genus(const std::string& path, const std::string& family, int n, bool distribution) {
  if (!path.empty()) {
    const PatternDocument d = load(path);
    if (d.pattern && d.has_framing()) {
      const CellCounts c = trace_faces(framing_of(d));
      Json out;
      out["zero_cells"] = c.zero_cells;
      out["one_cells"] = c.one_cells;
      out["two_cells"] = c.two_cells;
      out["euler_characteristic"] = c.euler_characteristic;
      if (c.genus) out["genus"] = *c.genus;
      else out["genus"] = "undefined (disconnected or odd Euler characteristic)";
      return out;
    }
    return genus_of_graph(d.graph ? *d.graph : pattern_of(d).intersection_graph(), distribution);
  }
  if (family == "A" || family == "D") {
    Json out;
    out["family"] = family + std::to_string(n);
    out["genus"] = tree_fill_genus(family == "A" ? TreeFamily::A : TreeFamily::D, n);
    return out;
  }
  if (family == "cycle") {
    cycle_fill_genus_bound(n);  // validates n
    Json out{{"family", std::to_string(n) + "-cycle"}};
    out.update(genus_of_graph(cycle_graph(n), distribution));
    return out;
  }
  fail(ErrorCode::invalid_parameter, "give a file or --family A|D|cycle with --n");
}

Json cmd_minimize(int genus, const std::string& mode, double tol) {
  const MinimalDilatation m = minimal_dilatation(genus, mode == "certified" ? SearchMode::certified : SearchMode::closed_form, tol);
  Json out;
  out["genus"] = m.genus;
  out["mode"] = mode;
  out["dilatation"] = sig10(m.value);
  // the witness product certifies the value in both modes
  const RootApproximation r = m.certified ? *m.certified : dilatation(m.witness_pattern, m.witness_word, tol);
  out["error_radius"] = sig10(m.certified ? r.radius : std::abs(m.value - r.value) + r.radius);
  out["minimal_polynomial"] = min_poly_json(r);
  out["witness"] = m.witness.name() + " alternating";
  out["witness_word"] = to_string(m.witness_word);
  if (mode == "certified") {
    Json audit = Json::array();
    for (const auto& c : m.audit)
      audit.push_back({{"candidate", c.type.name()},
                       {"admitted_by", c.genus_evidence},
                       {"word", to_string(c.word)},
                       {"words_evaluated", c.words_evaluated},
                       {"dilatation", sig10(c.value.value)}});
    out["audit"] = audit;
    out["notes"] = m.notes;
  }
  return out;
}

Json cmd_table1(double tol) {
  Json rows = Json::array();
  for (const Table1Row& r : table1(tol)) {
    Json row;
    row["graph"] = r.type.name();
    row["genus"] = (r.genus_is_bound ? "<= " : "") + std::to_string(r.genus);
    row["dilatation"] = sig10(r.dilatation.value);
    row["word"] = to_string(r.word);
    if (r.lower_bound) row["lower_bound"] = sig10(r.lower_bound->value), row["lower_bound_from"] = r.lower_bound_from->name();
    rows.push_back(row);
  }
  return {{"rows", rows}};
}

Json cmd_limits(int gmax) {
  if (gmax < 1) fail(ErrorCode::invalid_genus, "--gmax must be at least 1");
  const double limit = 3.0 + 2.0 * std::numbers::sqrt2;
  Json rows = Json::array();
  for (int g = 1; g <= gmax; ++g) {
    const double l = lambda_closed_form(g);
    rows.push_back({{"g", g}, {"lambda", sig10(l)}, {"gap", sig10(limit - l)}});
  }
  return {{"limit", sig10(limit)}, {"rows", rows}};
}

void print_table1(std::ostream& out, const Json& j) {
  out << "graph              genus  dilatation\n";
  for (const auto& row : j["rows"]) {
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %-6s %s", row["graph"].get<std::string>().c_str(),
                  row["genus"].get<std::string>().c_str(), scalar_text(row["dilatation"]).c_str());
    out << line;
    if (row.contains("lower_bound"))
      out << "  (>= " << scalar_text(row["lower_bound"]) << " from " << row["lower_bound_from"].get<std::string>() << ")";
    out << '\n';
  }
}

void print_limits(std::ostream& out, const Json& j) {
  out << "g,lambda,gap\n";
  for (const auto& row : j["rows"])
    out << row["g"].dump() << ',' << scalar_text(row["lambda"]) << ',' << scalar_text(row["gap"]) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Penner dilatations, mixed-sign Coxeter graphs and the minimal-dilatation search"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  double tol = kDefaultTolerance;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--tol", tol, "radius of the certified interval")->check(CLI::PositiveNumber);

  std::string file, word, order = "bipartite", family, mode = "certified";
  int n = 0, genus = 1, gmax = 10;
  bool distribution = false;

  auto* dil = app.add_subcommand("dilatation", "certified dilatation of a pattern and twist word");
  dil->add_option("file", file, "pattern document, - for stdin")->required();
  dil->add_option("--word", word, "twist word, e.g. \"a1 b1 a2\"");

  auto* cox = app.add_subcommand("coxeter", "spectrum of a mixed-sign Coxeter transformation");
  cox->add_option("file", file, "graph document")->required();
  cox->add_option("--order", order, "bipartite or custom (the document's reflections)")
      ->check(CLI::IsMember({"bipartite", "custom"}));

  auto* gen = app.add_subcommand("genus", "genus filled by a pattern");
  gen->add_option("file", file, "pattern document");
  gen->add_option("--family", family)->check(CLI::IsMember({"A", "D", "cycle"}));
  gen->add_option("--n", n);
  gen->add_flag("--distribution", distribution, "2-cell counts over all framings");

  auto* mini = app.add_subcommand("minimize", "minimal dilatation for a closed surface");
  mini->add_option("--genus", genus)->required();
  mini->add_option("--mode", mode)->check(CLI::IsMember({"closed_form", "certified"}));

  auto* tab = app.add_subcommand("table1", "recompute the exceptional-graph table");
  auto* lim = app.add_subcommand("limits", "λ_g for g = 1..G and the gap to 3+2√2, as CSV");
  lim->add_option("--gmax", gmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Json report;
    if (*dil) report = cmd_dilatation(file, word, tol);
    else if (*cox) report = cmd_coxeter(file, order, tol);
    else if (*gen) report = cmd_genus(file, family, n, distribution);
    else if (*mini) report = cmd_minimize(genus, mode, tol);
    else if (*tab) report = cmd_table1(tol);
    else report = cmd_limits(gmax);

    if (json) std::cout << report.dump(2) << '\n';
    else if (*tab) print_table1(std::cout, report);
    else if (*lim) print_limits(std::cout, report);
    else render(std::cout, report);
    return 0;
  } catch (const Error& e) {
    const std::string code{to_string(e.code())};
    if (json) std::cout << Json{{"error", {{"code", code}, {"message", e.what()}}}}.dump(2) << '\n';
    std::cerr << "error: " << code << ": " << e.what() << '\n';
    return e.is_internal() ? 3 : 2;
  }
}
