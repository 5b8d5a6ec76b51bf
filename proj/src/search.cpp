#include "penner/search.hpp"

#include <algorithm>
#include <set>

#include "penner/error.hpp"
#include "penner/topology.hpp"

namespace penner {

namespace {

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;   // h vertices, each adjacent to an earlier one where possible
  std::vector<int> anchor;  // earlier neighbour in `order`, or -1
  Embedding map;
  std::vector<char> used;

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    const int v = order[k];
    auto try_vertex = [&](int w) {
      if (used[static_cast<std::size_t>(w)] || g.degree(w) < h.degree(v)) return false;
      for (int u : h.neighbors(v)) {
        const int image = map[static_cast<std::size_t>(u)];
        if (image >= 0 && !g.has_edge(w, image)) return false;
      }
      map[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      if (extend(k + 1)) return true;
      map[static_cast<std::size_t>(v)] = -1;
      used[static_cast<std::size_t>(w)] = 0;
      return false;
    };
    const int a = anchor[k];
    if (a >= 0) {
      for (int w : g.neighbors(map[static_cast<std::size_t>(a)]))
        if (try_vertex(w)) return true;
      return false;
    }
    for (int w = 0; w < g.vertex_count(); ++w)
      if (try_vertex(w)) return true;
    return false;
  }
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& g, const Graph& h) {
  const int n = h.vertex_count();
  if (n > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;
  Matcher m{g, h, {}, {}, Embedding(static_cast<std::size_t>(n), -1),
            std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0)};
  // BFS from high-degree vertices so the most constrained choices come first
  std::vector<int> seeds(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) seeds[static_cast<std::size_t>(v)] = v;
  std::stable_sort(seeds.begin(), seeds.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  for (int s : seeds) {
    if (parent[static_cast<std::size_t>(s)] != -2) continue;
    parent[static_cast<std::size_t>(s)] = -1;
    std::size_t head = m.order.size();
    m.order.push_back(s);
    while (head < m.order.size()) {
      const int v = m.order[head++];
      for (int w : h.neighbors(v))
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = v;
          m.order.push_back(w);
        }
    }
  }
  for (int v : m.order) m.anchor.push_back(parent[static_cast<std::size_t>(v)]);
  if (!m.extend(0)) return std::nullopt;
  return m.map;
}

std::string to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::double_intersection: return "double_intersection";
    case ExclusionReason::affine_subgraph: return "affine_subgraph";
    case ExclusionReason::four_cycle_subgraph: return "four_cycle_subgraph";
  }
  return "?";
}

std::string to_string(SurvivorType t) {
  switch (t) {
    case SurvivorType::A_n: return "A_n";
    case SurvivorType::D_n: return "D_n";
    case SurvivorType::E6: return "E6";
    case SurvivorType::E7: return "E7";
    case SurvivorType::E8: return "E8";
    case SurvivorType::even_cycle: return "even_cycle";
    case SurvivorType::enriched_6_cycle: return "enriched_6_cycle";
  }
  return "?";
}

AdmissibilityReport classify(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !g.is_connected()) fail(ErrorCode::invalid_parameter, "classify needs a nonempty connected graph");
  if (!g.is_bipartite()) fail(ErrorCode::not_bipartite, "intersection graphs are bipartite");

  AdmissibilityReport out;
  auto exclude_if_contains = [&](ExclusionReason reason, DynkinType type, const Graph& h) {
    if (auto e = contains_subgraph(g, h)) {
      out.excluded_by = reason;
      out.shape = type;
      out.witness = std::move(*e);
      return true;
    }
    return false;
  };

  // D̃_k has k + 1 vertices
  for (int k = 4; k + 1 <= n; ++k)
    if (exclude_if_contains(ExclusionReason::affine_subgraph, {DynkinFamily::affine_D, k},
                            dynkin_shape(DynkinFamily::affine_D, k)))
      return out;
  for (auto [family, size] : {std::pair{DynkinFamily::affine_E6, 7}, {DynkinFamily::affine_E7, 8},
                              {DynkinFamily::affine_E8, 9}})
    if (size <= n && exclude_if_contains(ExclusionReason::affine_subgraph, {family, size}, dynkin_shape(family)))
      return out;
  if (exclude_if_contains(ExclusionReason::four_cycle_subgraph, {DynkinFamily::cycle, 4}, cycle_graph(4)))
    return out;

  const auto type = identify_dynkin(g);
  if (!type) fail(ErrorCode::unclassified_survivor, "no survivor family matches " + g.to_string());
  switch (type->family) {
    case DynkinFamily::A: out.surviving_type = SurvivorType::A_n; break;
    case DynkinFamily::D: out.surviving_type = SurvivorType::D_n; break;
    case DynkinFamily::E6: out.surviving_type = SurvivorType::E6; break;
    case DynkinFamily::E7: out.surviving_type = SurvivorType::E7; break;
    case DynkinFamily::E8: out.surviving_type = SurvivorType::E8; break;
    case DynkinFamily::cycle: out.surviving_type = SurvivorType::even_cycle; break;
    case DynkinFamily::enriched_6_cycle: out.surviving_type = SurvivorType::enriched_6_cycle; break;
    default:
      fail(ErrorCode::unclassified_survivor, type->name() + " passed the affine exclusion test");
  }
  out.shape = type;
  return out;
}

AdmissibilityReport classify(const IntersectionPattern& p) {
  if (const auto cert = double_intersection_certificate(p)) {
    AdmissibilityReport out;
    out.excluded_by = ExclusionReason::double_intersection;
    out.crossing = std::pair{cert->alpha, cert->beta};
    return out;
  }
  return classify(p.intersection_graph());
}

std::vector<int> fillable_genera(const Graph& g) {
  const int edges = g.edge_count();
  std::set<int> genera;
  // χ = V - E + F with V = #crossings = edges of g and E = 2V
  for (const auto& [faces, count] : face_distribution(pattern_from_graph(g).pattern)) genera.insert((2 + edges - faces) / 2);
  return {genera.begin(), genera.end()};
}

namespace {

bool fills(const Graph& g, int genus) {
  const auto genera = fillable_genera(g);
  return std::find(genera.begin(), genera.end(), genus) != genera.end();
}

CandidateResult evaluate(DynkinType type, Graph graph, std::string evidence, double tol) {
  const AdmissibilityReport report = classify(graph);
  if (report.excluded())
    fail(ErrorCode::internal_inconsistency, type.name() + " candidate was excluded by " + to_string(*report.excluded_by));
  CandidateResult out{type, std::move(graph), std::move(evidence), {}, {}, 1};
  const IntersectionPattern p = pattern_from_graph(out.graph).pattern;
  if (out.graph.is_tree()) {
    // trees: every Coxeter order is conjugate to the bipartite one
    out.word = bipartite_word(p);
    out.value = dilatation(p, out.word, tol);
  } else {
    const WordMinimum best = minimize_over_words(p, 0, tol);
    out.word = best.word;
    out.value = best.value;
    out.words_evaluated = best.words_evaluated;
  }
  return out;
}

void add_tree(std::vector<CandidateResult>& audit, DynkinType type, int genus, double tol) {
  Graph g = dynkin_shape(type.family, type.n);
  const int filled = tree_genus(g);
  if (filled != genus) return;
  audit.push_back(evaluate(type, std::move(g), "tree genus " + std::to_string(filled), tol));
}

}  // namespace

MinimalDilatation minimal_dilatation(int genus, SearchMode mode, double tol) {
  if (genus < 1) fail(ErrorCode::invalid_genus, "genus must be at least 1");
  MinimalDilatation out;
  out.genus = genus;
  out.mode = mode;
  out.witness = {DynkinFamily::A, 2 * genus};
  out.witness_pattern = pattern_from_graph(path_graph(2 * genus)).pattern;
  out.witness_word = bipartite_word(out.witness_pattern);
  if (mode == SearchMode::closed_form) {
    out.value = lambda_closed_form(genus);
    return out;
  }

  const int g = genus;
  auto& audit = out.audit;
  // A_n and D_n fill genus g exactly for these n
  add_tree(audit, {DynkinFamily::A, 2 * g}, g, tol);
  add_tree(audit, {DynkinFamily::A, 2 * g + 1}, g, tol);
  if (2 * g + 1 >= 4) add_tree(audit, {DynkinFamily::D, 2 * g + 1}, g, tol);
  add_tree(audit, {DynkinFamily::D, 2 * g + 2}, g, tol);
  out.notes.push_back("A_n and D_n with n > " + std::to_string(2 * g + 2) + " fill genus > " + std::to_string(g));

  if (g <= 4) {
    for (int length : {2 * g, 2 * g + 2}) {
      if (length < 6) {
        if (length == 4) out.notes.push_back("4-cycle: excluded, its dilatations are at least 3+2√2");
        continue;
      }
      Graph c = cycle_graph(length);
      if (fills(c, g))
        audit.push_back(evaluate({DynkinFamily::cycle, length}, std::move(c), "a framing fills genus " + std::to_string(g), tol));
      else
        out.notes.push_back(std::to_string(length) + "-cycle: no framing fills genus " + std::to_string(g));
    }
    out.notes.push_back("cycles longer than " + std::to_string(2 * g + 2) + " contain A_" + std::to_string(2 * g) +
                        " and are dominated by it");
    add_tree(audit, {DynkinFamily::E6, 6}, g, tol);
    add_tree(audit, {DynkinFamily::E7, 7}, g, tol);
    add_tree(audit, {DynkinFamily::E8, 8}, g, tol);
    Graph enriched = dynkin_shape(DynkinFamily::enriched_6_cycle);
    if (fills(enriched, g))
      audit.push_back(evaluate({DynkinFamily::enriched_6_cycle, 7}, std::move(enriched),
                               "a framing fills genus " + std::to_string(g), tol));
  } else {
    out.notes.push_back("every surviving cycle filling genus " + std::to_string(g) + " contains A_" +
                        std::to_string(2 * g) + " and is dominated by it");
    out.notes.push_back("E6, E7, E8 and the enriched 6-cycle fill genus at most 4");
  }

  const CandidateResult* best = nullptr;
  for (const auto& c : audit)
    if (!best || c.value.upper < best->value.lower) best = &c;
  if (!best) fail(ErrorCode::internal_inconsistency, "no candidate fills genus " + std::to_string(g));
  out.value = best->value.value;
  out.certified = best->value;
  out.witness = best->type;
  out.witness_pattern = pattern_from_graph(best->graph).pattern;
  out.witness_word = best->word;
  return out;
}

std::vector<Table1Row> table1(double tol) {
  std::vector<Table1Row> rows;
  for (DynkinType t : {DynkinType{DynkinFamily::A, 6}, DynkinType{DynkinFamily::A, 8}, DynkinType{DynkinFamily::E6, 6},
                       DynkinType{DynkinFamily::E7, 7}, DynkinType{DynkinFamily::E8, 8}}) {
    const Graph g = dynkin_shape(t.family, t.n);
    const IntersectionPattern p = pattern_from_graph(g).pattern;
    Table1Row row{t, tree_genus(g), false, {}, bipartite_word(p), std::nullopt, std::nullopt};
    row.dilatation = dilatation(p, row.word, tol);
    rows.push_back(std::move(row));
  }

  const Graph enriched = dynkin_shape(DynkinFamily::enriched_6_cycle);
  const auto genera = fillable_genera(enriched);
  const WordMinimum best = minimize_over_words(pattern_from_graph(enriched).pattern, 0, tol);
  Table1Row row{{DynkinFamily::enriched_6_cycle, 7}, genera.back(), true, best.value, best.word, std::nullopt,
                std::nullopt};
  if (!contains_subgraph(enriched, dynkin_shape(DynkinFamily::E7)))
    fail(ErrorCode::internal_inconsistency, "the enriched 6-cycle should contain E7");
  row.lower_bound = rows[3].dilatation;
  row.lower_bound_from = rows[3].type;
  rows.push_back(std::move(row));
  return rows;
}

}  // namespace penner
