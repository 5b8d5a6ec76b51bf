#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "penner/search.hpp"
#include "penner/topology.hpp"

using namespace penner;

namespace {

const double kSilver = 3.0 + 2.0 * std::numbers::sqrt2;

bool is_embedding(const Graph& g, const Graph& h, const Embedding& e) {
  if (static_cast<int>(e.size()) != h.vertex_count()) return false;
  std::set<int> image(e.begin(), e.end());
  if (static_cast<int>(image.size()) != h.vertex_count()) return false;
  for (const auto& [u, v] : h.edges())
    if (!g.has_edge(e[static_cast<std::size_t>(u)], e[static_cast<std::size_t>(v)])) return false;
  return true;
}

// Every injective map, for tiny graphs.
bool brute_force_contains(const Graph& g, const Graph& h) {
  std::vector<int> pool(static_cast<std::size_t>(g.vertex_count()));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<char> pick(pool.size(), 0);
  std::fill(pick.begin(), pick.begin() + h.vertex_count(), 1);
  do {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) chosen.push_back(pool[i]);
    do
      if (is_embedding(g, h, chosen)) return true;
    while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

double bipartite_dilatation(const Graph& g) {
  const IntersectionPattern p = pattern_from_graph(g).pattern;
  return dilatation(p, bipartite_word(p)).value;
}

}  // namespace

TEST_CASE("contains_subgraph examples") {
  const Graph enriched = dynkin_shape(DynkinFamily::enriched_6_cycle);
  const Graph e7 = dynkin_shape(DynkinFamily::E7);
  const auto e = contains_subgraph(enriched, e7);
  REQUIRE(e);
  CHECK(is_embedding(enriched, e7, *e));

  const auto id = contains_subgraph(path_graph(5), path_graph(5));
  REQUIRE(id);
  CHECK(*id == Embedding{0, 1, 2, 3, 4});

  CHECK_FALSE(contains_subgraph(cycle_graph(6), cycle_graph(4)));
  CHECK_FALSE(contains_subgraph(path_graph(3), path_graph(4)));
}

TEST_CASE("contains_subgraph agrees with brute force") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    const int k = 2 + static_cast<int>(rng() % 3);
    const Graph h = k == 2 ? path_graph(2) : oracle::random_tree(rng, k);
    const auto e = contains_subgraph(g, h);
    CHECK(e.has_value() == brute_force_contains(g, h));
    if (e) CHECK(is_embedding(g, h, *e));
  }
}

TEST_CASE("classify examples") {
  const AdmissibilityReport star = classify(dynkin_shape(DynkinFamily::affine_D, 4));
  CHECK(star.excluded_by == ExclusionReason::affine_subgraph);
  CHECK(star.shape == DynkinType{DynkinFamily::affine_D, 4});
  CHECK_FALSE(star.surviving_type);

  Graph pendant(9);
  for (int i = 0; i < 8; ++i) pendant.add_edge(i, (i + 1) % 8);
  pendant.add_edge(0, 8);
  const AdmissibilityReport r = classify(pendant);
  CHECK(r.excluded_by == ExclusionReason::affine_subgraph);
  CHECK(r.shape == DynkinType{DynkinFamily::affine_E7, 8});
  CHECK(is_embedding(pendant, dynkin_shape(DynkinFamily::affine_E7), r.witness));

  const AdmissibilityReport a7 = classify(path_graph(7));
  CHECK(a7.surviving_type == SurvivorType::A_n);
  CHECK_FALSE(a7.excluded_by);

  CHECK(classify(cycle_graph(4)).excluded_by == ExclusionReason::four_cycle_subgraph);
  CHECK(classify(cycle_graph(8)).surviving_type == SurvivorType::even_cycle);
  CHECK(classify(dynkin_shape(DynkinFamily::enriched_6_cycle)).surviving_type == SurvivorType::enriched_6_cycle);
  CHECK(classify(dynkin_shape(DynkinFamily::E8)).surviving_type == SurvivorType::E8);
  CHECK(classify(Graph(1)).surviving_type == SurvivorType::A_n);

  Matrix<std::int64_t> x(2, 2);
  x << 1, 2, 1, 0;
  const AdmissibilityReport d = classify(IntersectionPattern(x));
  CHECK(d.excluded_by == ExclusionReason::double_intersection);
  CHECK(d.crossing == std::pair{0, 1});

  CHECK_THROWS_AS(classify(Graph(3, {{0, 1}})), Error);
  try {
    classify(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    FAIL("expected NotBipartite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_bipartite);
  }
}

TEST_CASE("a 4-cycle with a tail is not the enriched 6-cycle") {
  Graph g(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}});
  CHECK_FALSE(identify_dynkin(g));
  CHECK(classify(g).excluded());
}

TEST_CASE("classification is complete on small bipartite graphs") {
  const std::size_t expected[] = {1, 1, 1, 3, 5, 17, 44, 182, 730};
  std::map<std::string, int> survivors;
  for (int n = 1; n <= 9; ++n) {
    const auto graphs = oracle::all_connected_bipartite(n);
    CHECK(graphs.size() == expected[n - 1]);
    for (const Graph& g : graphs) {
      AdmissibilityReport r;
      REQUIRE_NOTHROW(r = classify(g));
      CHECK(r.excluded_by.has_value() != r.surviving_type.has_value());
      if (r.excluded()) {
        REQUIRE(r.shape);
        CHECK(is_embedding(g, dynkin_shape(r.shape->family, r.shape->n), r.witness));
      } else {
        ++survivors[to_string(*r.surviving_type)];
      }
    }
  }
  // survivors up to 9 vertices: A1..A9, D4..D9, E6..E8, 6- and 8-cycles, enriched 6-cycle
  CHECK(survivors["A_n"] == 9);
  CHECK(survivors["D_n"] == 6);
  CHECK(survivors["E6"] == 1);
  CHECK(survivors["E7"] == 1);
  CHECK(survivors["E8"] == 1);
  CHECK(survivors["even_cycle"] == 2);
  CHECK(survivors["enriched_6_cycle"] == 1);
}

TEST_CASE("excluded graphs never beat 3+2√2") {
  int excluded = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : oracle::all_connected_bipartite(n)) {
      if (!classify(g).excluded()) continue;
      ++excluded;
      CHECK(bipartite_dilatation(g) >= kSilver - 1e-9);
    }
  CHECK(excluded > 0);
}

TEST_CASE("dilatation is monotone under subtrees") {
  for (int n = 3; n <= 9; ++n)
    for (const Graph& t : oracle::all_trees(n)) {
      const double big = bipartite_dilatation(t);
      for (int leaf = 0; leaf < n; ++leaf) {
        if (t.degree(leaf) != 1) continue;
        Graph sub(n - 1);
        for (const auto& [u, v] : t.edges())
          if (u != leaf && v != leaf) sub.add_edge(u - (u > leaf), v - (v > leaf));
        CHECK(bipartite_dilatation(sub) <= big + 1e-9);
      }
    }
}

TEST_CASE("fillable genera") {
  CHECK(fillable_genera(path_graph(6)) == std::vector<int>{3});
  const auto cycle = fillable_genera(cycle_graph(6));
  CHECK(cycle.back() == 3);
  CHECK(cycle.front() >= 1);
  const auto enriched = fillable_genera(dynkin_shape(DynkinFamily::enriched_6_cycle));
  CHECK(enriched.back() == 4);
}

TEST_CASE("minimal_dilatation: certified search matches the closed form") {
  for (int g = 1; g <= 4; ++g) {
    const MinimalDilatation closed = minimal_dilatation(g, SearchMode::closed_form);
    const MinimalDilatation cert = minimal_dilatation(g, SearchMode::certified);
    CHECK(std::abs(closed.value - cert.value) < 1e-9);
    CHECK(cert.witness == DynkinType{DynkinFamily::A, 2 * g});
    CHECK(closed.witness == cert.witness);
    REQUIRE(cert.certified);
    CHECK(cert.certified->radius <= 1e-12);
    for (const auto& c : cert.audit) CHECK(c.value.value >= cert.value - 1e-12);
    CHECK(cert.audit.front().type == DynkinType{DynkinFamily::A, 2 * g});
  }
}

TEST_CASE("minimal_dilatation audit contents") {
  auto names = [](const MinimalDilatation& m) {
    std::vector<std::string> out;
    for (const auto& c : m.audit) out.push_back(c.type.name());
    return out;
  };
  const MinimalDilatation g1 = minimal_dilatation(1);
  CHECK(std::abs(g1.value - (3.0 + std::sqrt(5.0)) / 2.0) < 1e-12);
  CHECK(names(g1) == std::vector<std::string>{"A2", "A3", "D4"});

  const MinimalDilatation g3 = minimal_dilatation(3);
  CHECK(std::abs(g3.value - 5.049) < 1e-3);
  const auto n3 = names(g3);
  for (const char* expected : {"A6", "A7", "D7", "D8", "E6", "E7", "enriched 6-cycle"})
    CHECK(std::find(n3.begin(), n3.end(), expected) != n3.end());
  CHECK(std::find(n3.begin(), n3.end(), "E8") == n3.end());

  const MinimalDilatation g5 = minimal_dilatation(5);
  CHECK(std::abs(g5.value - lambda_closed_form(5)) < 1e-9);
  CHECK(g5.witness == DynkinType{DynkinFamily::A, 10});
  CHECK_FALSE(g5.notes.empty());

  try {
    minimal_dilatation(0);
    FAIL("expected InvalidGenus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_genus);
  }
}

TEST_CASE("table1 rows") {
  const auto rows = table1();
  REQUIRE(rows.size() == 6);
  const std::pair<int, double> expected[] = {{3, 5.049}, {4, 5.345}, {3, 5.552}, {3, 5.704}, {4, 5.783}};
  for (int i = 0; i < 5; ++i) {
    CHECK(rows[i].genus == expected[i].first);
    CHECK_FALSE(rows[i].genus_is_bound);
    CHECK(std::abs(rows[i].dilatation.value - expected[i].second) < 1e-3);
  }
  const Table1Row& enriched = rows[5];
  CHECK(enriched.genus == 4);
  CHECK(enriched.genus_is_bound);
  CHECK(enriched.dilatation.value > 5.7);
  REQUIRE(enriched.lower_bound);
  CHECK(enriched.lower_bound->value > 5.7);
  CHECK(enriched.dilatation.value >= enriched.lower_bound->value - 1e-12);
}
