#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "penner/coxeter.hpp"
#include "penner/topology.hpp"

using namespace penner;

namespace {

IntersectionPattern pattern_of(const Graph& g) { return pattern_from_graph(g).pattern; }

}  // namespace

TEST_CASE("A2 has a single forced framing") {
  const auto p = pattern_of(path_graph(2));
  CHECK(framing_count(p) == 2);  // the two crossing signs are mirror images
  const CellCounts c = trace_faces(FramedPattern::standard(p));
  CHECK(c.zero_cells == 1);
  CHECK(c.one_cells == 2);
  CHECK(c.two_cells == 1);
  CHECK(c.euler_characteristic == 0);
  CHECK(c.genus == 1);
}

TEST_CASE("A3 and A6") {
  const CellCounts a3 = trace_faces(FramedPattern::standard(pattern_of(path_graph(3))));
  CHECK(a3.two_cells == 2);
  CHECK(a3.euler_characteristic == 0);
  CHECK(a3.genus == 1);
  for_each_framing(pattern_of(path_graph(6)), [](const FramedPattern& f) { CHECK(trace_faces(f).genus == 3); });
}

TEST_CASE("framed patterns are validated") {
  Matrix<std::int64_t> x(1, 1);
  x << 2;
  CHECK_THROWS_AS(FramedPattern::standard(IntersectionPattern(x)), Error);
  Matrix<std::int64_t> isolated(2, 1);
  isolated << 1, 0;
  try {
    FramedPattern::standard(IntersectionPattern(isolated));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_parameter);
  }
  const auto p = pattern_of(path_graph(4));  // α = {0, 2}, β = {1, 3}; X = [[1,0],[1,1]]
  try {
    FramedPattern(p, {{0}, {0}}, {{0, 1}, {1}}, Matrix<int>::Ones(2, 2));
    FAIL("expected InvalidMap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_map);
  }
  CHECK_NOTHROW(FramedPattern(p, {{0}, {1, 0}}, {{1, 0}, {1}}, Matrix<int>::Ones(2, 2)));
}

TEST_CASE("Euler characteristic is consistent on random framings") {
  std::mt19937 rng(12);
  int checked = 0;
  while (checked < 200) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 4);
    Matrix<std::int64_t> x(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) x(i, j) = rng() % 2;
    const IntersectionPattern p(x);
    if (!p.is_filling_candidate() || framing_count(p) > 4096) continue;
    int visited = 0;
    for_each_framing(p, [&](const FramedPattern& f) {
      if (visited++ % 7 != 0) return;
      const CellCounts c = trace_faces(f);
      CHECK(c.one_cells == 2 * c.zero_cells);
      CHECK(c.zero_cells == p.x().sum());
      REQUIRE(c.genus);
      CHECK(c.zero_cells - c.one_cells + c.two_cells == 2 - 2 * *c.genus);
      CHECK(c.two_cells % 2 == face_parity(p.intersection_graph()));
    });
    ++checked;
  }
}

TEST_CASE("tree enumeration oracle") {
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) CHECK(oracle::all_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
}

TEST_CASE("face counts of trees do not depend on the framing") {
  for (int n = 2; n <= 8; ++n)
    for (const Graph& t : oracle::all_trees(n)) {
      const auto dist = face_distribution(pattern_of(t));
      CHECK(dist.size() == 1);
      CHECK(dist.begin()->first % 2 == face_parity(t));
      CHECK(genus_bound_from_parity(t) >= tree_genus(t));
    }
}

TEST_CASE("closed-form genera of A_n and D_n agree with face tracing") {
  for (int n = 2; n <= 12; ++n) {
    const auto dist = face_distribution(pattern_of(path_graph(n)));
    REQUIRE(dist.size() == 1);
    CHECK(dist.begin()->first == (n % 2 == 0 ? 1 : 2));
    for_each_framing(pattern_of(path_graph(n)),
                     [&](const FramedPattern& f) { CHECK(trace_faces(f).genus == tree_fill_genus(TreeFamily::A, n)); });
  }
  for (int n = 4; n <= 10; ++n) {
    const Graph d = dynkin_shape(DynkinFamily::D, n);
    const auto dist = face_distribution(pattern_of(d));
    REQUIRE(dist.size() == 1);
    CHECK(dist.begin()->first == (n % 2 == 1 ? 2 : 3));
    for_each_framing(pattern_of(d),
                     [&](const FramedPattern& f) { CHECK(trace_faces(f).genus == tree_fill_genus(TreeFamily::D, n)); });
  }
}

TEST_CASE("tree_fill_genus examples") {
  CHECK(tree_fill_genus(TreeFamily::A, 8) == 4);
  CHECK(tree_fill_genus(TreeFamily::D, 7) == 3);
  CHECK(tree_fill_genus(TreeFamily::D, 8) == 3);
  CHECK(tree_fill_genus(TreeFamily::A, 2) == 1);
  CHECK_THROWS_AS(tree_fill_genus(TreeFamily::A, 1), Error);
  CHECK_THROWS_AS(tree_fill_genus(TreeFamily::D, 3), Error);
}

TEST_CASE("E diagrams") {
  CHECK(tree_genus(dynkin_shape(DynkinFamily::E6)) == 3);
  CHECK(tree_genus(dynkin_shape(DynkinFamily::E7)) == 3);
  CHECK(tree_genus(dynkin_shape(DynkinFamily::E8)) == 4);
}

TEST_CASE("cycles: parity bound and framing dependence") {
  CHECK(cycle_fill_genus_bound(4) == 2);
  CHECK(cycle_fill_genus_bound(6) == 3);
  CHECK_THROWS_AS(cycle_fill_genus_bound(5), Error);
  CHECK(face_parity(cycle_graph(6)) == 0);
  CHECK(face_parity(path_graph(6)) == 1);
  const Graph enriched = dynkin_shape(DynkinFamily::enriched_6_cycle);
  CHECK(face_parity(enriched) == 1);
  CHECK(genus_bound_from_parity(enriched) == 4);

  const auto dist = face_distribution(pattern_of(cycle_graph(6)));
  CHECK(dist.size() > 1);
  for (const auto& [faces, count] : dist) {
    CHECK(faces % 2 == 0);
    CHECK(3 - faces / 2 + 1 <= cycle_fill_genus_bound(6));  // genus = (2 - χ)/2 with χ = F - 6
  }
  const auto enriched_dist = face_distribution(pattern_of(enriched));
  for (const auto& [faces, count] : enriched_dist) CHECK(faces % 2 == 1);
}
