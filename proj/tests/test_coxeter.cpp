#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "penner/coxeter.hpp"

using namespace penner;

namespace {

const double kSilver = 3.0 + 2.0 * std::sqrt(2.0);

IntegerMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

MixedSignCoxeterGraph a2_plus_minus() { return {path_graph(2), {1, -1}}; }

// Reference product of explicit reflection matrices, first reflection rightmost.
IntegerMatrix product_of_reflections(const MixedSignCoxeterGraph& g, const std::vector<int>& order) {
  IntegerMatrix c = IntegerMatrix::Identity(g.vertex_count(), g.vertex_count());
  for (int k : order) c = (reflection(g, k) * c).eval();
  return c;
}

bool same_multiset(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("bilinear form") {
  CHECK(bilinear_form(MixedSignCoxeterGraph::classical(path_graph(1))) == mat({{-2}}));
  CHECK(bilinear_form(a2_plus_minus()) == mat({{-2, 1}, {1, 2}}));
  const auto c4 = dynkin_graph(DynkinFamily::cycle, 4);
  CHECK(bilinear_form(c4) == mat({{-2, 1, 0, 1}, {1, 2, 1, 0}, {0, 1, -2, 1}, {1, 0, 1, 2}}));
}

TEST_CASE("reflections on A2 with signs (+,-)") {
  const auto g = a2_plus_minus();
  // s_1: v_1 -> -v_1, v_2 -> v_2 + v_1 (columns are images)
  CHECK(reflection(g, 0) == mat({{-1, 1}, {0, 1}}));
  // s_2: v_1 -> v_1 - v_2
  CHECK(reflection(g, 1) == mat({{1, 0}, {-1, -1}}));
  CHECK_THROWS_AS(reflection(g, 2), Error);
}

TEST_CASE("Coxeter transformation and homological action on A2") {
  const auto g = a2_plus_minus();
  CHECK(coxeter_transformation(MixedSignCoxeterGraph::classical(path_graph(1)), ReflectionOrder::identity(1)) ==
        mat({{-1}}));
  const ReflectionOrder order = bipartite_order(g);
  CHECK(order.indices() == std::vector<int>{1, 0});
  CHECK(coxeter_transformation(g, order) == mat({{-2, -1}, {-1, -1}}));
  CHECK(homological_action(g, order) == mat({{2, 1}, {1, 1}}));
  CHECK(homological_action(MixedSignCoxeterGraph::classical(path_graph(1)), ReflectionOrder::identity(1)) ==
        mat({{1}}));
}

TEST_CASE("reflection orders are validated") {
  CHECK_THROWS_AS(ReflectionOrder({0, 0, 1}, 3), Error);
  CHECK_THROWS_AS(ReflectionOrder({0, 1}, 3), Error);
  CHECK_THROWS_AS(ReflectionOrder({0, 1, 3}, 3), Error);
}

TEST_CASE("bipartite orders") {
  // 4-cycle 1-2-3-4 (0-based 0..3): negative class {1,3} first
  CHECK(bipartite_order(dynkin_graph(DynkinFamily::cycle, 4)).indices() == std::vector<int>{1, 3, 0, 2});
  CHECK(bipartite_order(dynkin_graph(DynkinFamily::A, 4)).indices() == std::vector<int>{1, 3, 0, 2});
  CHECK_THROWS_AS(bipartite_order(MixedSignCoxeterGraph::classical(cycle_graph(3))), Error);
  try {
    MixedSignCoxeterGraph::alternating(cycle_graph(5));
    FAIL("expected NotBipartite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_bipartite);
  }
}

TEST_CASE("row-operation product matches explicit reflection products") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const Graph t = oracle::random_tree(rng, n);
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int& s : signs) s = rng() % 2 ? 1 : -1;
    const MixedSignCoxeterGraph g(t, signs);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(coxeter_transformation(g, ReflectionOrder(order, n)) == product_of_reflections(g, order));
  }
}

TEST_CASE("reflections are B-orthogonal involutions") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 8;
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j);
    std::vector<int> signs(static_cast<std::size_t>(n));
    for (int& s : signs) s = rng() % 2 ? 1 : -1;
    const MixedSignCoxeterGraph cg(g, signs);
    const IntegerMatrix b = bilinear_form(cg);
    for (int i = 0; i < n; ++i) {
      const IntegerMatrix s = reflection(cg, i);
      CHECK((s * s).eval() == IntegerMatrix::Identity(n, n));
      CHECK((s.transpose() * b * s).eval() == b);
    }
  }
}

TEST_CASE("tree Coxeter char polys do not depend on the order") {
  std::mt19937 rng(41);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      const Graph t = oracle::random_tree(rng, n);
      for (SignMode mode : {SignMode::classical, SignMode::alternating}) {
        const auto g = MixedSignCoxeterGraph::with_mode(t, mode);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        const IntPolynomial reference = char_poly(coxeter_transformation(g, ReflectionOrder(order, n)));
        do {
          CHECK(char_poly(coxeter_transformation(g, ReflectionOrder(order, n))) == reference);
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 7 + trial % 3;
    const auto g = MixedSignCoxeterGraph::alternating(oracle::random_tree(rng, n));
    const IntPolynomial reference = char_poly(coxeter_transformation(g, bipartite_order(g)));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(char_poly(coxeter_transformation(g, ReflectionOrder(order, n))) == reference);
  }
}

TEST_CASE("flipping all signs keeps the bipartite homological spectrum") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph t = oracle::random_tree(rng, 2 + trial % 8);
    const auto g = MixedSignCoxeterGraph::alternating(t);
    const auto f = g.flipped();
    CHECK(char_poly(homological_action(g, bipartite_order(g))) == char_poly(homological_action(f, bipartite_order(f))));
  }
}

TEST_CASE("eigenvalue relations with the adjacency spectrum of a tree") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 9;
    const Graph t = oracle::random_tree(rng, n);
    std::vector<double> alpha_sq;
    for (const auto& z : oracle::roots_with_multiplicity(char_poly(exact_cast<Integer>(t.adjacency()))))
      alpha_sq.push_back(z.real() * z.real());

    const auto classical = MixedSignCoxeterGraph::classical(t);
    std::vector<double> from_mu;
    for (const auto& mu : oracle::roots_with_multiplicity(char_poly(coxeter_transformation(classical, bipartite_order(classical)))))
      from_mu.push_back((2.0 + mu + 1.0 / mu).real());
    CHECK(same_multiset(alpha_sq, from_mu, 1e-9));

    const auto alt = MixedSignCoxeterGraph::alternating(t);
    std::vector<double> from_lambda;
    for (const auto& lam : oracle::roots_with_multiplicity(char_poly(coxeter_transformation(alt, bipartite_order(alt)))))
      from_lambda.push_back((-2.0 - lam - 1.0 / lam).real());
    CHECK(same_multiset(alpha_sq, from_lambda, 1e-9));
  }
}

TEST_CASE("classical_to_alternating") {
  CHECK(classical_to_alternating(1.0) == 1.0);
  CHECK(classical_to_alternating(-1.0) == doctest::Approx(kSilver).epsilon(1e-15));
  CHECK(classical_to_alternating(0.5) == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(classical_to_alternating(1.5), Error);
}

TEST_CASE("Alexander polynomial of T(2, 2g+1)") {
  CHECK(alexander_torus_2_odd(1) == IntPolynomial{1, -1, 1});
  CHECK(alexander_torus_2_odd(2) == IntPolynomial{1, -1, 1, -1, 1});
  for (int g = 1; g <= 12; ++g) {
    const IntPolynomial delta = alexander_torus_2_odd(g);
    CHECK(delta.degree() == 2 * g);
    CHECK(delta.evaluate(Integer(1)) == 1);
    for (const auto& z : complex_roots(delta)) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
    const AlexanderRoute route = alexander_route(g);
    CHECK(route.roots_found == 2 * g);
    // μ = ξ^{2g-1} for ξ = exp(2πi/(4g+2))
    CHECK(route.min_real_part == doctest::Approx(std::cos(2.0 * std::numbers::pi * (2 * g - 1) / (4 * g + 2))));
  }
}

TEST_CASE("closed form for lambda_g") {
  CHECK(lambda_closed_form(1) == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(std::abs(lambda_closed_form(3) - 5.049) < 1e-3);
  CHECK(std::abs(lambda_closed_form(4) - 5.345) < 1e-3);
  for (int g = 1; g < 50; ++g) CHECK(lambda_closed_form(g) < lambda_closed_form(g + 1));
  CHECK(lambda_closed_form(50) < kSilver);
  for (int g = 1; g <= 20; ++g)
    CHECK(lambda_closed_form(g) ==
          doctest::Approx(classical_to_alternating(std::cos((2.0 * g - 1.0) / (2.0 * g + 1.0) * std::numbers::pi))));
}

TEST_CASE("three routes to lambda_g agree") {
  for (int g = 1; g <= 10; ++g) {
    const auto a = dynkin_graph(DynkinFamily::A, 2 * g);
    const double direct = spectral_radius(homological_action(a, bipartite_order(a))).value;
    const double closed = lambda_closed_form(g);
    const double alexander = alexander_route(g).lambda;
    CHECK(std::abs(direct - closed) < 1e-9);
    CHECK(std::abs(alexander - closed) < 1e-9);
  }
}

TEST_CASE("A4 homological action") {
  const auto a4 = dynkin_graph(DynkinFamily::A, 4);
  const IntegerMatrix h = homological_action(a4, bipartite_order(a4));
  CHECK(is_nonnegative(h));
  CHECK(char_poly(h) == IntPolynomial{1, -7, 13, -7, 1});
  CHECK(std::abs(spectral_radius(h).value - 4.390256884) < 1e-8);
}

TEST_CASE("Dynkin shapes") {
  CHECK(dynkin_shape(DynkinFamily::A, 2) == path_graph(2));
  const Graph star = dynkin_shape(DynkinFamily::affine_D, 4);
  CHECK(star.vertex_count() == 5);
  CHECK(star.max_degree() == 4);
  CHECK(dynkin_shape(DynkinFamily::D, 5).edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 4}, {2, 3}});
  CHECK(dynkin_shape(DynkinFamily::E6).vertex_count() == 6);
  CHECK(dynkin_shape(DynkinFamily::E8).vertex_count() == 8);
  CHECK(dynkin_shape(DynkinFamily::affine_E6).vertex_count() == 7);
  CHECK(dynkin_shape(DynkinFamily::affine_E7).vertex_count() == 8);
  CHECK(dynkin_shape(DynkinFamily::affine_E8).vertex_count() == 9);
  CHECK(dynkin_shape(DynkinFamily::enriched_6_cycle).edge_count() == 7);
  CHECK_THROWS_AS(dynkin_shape(DynkinFamily::D, 3), Error);
  CHECK_THROWS_AS(dynkin_shape(DynkinFamily::cycle, 5), Error);
  CHECK_THROWS_AS(dynkin_shape(DynkinFamily::A, 0), Error);
}

TEST_CASE("identify_dynkin recognises every generated shape") {
  const std::vector<DynkinType> types = {
      {DynkinFamily::A, 1},         {DynkinFamily::A, 7},         {DynkinFamily::D, 4},
      {DynkinFamily::D, 9},         {DynkinFamily::E6, 6},        {DynkinFamily::E7, 7},
      {DynkinFamily::E8, 8},        {DynkinFamily::affine_D, 4},  {DynkinFamily::affine_D, 5},
      {DynkinFamily::affine_D, 8},  {DynkinFamily::affine_E6, 7}, {DynkinFamily::affine_E7, 8},
      {DynkinFamily::affine_E8, 9}, {DynkinFamily::cycle, 6},     {DynkinFamily::enriched_6_cycle, 7},
  };
  for (const auto& t : types) {
    const auto found = identify_dynkin(dynkin_shape(t.family, t.n));
    REQUIRE(found);
    CHECK(*found == t);
  }
  // two branch points that are not both forks
  CHECK_FALSE(identify_dynkin(Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}, {6, 7}})));
}

TEST_CASE("affine diagrams: alternating dilatation and classical spectrum") {
  std::vector<MixedSignCoxeterGraph> affine;
  for (int n = 4; n <= 8; ++n) affine.push_back(dynkin_graph(DynkinFamily::affine_D, n));
  for (auto f : {DynkinFamily::affine_E6, DynkinFamily::affine_E7, DynkinFamily::affine_E8})
    affine.push_back(dynkin_graph(f));
  for (const auto& g : affine) {
    CHECK(affine_alternating_dilatation(g) == kSilver);
    const IntegerMatrix h = homological_action(g, bipartite_order(g));
    CHECK(std::abs(spectral_radius(h).value - kSilver) < 1e-9);
    const UnitCircleReport classical = classical_unit_circle_check(g.graph());
    CHECK(classical.minus_one_is_eigenvalue);
    CHECK(classical.max_deviation < 1e-9);
  }
  try {
    affine_alternating_dilatation(dynkin_graph(DynkinFamily::E8));
    FAIL("expected NotAffine");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_affine);
  }
}

TEST_CASE("4-cycle: bipartite order gives 3+2sqrt2") {
  const auto c4 = dynkin_graph(DynkinFamily::cycle, 4);
  const CoxeterSpectrum bip = coxeter_spectrum(c4, bipartite_order(c4));
  CHECK(bip.homological_nonnegative);
  CHECK(bip.homological_char_poly == IntPolynomial{1, -8, 14, -8, 1});
  CHECK(std::abs(bip.spectral_radius - kSilver) < 1e-12);
  // the cyclic order with B(v_i, v_j) = a_ij is not nonnegative and has a
  // smaller radius; see the README note on the 4-cycle example
  const CoxeterSpectrum cyc = coxeter_spectrum(c4, ReflectionOrder::identity(4));
  CHECK_FALSE(cyc.homological_nonnegative);
  CHECK(cyc.homological_char_poly == IntPolynomial{1, -7, 16, -7, 1});
  // u = t + 1/t gives u^2 - 7u + 14: the dominant eigenvalues are a complex pair
  CHECK_FALSE(cyc.certified);
  CHECK(std::abs(cyc.spectral_radius - 3.5464) < 1e-3);
}
