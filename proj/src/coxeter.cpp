#include "penner/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "penner/error.hpp"

namespace penner {

MixedSignCoxeterGraph::MixedSignCoxeterGraph(Graph graph, std::vector<int> signs)
    : graph_(std::move(graph)), signs_(std::move(signs)) {
  if (graph_.vertex_count() < 1) fail(ErrorCode::invalid_parameter, "a Coxeter graph needs at least one vertex");
  if (static_cast<int>(signs_.size()) != graph_.vertex_count())
    fail(ErrorCode::invalid_parameter, "expected one sign per vertex");
  for (int s : signs_)
    if (s != 1 && s != -1) fail(ErrorCode::invalid_parameter, "signs must be +1 or -1");
}

MixedSignCoxeterGraph MixedSignCoxeterGraph::classical(Graph graph) {
  std::vector<int> signs(static_cast<std::size_t>(graph.vertex_count()), 1);
  return {std::move(graph), std::move(signs)};
}

MixedSignCoxeterGraph MixedSignCoxeterGraph::alternating(Graph graph) {
  const auto colours = graph.bipartition();
  if (!colours) fail(ErrorCode::not_bipartite, "alternating signs need a bipartite graph");
  std::vector<int> signs;
  for (int c : *colours) signs.push_back(c == 0 ? 1 : -1);
  return {std::move(graph), std::move(signs)};
}

MixedSignCoxeterGraph MixedSignCoxeterGraph::with_mode(Graph graph, SignMode mode) {
  return mode == SignMode::alternating ? alternating(std::move(graph)) : classical(std::move(graph));
}

MixedSignCoxeterGraph MixedSignCoxeterGraph::flipped() const {
  std::vector<int> signs = signs_;
  for (int& s : signs) s = -s;
  return {graph_, std::move(signs)};
}

ReflectionOrder::ReflectionOrder(std::vector<int> order, int n) : order_(std::move(order)) {
  if (static_cast<int>(order_.size()) != n)
    fail(ErrorCode::invalid_parameter, "reflection order must list all " + std::to_string(n) + " vertices");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order_) {
    if (v < 0 || v >= n) fail(ErrorCode::invalid_parameter, "reflection order: vertex out of range");
    if (seen[static_cast<std::size_t>(v)]++) fail(ErrorCode::invalid_parameter, "reflection order repeats a vertex");
  }
}

ReflectionOrder ReflectionOrder::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return {std::move(order), n};
}

IntegerMatrix bilinear_form(const MixedSignCoxeterGraph& g) {
  const int n = g.vertex_count();
  IntegerMatrix b = IntegerMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = -2 * g.sign(i);
    for (int j : g.graph().neighbors(i)) b(i, j) = 1;
  }
  return b;
}

// -2·B(v_i, v_j)/B(v_i, v_i) = sign(i)·a_ij, so only row i differs from I.
IntegerMatrix reflection(const MixedSignCoxeterGraph& g, int i) {
  const int n = g.vertex_count();
  if (i < 0 || i >= n) fail(ErrorCode::index_out_of_range, "reflection: vertex out of range");
  IntegerMatrix s = IntegerMatrix::Identity(n, n);
  s(i, i) = -1;
  for (int j : g.graph().neighbors(i)) s(i, j) = g.sign(i);
  return s;
}

IntegerMatrix coxeter_transformation(const MixedSignCoxeterGraph& g, const ReflectionOrder& order) {
  const int n = g.vertex_count();
  if (order.size() != n) fail(ErrorCode::invalid_parameter, "reflection order has the wrong length");
  IntegerMatrix c = IntegerMatrix::Identity(n, n);
  // left-multiply by s_k: only row k changes
  for (int k : order.indices()) {
    Vector<Integer> row = -c.row(k).transpose();
    for (int j : g.graph().neighbors(k)) row += g.sign(k) * c.row(j).transpose();
    c.row(k) = row.transpose();
  }
  return c;
}

ReflectionOrder bipartite_order(const MixedSignCoxeterGraph& g) {
  const auto colours = g.graph().bipartition();
  if (!colours) fail(ErrorCode::not_bipartite, "bipartite order requested on a non-bipartite graph");
  const int n = g.vertex_count();
  // the class containing vertex 0 goes last unless its sign is negative
  const int last_colour = g.sign(0) == 1 ? 0 : 1;
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass)
    for (int v = 0; v < n; ++v)
      if (((*colours)[static_cast<std::size_t>(v)] == last_colour) == (pass == 1)) order.push_back(v);
  return {std::move(order), n};
}

IntegerMatrix homological_action(const MixedSignCoxeterGraph& g, const ReflectionOrder& order) {
  return -coxeter_transformation(g, order);
}

CoxeterSpectrum coxeter_spectrum(const MixedSignCoxeterGraph& g, const ReflectionOrder& order, double tol) {
  CoxeterSpectrum out;
  const IntegerMatrix c = coxeter_transformation(g, order);
  const IntegerMatrix h = -c;
  out.coxeter_char_poly = char_poly(c);
  out.homological_nonnegative = is_nonnegative(h);
  if (out.homological_nonnegative) {
    const SpectralReport report = spectral_report(h, tol);
    out.homological_char_poly = report.char_poly;
    out.spectral_radius = report.radius.value;
    out.certified = report.radius;
    return out;
  }
  out.homological_char_poly = char_poly(h);
  for (const auto& z : complex_roots(squarefree_part(out.homological_char_poly)))
    out.spectral_radius = std::max(out.spectral_radius, std::abs(z));
  try {
    const RootApproximation r = largest_real_root(out.homological_char_poly, tol, out.spectral_radius);
    if (std::abs(r.value - out.spectral_radius) <= 1e-8 * std::max(1.0, out.spectral_radius)) {
      out.spectral_radius = r.value;
      out.certified = r;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::no_real_root) throw;
  }
  return out;
}

double classical_to_alternating(double mu_real_part) {
  if (!(mu_real_part >= -1.0 && mu_real_part <= 1.0))
    fail(ErrorCode::invalid_parameter, "Re(mu) must lie in [-1, 1]");
  return solve_reciprocal_sum(4.0 - 2.0 * mu_real_part);
}

IntPolynomial alexander_torus_2_odd(int g) {
  if (g < 1) fail(ErrorCode::invalid_parameter, "alexander_torus_2_odd needs g >= 1");
  auto minus_one = [](int k) { return IntPolynomial::monomial(1, k) - IntPolynomial{1}; };
  return exact_quotient(minus_one(4 * g + 2) * minus_one(1), minus_one(2 * g + 1) * minus_one(2));
}

AlexanderRoute alexander_route(int g) {
  const IntPolynomial delta = alexander_torus_2_odd(g);
  const int order = 4 * g + 2;
  AlexanderRoute out;
  out.min_real_part = 2.0;
  for (int k = 0; k < order; ++k) {
    const std::complex<double> t = std::polar(1.0, 2.0 * std::numbers::pi * k / order);
    if (std::abs(delta.evaluate(t)) < 1e-6) {
      ++out.roots_found;
      out.min_real_part = std::min(out.min_real_part, t.real());
    }
  }
  if (out.roots_found != delta.degree())
    fail(ErrorCode::internal_inconsistency, "Alexander polynomial roots are not all (4g+2)-th roots of unity");
  out.lambda = classical_to_alternating(out.min_real_part);
  return out;
}

double lambda_closed_form(int g) {
  if (g < 1) fail(ErrorCode::invalid_parameter, "lambda_closed_form needs g >= 1");
  const double c = std::cos((2.0 * g - 1.0) / (2.0 * g + 1.0) * std::numbers::pi);
  return 2.0 - c + std::sqrt(3.0 - 4.0 * c + c * c);
}

bool DynkinType::is_affine() const {
  return family == DynkinFamily::affine_D || family == DynkinFamily::affine_E6 ||
         family == DynkinFamily::affine_E7 || family == DynkinFamily::affine_E8;
}

std::string DynkinType::name() const {
  switch (family) {
    case DynkinFamily::A: return "A" + std::to_string(n);
    case DynkinFamily::D: return "D" + std::to_string(n);
    case DynkinFamily::E6: return "E6";
    case DynkinFamily::E7: return "E7";
    case DynkinFamily::E8: return "E8";
    case DynkinFamily::affine_D: return "affine_D" + std::to_string(n);
    case DynkinFamily::affine_E6: return "affine_E6";
    case DynkinFamily::affine_E7: return "affine_E7";
    case DynkinFamily::affine_E8: return "affine_E8";
    case DynkinFamily::cycle: return std::to_string(n) + "-cycle";
    case DynkinFamily::enriched_6_cycle: return "enriched 6-cycle";
  }
  return "?";
}

namespace {

// Path on `length` vertices with extra leaves attached at the given path positions.
Graph path_with_leaves(int length, std::initializer_list<int> attach) {
  Graph g(length + static_cast<int>(attach.size()));
  for (int i = 0; i + 1 < length; ++i) g.add_edge(i, i + 1);
  int next = length;
  for (int at : attach) g.add_edge(at, next++);
  return g;
}

}  // namespace

Graph dynkin_shape(DynkinFamily family, int n) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::invalid_parameter, std::string("dynkin_graph: ") + what);
  };
  switch (family) {
    case DynkinFamily::A:
      need(n >= 1, "A_n needs n >= 1");
      return path_graph(n);
    case DynkinFamily::D:
      need(n >= 4, "D_n needs n >= 4");
      return path_with_leaves(n - 1, {1});
    case DynkinFamily::E6: return path_with_leaves(5, {2});
    case DynkinFamily::E7: return path_with_leaves(6, {2});
    case DynkinFamily::E8: return path_with_leaves(7, {2});
    case DynkinFamily::affine_D:
      need(n >= 4, "affine D_n needs n >= 4");
      return path_with_leaves(n - 1, {1, n - 3});
    case DynkinFamily::affine_E6: {
      Graph g = path_with_leaves(5, {2});
      Graph out(7);
      for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
      out.add_edge(5, 6);
      return out;
    }
    case DynkinFamily::affine_E7: return path_with_leaves(7, {3});
    case DynkinFamily::affine_E8: return path_with_leaves(8, {2});
    case DynkinFamily::cycle:
      need(n >= 4 && n % 2 == 0, "cycles need even length >= 4");
      return cycle_graph(n);
    case DynkinFamily::enriched_6_cycle: {
      Graph g(7);
      for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
      g.add_edge(0, 6);
      return g;
    }
  }
  fail(ErrorCode::invalid_parameter, "unknown Dynkin family");
}

MixedSignCoxeterGraph dynkin_graph(DynkinFamily family, int n, SignMode mode) {
  return MixedSignCoxeterGraph::with_mode(dynkin_shape(family, n), mode);
}

std::optional<DynkinType> identify_dynkin(const Graph& g) {
  const int n = g.vertex_count();
  if (!g.is_connected()) return std::nullopt;
  std::vector<int> branch;
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) branch.push_back(v);
    if (g.degree(v) == 1) ++leaves;
  }
  if (g.edge_count() == n) {
    if (branch.empty()) return DynkinType{DynkinFamily::cycle, n};
    // a 6-cycle with one pendant vertex
    if (n == 7 && branch.size() == 1 && g.degree(branch[0]) == 3 && leaves == 1) {
      // the leaf must hang off the cycle directly (a 4-cycle with a 3-path tail also has this degree profile)
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1 && g.neighbors(v)[0] == branch[0]) return DynkinType{DynkinFamily::enriched_6_cycle, 7};
    }
    return std::nullopt;
  }
  if (!g.is_tree()) return std::nullopt;
  if (branch.empty()) return DynkinType{DynkinFamily::A, n};

  // arm = number of vertices on the way from `start` (a neighbour of `from`) to a leaf
  auto arm = [&](int from, int start) {
    int len = 1;
    int prev = from, cur = start;
    while (g.degree(cur) == 2) {
      const int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    return g.degree(cur) == 1 ? len : -1;  // -1: ran into another branch vertex
  };

  if (branch.size() == 1) {
    const int b = branch[0];
    if (g.degree(b) == 4) {
      if (n == 5) return DynkinType{DynkinFamily::affine_D, 4};
      return std::nullopt;
    }
    if (g.degree(b) != 3) return std::nullopt;
    std::vector<int> arms;
    for (int w : g.neighbors(b)) arms.push_back(arm(b, w));
    std::sort(arms.begin(), arms.end());
    const int p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) return DynkinType{DynkinFamily::D, r + 3};
    if (p == 1 && q == 2 && r == 2) return DynkinType{DynkinFamily::E6, 6};
    if (p == 1 && q == 2 && r == 3) return DynkinType{DynkinFamily::E7, 7};
    if (p == 1 && q == 2 && r == 4) return DynkinType{DynkinFamily::E8, 8};
    if (p == 2 && q == 2 && r == 2) return DynkinType{DynkinFamily::affine_E6, 7};
    if (p == 1 && q == 3 && r == 3) return DynkinType{DynkinFamily::affine_E7, 8};
    if (p == 1 && q == 2 && r == 5) return DynkinType{DynkinFamily::affine_E8, 9};
    return std::nullopt;
  }
  if (branch.size() == 2) {
    for (int b : branch) {
      if (g.degree(b) != 3) return std::nullopt;
      int short_arms = 0;
      for (int w : g.neighbors(b))
        if (g.degree(w) == 1) ++short_arms;
      if (short_arms != 2) return std::nullopt;
    }
    return DynkinType{DynkinFamily::affine_D, n - 1};
  }
  return std::nullopt;
}

double affine_alternating_dilatation(const MixedSignCoxeterGraph& g, double tol) {
  const auto type = identify_dynkin(g.graph());
  if (!type || !type->is_affine()) fail(ErrorCode::not_affine, "graph is not an affine Dynkin diagram");
  const auto alt = MixedSignCoxeterGraph::alternating(g.graph());
  if (g.signs() != alt.signs() && g.signs() != alt.flipped().signs())
    fail(ErrorCode::invalid_parameter, "affine_alternating_dilatation needs alternating signs");
  const double expected = 3.0 + 2.0 * std::numbers::sqrt2;
  const CoxeterSpectrum spectrum = coxeter_spectrum(g, bipartite_order(g), tol);
  if (std::abs(spectrum.spectral_radius - expected) > 1e-9)
    fail(ErrorCode::internal_inconsistency,
         type->name() + ": homological action has spectral radius " + std::to_string(spectrum.spectral_radius));
  return expected;
}

UnitCircleReport classical_unit_circle_check(const Graph& g) {
  const auto cg = MixedSignCoxeterGraph::classical(g);
  const ReflectionOrder order = g.is_bipartite() ? bipartite_order(cg) : ReflectionOrder::identity(g.vertex_count());
  const IntPolynomial p = char_poly(coxeter_transformation(cg, order));
  UnitCircleReport out;
  out.minus_one_is_eigenvalue = p.evaluate(Integer(-1)) == 0;
  out.eigenvalues = complex_roots(squarefree_part(p));
  for (const auto& z : out.eigenvalues) out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(z) - 1.0));
  return out;
}

}  // namespace penner
