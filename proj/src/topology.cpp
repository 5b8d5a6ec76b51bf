#include "penner/topology.hpp"

#include <algorithm>
#include <numeric>

#include "penner/error.hpp"

namespace penner {

namespace {

std::vector<int> partners_of_alpha(const IntersectionPattern& p, int i) {
  std::vector<int> out;
  for (int j = 0; j < p.beta_count(); ++j)
    if (p.x(i, j) > 0) out.push_back(j);
  return out;
}

std::vector<int> partners_of_beta(const IntersectionPattern& p, int j) {
  std::vector<int> out;
  for (int i = 0; i < p.alpha_count(); ++i)
    if (p.x(i, j) > 0) out.push_back(i);
  return out;
}

void check_order(std::vector<int> order, const std::vector<int>& partners, const std::string& curve) {
  std::sort(order.begin(), order.end());
  if (order != partners)
    fail(ErrorCode::invalid_map, "cyclic order of " + curve + " must list each of its intersection points once");
}

// Half-edge ends at an intersection point.
enum End { alpha_out = 0, beta_out = 1, alpha_in = 2, beta_in = 3 };

}  // namespace

FramedPattern::FramedPattern(IntersectionPattern pattern, std::vector<std::vector<int>> alpha_orders,
                             std::vector<std::vector<int>> beta_orders, Matrix<int> orientation)
    : pattern_(std::move(pattern)),
      alpha_orders_(std::move(alpha_orders)),
      beta_orders_(std::move(beta_orders)),
      orientation_(std::move(orientation)) {
  const int n = pattern_.alpha_count();
  const int m = pattern_.beta_count();
  if (pattern_.x().maxCoeff() > 1)
    fail(ErrorCode::invalid_parameter, "framed patterns need intersection numbers 0 or 1");
  if (static_cast<int>(alpha_orders_.size()) != n || static_cast<int>(beta_orders_.size()) != m)
    fail(ErrorCode::invalid_map, "expected one cyclic order per curve");
  if (orientation_.rows() != n || orientation_.cols() != m)
    fail(ErrorCode::invalid_map, "crossing orientations must form an n x m table");
  for (int i = 0; i < n; ++i) {
    const auto partners = partners_of_alpha(pattern_, i);
    if (partners.empty()) fail(ErrorCode::invalid_parameter, "a" + std::to_string(i + 1) + " meets no β curve");
    check_order(alpha_orders_[static_cast<std::size_t>(i)], partners, "a" + std::to_string(i + 1));
    for (int j : partners)
      if (orientation_(i, j) != 1 && orientation_(i, j) != -1)
        fail(ErrorCode::invalid_map, "crossing orientations must be +1 or -1");
  }
  for (int j = 0; j < m; ++j) {
    const auto partners = partners_of_beta(pattern_, j);
    if (partners.empty()) fail(ErrorCode::invalid_parameter, "b" + std::to_string(j + 1) + " meets no α curve");
    check_order(beta_orders_[static_cast<std::size_t>(j)], partners, "b" + std::to_string(j + 1));
  }
}

FramedPattern FramedPattern::standard(const IntersectionPattern& pattern) {
  std::vector<std::vector<int>> alpha, beta;
  for (int i = 0; i < pattern.alpha_count(); ++i) alpha.push_back(partners_of_alpha(pattern, i));
  for (int j = 0; j < pattern.beta_count(); ++j) beta.push_back(partners_of_beta(pattern, j));
  return {pattern, std::move(alpha), std::move(beta),
          Matrix<int>::Ones(pattern.alpha_count(), pattern.beta_count())};
}

CellCounts trace_faces(const FramedPattern& f) {
  const IntersectionPattern& p = f.pattern();
  Matrix<int> point = Matrix<int>::Constant(p.alpha_count(), p.beta_count(), -1);
  int points = 0;
  for (int i = 0; i < p.alpha_count(); ++i)
    for (int j = 0; j < p.beta_count(); ++j)
      if (p.x(i, j) > 0) point(i, j) = points++;

  const int half_edges = 4 * points;
  std::vector<int> theta(static_cast<std::size_t>(half_edges), -1);
  auto pair = [&](int a, int b) {
    if (theta[static_cast<std::size_t>(a)] != -1 || theta[static_cast<std::size_t>(b)] != -1)
      fail(ErrorCode::invalid_map, "a half-edge is paired twice");
    theta[static_cast<std::size_t>(a)] = b;
    theta[static_cast<std::size_t>(b)] = a;
  };
  // consecutive points along a curve are joined by an arc
  for (int i = 0; i < p.alpha_count(); ++i) {
    const auto& order = f.alpha_orders()[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int from = point(i, order[k]);
      const int to = point(i, order[(k + 1) % order.size()]);
      pair(4 * from + alpha_out, 4 * to + alpha_in);
    }
  }
  for (int j = 0; j < p.beta_count(); ++j) {
    const auto& order = f.beta_orders()[static_cast<std::size_t>(j)];
    for (std::size_t k = 0; k < order.size(); ++k) {
      const int from = point(order[k], j);
      const int to = point(order[(k + 1) % order.size()], j);
      pair(4 * from + beta_out, 4 * to + beta_in);
    }
  }
  if (std::find(theta.begin(), theta.end(), -1) != theta.end())
    fail(ErrorCode::invalid_map, "unpaired half-edge");

  // rotation: α-out, β-out, α-in, β-in counterclockwise for a +1 crossing
  std::vector<int> sigma(static_cast<std::size_t>(half_edges));
  for (int i = 0; i < p.alpha_count(); ++i)
    for (int j = 0; j < p.beta_count(); ++j) {
      const int v = point(i, j);
      if (v < 0) continue;
      const int step = f.orientation()(i, j) == 1 ? 1 : 3;
      for (int k = 0; k < 4; ++k) sigma[static_cast<std::size_t>(4 * v + k)] = 4 * v + (k + step) % 4;
    }

  CellCounts out;
  out.zero_cells = points;
  out.one_cells = half_edges / 2;
  std::vector<char> seen(static_cast<std::size_t>(half_edges), 0);
  for (int h = 0; h < half_edges; ++h) {
    if (seen[static_cast<std::size_t>(h)]) continue;
    ++out.two_cells;
    for (int cur = h; !seen[static_cast<std::size_t>(cur)];
         cur = sigma[static_cast<std::size_t>(theta[static_cast<std::size_t>(cur)])])
      seen[static_cast<std::size_t>(cur)] = 1;
  }
  out.euler_characteristic = out.zero_cells - out.one_cells + out.two_cells;
  if (p.is_filling_candidate() && out.euler_characteristic % 2 == 0) out.genus = (2 - out.euler_characteristic) / 2;
  return out;
}

namespace {

// Cyclic orders of `items` with the first element fixed.
std::vector<std::vector<int>> cyclic_orders(std::vector<int> items) {
  std::vector<std::vector<int>> out;
  if (items.size() <= 1) return {items};
  do out.push_back(items);
  while (std::next_permutation(items.begin() + 1, items.end()));
  return out;
}

long long factorial(std::size_t k) {
  long long r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<long long>(i);
  return r;
}

}  // namespace

long long framing_count(const IntersectionPattern& p) {
  long long count = 1;
  int points = 0;
  for (int i = 0; i < p.alpha_count(); ++i) {
    const auto d = partners_of_alpha(p, i).size();
    points += static_cast<int>(d);
    count *= factorial(d == 0 ? 0 : d - 1);
  }
  for (int j = 0; j < p.beta_count(); ++j) {
    const auto d = partners_of_beta(p, j).size();
    count *= factorial(d == 0 ? 0 : d - 1);
  }
  return count << points;
}

void for_each_framing(const IntersectionPattern& p, const std::function<void(const FramedPattern&)>& visit) {
  const FramedPattern base = FramedPattern::standard(p);  // validates the pattern
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& order : base.alpha_orders()) choices.push_back(cyclic_orders(order));
  for (const auto& order : base.beta_orders()) choices.push_back(cyclic_orders(order));
  std::vector<std::pair<int, int>> points;
  for (int i = 0; i < p.alpha_count(); ++i)
    for (int j = 0; j < p.beta_count(); ++j)
      if (p.x(i, j) > 0) points.emplace_back(i, j);

  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    std::vector<std::vector<int>> alpha, beta;
    for (std::size_t c = 0; c < choices.size(); ++c)
      (static_cast<int>(c) < p.alpha_count() ? alpha : beta).push_back(choices[c][pick[c]]);
    for (long long bits = 0; bits < (1LL << points.size()); ++bits) {
      Matrix<int> orientation = Matrix<int>::Ones(p.alpha_count(), p.beta_count());
      for (std::size_t k = 0; k < points.size(); ++k)
        if ((bits >> k) & 1) orientation(points[k].first, points[k].second) = -1;
      visit(FramedPattern(p, alpha, beta, orientation));
    }
    // odometer over the cyclic orders
    std::size_t c = 0;
    while (c < choices.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
    if (c == choices.size()) break;
  }
}

std::map<int, long long> face_distribution(const IntersectionPattern& p) {
  std::map<int, long long> out;
  for_each_framing(p, [&](const FramedPattern& f) { ++out[trace_faces(f).two_cells]; });
  return out;
}

int tree_fill_genus(TreeFamily family, int n) {
  if (family == TreeFamily::A) {
    if (n < 2) fail(ErrorCode::invalid_parameter, "A_n fills a surface only for n >= 2");
    return n / 2;
  }
  if (n < 4) fail(ErrorCode::invalid_parameter, "D_n needs n >= 4");
  return (n - 1) / 2;
}

int face_parity(const Graph& g) {
  if (!g.is_connected()) fail(ErrorCode::invalid_parameter, "face parity needs a connected graph");
  return g.edge_count() % 2;
}

int genus_bound_from_parity(const Graph& g) {
  const int min_faces = face_parity(g) == 1 ? 1 : 2;
  return (2 - min_faces + g.edge_count()) / 2;
}

int cycle_fill_genus_bound(int cycle_length) {
  if (cycle_length < 4 || cycle_length % 2 != 0)
    fail(ErrorCode::invalid_parameter, "cycle patterns need even length >= 4");
  return genus_bound_from_parity(cycle_graph(cycle_length));
}

int tree_genus(const Graph& tree) {
  if (!tree.is_tree() || tree.vertex_count() < 2) fail(ErrorCode::invalid_parameter, "tree_genus needs a tree with an edge");
  const CellCounts counts = trace_faces(FramedPattern::standard(pattern_from_graph(tree).pattern));
  if (!counts.genus) fail(ErrorCode::internal_inconsistency, "tree pattern gave an invalid cell count");
  return *counts.genus;
}

}  // namespace penner
