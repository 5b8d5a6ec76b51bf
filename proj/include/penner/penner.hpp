#pragma once

// Penner's construction: positive twists along α, negative twists along β,
// and the nonnegative matrix M_φ whose Perron-Frobenius eigenvalue is the
// dilatation.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "penner/graph.hpp"
#include "penner/spectral.hpp"

namespace penner {

/// Two multicurves α_1..α_n and β_1..β_m with intersection numbers X(i, j).
class IntersectionPattern {
 public:
  /// Throws `invalid_parameter` for empty or negative X.
  explicit IntersectionPattern(Matrix<std::int64_t> x);

  int alpha_count() const { return static_cast<int>(x_.rows()); }
  int beta_count() const { return static_cast<int>(x_.cols()); }
  int size() const { return alpha_count() + beta_count(); }
  const Matrix<std::int64_t>& x() const { return x_; }
  std::int64_t x(int i, int j) const { return x_(i, j); }

  /// Vertices α_0..α_{n-1} then β_0..β_{m-1}; an edge wherever X > 0.
  Graph intersection_graph() const;
  /// The intersection graph is connected (necessary for filling).
  bool is_filling_candidate() const { return intersection_graph().is_connected(); }

  friend bool operator==(const IntersectionPattern& a, const IntersectionPattern& b) { return a.x_ == b.x_; }

 private:
  Matrix<std::int64_t> x_;
};

enum class Side { alpha, beta };

/// One Dehn twist. α-twists are positive, β-twists negative.
struct Letter {
  Side side = Side::alpha;
  int index = 0;
  int sign = 1;

  static Letter alpha(int i) { return {Side::alpha, i, 1}; }
  static Letter beta(int j) { return {Side::beta, j, -1}; }

  /// "a1+" / "b2-", 1-based.
  std::string to_string() const;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Twists in the order they are applied.
using TwistWord = std::vector<Letter>;

std::string to_string(const TwistWord& w);

/// [[0, X], [Xᵀ, 0]] in the basis α_1..α_n, β_1..β_m.
IntegerMatrix geometric_intersection_matrix(const IntersectionPattern& p);

/// I + R, R the row of the intersection matrix belonging to the curve.
/// Throws `index_out_of_range`.
IntegerMatrix twist_matrix(const IntersectionPattern& p, Side side, int index);

struct WordValidation {
  bool valid = false;
  std::vector<int> alpha_counts;
  std::vector<int> beta_counts;
  /// Human-readable reasons; they start with "untwisted component",
  /// "sign discipline" or "index out of range".
  std::vector<std::string> problems;
};

WordValidation validate_word(const IntersectionPattern& p, const TwistWord& w);

namespace detail {

// M ← T·M for the twist T = I + e_r·g_r: only row r changes.
template <typename Scalar>
void apply_twist(Matrix<Scalar>& m, const Matrix<std::int64_t>& g, int r) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::int64_t c = g(r, j);
    if (c != 0) m.row(r) += Scalar(c) * m.row(j);
  }
}

int row_of(const IntersectionPattern& p, const Letter& l);

}  // namespace detail

/// M_φ = T_{w_k}···T_{w_1}: the first letter is the rightmost factor.
/// `Scalar` must be wide enough; `penner_product` picks one for you.
template <typename Scalar>
Matrix<Scalar> penner_product_as(const IntersectionPattern& p, const TwistWord& w) {
  const int n = p.size();
  Matrix<std::int64_t> g = Matrix<std::int64_t>::Zero(n, n);
  g.topRightCorner(p.alpha_count(), p.beta_count()) = p.x();
  g.bottomLeftCorner(p.beta_count(), p.alpha_count()) = p.x().transpose();
  Matrix<Scalar> m = Matrix<Scalar>::Identity(n, n);
  for (const Letter& l : w) detail::apply_twist(m, g, detail::row_of(p, l));
  return m;
}

/// Throws `invalid_word` when validate_word fails.
IntegerMatrix penner_product(const IntersectionPattern& p, const TwistWord& w);

/// Spectral radius of M_φ. Throws `invalid_word`.
SpectralReport dilatation_report(const IntersectionPattern& p, const TwistWord& w, double tol = kDefaultTolerance);
inline RootApproximation dilatation(const IntersectionPattern& p, const TwistWord& w, double tol = kDefaultTolerance) {
  return dilatation_report(p, w, tol).radius;
}

struct DoubleIntersectionCertificate {
  int alpha = 0;
  int beta = 0;
  std::int64_t x = 0;
  /// t² - (2 + x²)t + 1, the char poly of the two-curve product M(x).
  IntPolynomial poly;
  RootApproximation bound;
};

/// Witness for a pair of curves meeting at least twice (the largest X entry,
/// first in row-major order on ties) and the dilatation lower bound it gives.
std::optional<DoubleIntersectionCertificate> double_intersection_certificate(const IntersectionPattern& p,
                                                                             double tol = kDefaultTolerance);

struct WordMinimum {
  TwistWord word;
  RootApproximation value;
  long long words_evaluated = 0;
  /// Distinct characteristic polynomials whose spectral radius was certified.
  /// Other words were either ruled out by a floating lower bound with a
  /// safety margin or shared an already certified polynomial.
  long long words_certified = 0;
  /// Number of longer words checked against the minimum (0 when not requested).
  long long extra_words_checked = 0;
};

inline constexpr int kDefaultWordSearchLimit = 12;

/// Minimum dilatation over words twisting every curve exactly once, up to
/// cyclic rotation. Ties go to the lexicographically least word. With
/// `max_extra_twists > 0` it also checks that inserting that many additional
/// twists into the minimiser never lowers the dilatation. Throws `too_large`
/// when n + m exceeds `limit`.
WordMinimum minimize_over_words(const IntersectionPattern& p, int max_extra_twists = 0,
                                double tol = kDefaultTolerance, int limit = kDefaultWordSearchLimit);

/// Pattern of a bipartite graph: α = the class of vertex 0, β = the rest.
/// `alpha_vertices[i]` / `beta_vertices[j]` record the graph vertex of each curve.
struct GraphPattern {
  IntersectionPattern pattern;
  std::vector<int> alpha_vertices;
  std::vector<int> beta_vertices;
};

/// Throws `not_bipartite`.
GraphPattern pattern_from_graph(const Graph& g);

/// All β twists, then all α twists, ascending inside each part. This is the
/// word of the bipartite reflection order.
TwistWord bipartite_word(const IntersectionPattern& p);

/// Every curve once, α_1..α_n then β_1..β_m.
TwistWord canonical_word(const IntersectionPattern& p);

}  // namespace penner
