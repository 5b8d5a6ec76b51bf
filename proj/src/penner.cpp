#include "penner/penner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "penner/error.hpp"

namespace penner {

IntersectionPattern::IntersectionPattern(Matrix<std::int64_t> x) : x_(std::move(x)) {
  if (x_.rows() < 1 || x_.cols() < 1) fail(ErrorCode::invalid_parameter, "a pattern needs at least one α and one β curve");
  if (x_.minCoeff() < 0) fail(ErrorCode::invalid_parameter, "intersection numbers must be nonnegative");
}

Graph IntersectionPattern::intersection_graph() const {
  const int n = alpha_count();
  Graph g(size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < beta_count(); ++j)
      if (x_(i, j) > 0) g.add_edge(i, n + j);
  return g;
}

std::string Letter::to_string() const {
  return std::string(side == Side::alpha ? "a" : "b") + std::to_string(index + 1) + (sign > 0 ? "+" : "-");
}

std::string to_string(const TwistWord& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

IntegerMatrix geometric_intersection_matrix(const IntersectionPattern& p) {
  const int n = p.size();
  IntegerMatrix g = IntegerMatrix::Zero(n, n);
  for (int i = 0; i < p.alpha_count(); ++i)
    for (int j = 0; j < p.beta_count(); ++j) g(i, p.alpha_count() + j) = g(p.alpha_count() + j, i) = p.x(i, j);
  return g;
}

namespace detail {

int row_of(const IntersectionPattern& p, const Letter& l) {
  const int count = l.side == Side::alpha ? p.alpha_count() : p.beta_count();
  if (l.index < 0 || l.index >= count)
    fail(ErrorCode::index_out_of_range, "twist " + l.to_string() + " names a curve outside the pattern");
  return l.side == Side::alpha ? l.index : p.alpha_count() + l.index;
}

}  // namespace detail

IntegerMatrix twist_matrix(const IntersectionPattern& p, Side side, int index) {
  const int r = detail::row_of(p, {side, index, side == Side::alpha ? 1 : -1});
  IntegerMatrix t = IntegerMatrix::Identity(p.size(), p.size());
  t.row(r) += geometric_intersection_matrix(p).row(r);
  return t;
}

WordValidation validate_word(const IntersectionPattern& p, const TwistWord& w) {
  WordValidation out;
  out.alpha_counts.assign(static_cast<std::size_t>(p.alpha_count()), 0);
  out.beta_counts.assign(static_cast<std::size_t>(p.beta_count()), 0);
  for (const Letter& l : w) {
    auto& counts = l.side == Side::alpha ? out.alpha_counts : out.beta_counts;
    if (l.index < 0 || l.index >= static_cast<int>(counts.size())) {
      out.problems.push_back("index out of range: " + l.to_string());
      continue;
    }
    ++counts[static_cast<std::size_t>(l.index)];
    const int required = l.side == Side::alpha ? 1 : -1;
    if (l.sign != required)
      out.problems.push_back("sign discipline: " + l.to_string() + " (α twists are positive, β twists negative)");
  }
  for (std::size_t i = 0; i < out.alpha_counts.size(); ++i)
    if (out.alpha_counts[i] == 0) out.problems.push_back("untwisted component: a" + std::to_string(i + 1));
  for (std::size_t j = 0; j < out.beta_counts.size(); ++j)
    if (out.beta_counts[j] == 0) out.problems.push_back("untwisted component: b" + std::to_string(j + 1));
  out.valid = out.problems.empty();
  return out;
}

namespace {

void require_valid(const IntersectionPattern& p, const TwistWord& w) {
  const WordValidation v = validate_word(p, w);
  if (v.valid) return;
  std::string what = "invalid twist word";
  for (const auto& problem : v.problems) what += "; " + problem;
  fail(ErrorCode::invalid_word, what);
}

// Each twist multiplies the largest entry by at most 1 + (max row sum).
bool fits_int64(const IntersectionPattern& p, std::size_t length) {
  std::int64_t row_sum = 0;
  for (int i = 0; i < p.alpha_count(); ++i) row_sum = std::max(row_sum, p.x().row(i).sum());
  for (int j = 0; j < p.beta_count(); ++j) row_sum = std::max(row_sum, p.x().col(j).sum());
  return static_cast<double>(length) * std::log2(1.0 + static_cast<double>(row_sum)) < 61.0;
}

IntegerMatrix unchecked_product(const IntersectionPattern& p, const TwistWord& w) {
  if (fits_int64(p, w.size())) return exact_cast<Integer>(penner_product_as<std::int64_t>(p, w));
  return penner_product_as<Integer>(p, w);
}

// Strictly smaller only when the isolating intervals separate.
bool certainly_less(const RootApproximation& a, const RootApproximation& b) { return a.upper < b.lower; }

// Collatz-Wielandt: if M x >= r x for some nonnegative x != 0 then ρ(M) >= r.
// Power iteration only sharpens x; stops once the bound passes `target`.
double perron_lower_bound(const Eigen::MatrixXd& m, double target) {
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m.rows());
  double best = 0.0;
  for (int step = 0; step < 40; ++step) {
    const Eigen::VectorXd y = m * x;
    double r = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x(i) > 0) r = std::min(r, y(i) / x(i));
    best = std::max(best, r);
    if (best > target) break;
    const double norm = y.maxCoeff();
    if (!(norm > 0)) break;
    x = y / norm;
  }
  return best;
}

}  // namespace

IntegerMatrix penner_product(const IntersectionPattern& p, const TwistWord& w) {
  require_valid(p, w);
  return unchecked_product(p, w);
}

SpectralReport dilatation_report(const IntersectionPattern& p, const TwistWord& w, double tol) {
  return spectral_report(penner_product(p, w), tol);
}

std::optional<DoubleIntersectionCertificate> double_intersection_certificate(const IntersectionPattern& p,
                                                                             double tol) {
  Eigen::Index i = 0, j = 0;
  const std::int64_t x = p.x().maxCoeff(&i, &j);
  // maxCoeff breaks ties in column-major order; redo it row-major
  for (Eigen::Index r = 0; r < p.x().rows(); ++r)
    for (Eigen::Index c = 0; c < p.x().cols(); ++c)
      if (p.x(static_cast<int>(r), static_cast<int>(c)) == x) {
        i = r;
        j = c;
        r = p.x().rows();
        break;
      }
  if (x < 2) return std::nullopt;
  DoubleIntersectionCertificate cert;
  cert.alpha = static_cast<int>(i);
  cert.beta = static_cast<int>(j);
  cert.x = x;
  cert.poly = IntPolynomial(std::vector<Integer>{Integer(1), -(Integer(2) + Integer(x) * x), Integer(1)});
  cert.bound = largest_real_root(cert.poly, tol);
  return cert;
}

WordMinimum minimize_over_words(const IntersectionPattern& p, int max_extra_twists, double tol, int limit) {
  if (p.size() > limit)
    fail(ErrorCode::too_large, "word search is limited to n + m <= " + std::to_string(limit) + " curves");
  if (max_extra_twists < 0) fail(ErrorCode::invalid_parameter, "max_extra_twists must be nonnegative");
  TwistWord letters = canonical_word(p);
  WordMinimum best;
  bool have = false;
  // letters[0] stays first: one representative per rotation class, visited in
  // lexicographic order, so the first minimiser found is the least word
  const bool small = fits_int64(p, letters.size());
  double cutoff = std::numeric_limits<double>::infinity();
  // many words share a characteristic polynomial; certify each one once
  std::map<std::vector<Integer>, RootApproximation> certified;
  do {
    ++best.words_evaluated;
    IntegerMatrix m;
    IntPolynomial poly;
    if (small) {
      const Matrix<std::int64_t> m64 = penner_product_as<std::int64_t>(p, letters);
      // a word that is certainly above the current best cannot replace it
      if (have && perron_lower_bound(m64.cast<double>(), cutoff * (1.0 + 2e-9)) * (1.0 - 1e-9) > cutoff) continue;
      poly = char_poly(m64);
    } else {
      m = penner_product_as<Integer>(p, letters);
      poly = char_poly(m);
    }
    auto it = certified.find(poly.coefficients());
    if (it == certified.end()) {
      if (small) m = exact_cast<Integer>(penner_product_as<std::int64_t>(p, letters));
      it = certified.emplace(poly.coefficients(), spectral_radius(m, tol)).first;
      ++best.words_certified;
    }
    const RootApproximation& value = it->second;
    if (!have || certainly_less(value, best.value)) {
      best.word = letters;
      best.value = value;
      cutoff = to_double(value.upper);
      have = true;
    }
  } while (std::next_permutation(letters.begin() + 1, letters.end()));

  if (max_extra_twists > 0) {
    const TwistWord alphabet = canonical_word(p);
    std::function<void(const TwistWord&, int)> extend = [&](const TwistWord& w, int remaining) {
      if (remaining == 0) return;
      for (std::size_t pos = 0; pos <= w.size(); ++pos)
        for (const Letter& l : alphabet) {
          TwistWord longer = w;
          longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(pos), l);
          const RootApproximation value = spectral_radius(unchecked_product(p, longer), tol);
          ++best.extra_words_checked;
          if (certainly_less(value, best.value))
            fail(ErrorCode::internal_inconsistency,
                 "extra twist lowered the dilatation: " + to_string(longer));
          extend(longer, remaining - 1);
        }
    };
    extend(best.word, max_extra_twists);
  }
  return best;
}

GraphPattern pattern_from_graph(const Graph& g) {
  const auto colours = g.bipartition();
  if (!colours) fail(ErrorCode::not_bipartite, "intersection graphs are bipartite");
  std::vector<int> alpha, beta, slot(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto& part = (*colours)[static_cast<std::size_t>(v)] == 0 ? alpha : beta;
    slot[static_cast<std::size_t>(v)] = static_cast<int>(part.size());
    part.push_back(v);
  }
  if (alpha.empty() || beta.empty()) fail(ErrorCode::invalid_parameter, "a pattern needs curves on both sides");
  Matrix<std::int64_t> x = Matrix<std::int64_t>::Zero(static_cast<Eigen::Index>(alpha.size()),
                                                      static_cast<Eigen::Index>(beta.size()));
  for (const auto& [u, v] : g.edges()) {
    const int a = (*colours)[static_cast<std::size_t>(u)] == 0 ? u : v;
    const int b = a == u ? v : u;
    x(slot[static_cast<std::size_t>(a)], slot[static_cast<std::size_t>(b)]) = 1;
  }
  return {IntersectionPattern(std::move(x)), std::move(alpha), std::move(beta)};
}

TwistWord bipartite_word(const IntersectionPattern& p) {
  TwistWord w;
  for (int j = 0; j < p.beta_count(); ++j) w.push_back(Letter::beta(j));
  for (int i = 0; i < p.alpha_count(); ++i) w.push_back(Letter::alpha(i));
  return w;
}

TwistWord canonical_word(const IntersectionPattern& p) {
  TwistWord w;
  for (int i = 0; i < p.alpha_count(); ++i) w.push_back(Letter::alpha(i));
  for (int j = 0; j < p.beta_count(); ++j) w.push_back(Letter::beta(j));
  return w;
}

}  // namespace penner
