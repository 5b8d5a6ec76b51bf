#include "penner/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/multiprecision/integer.hpp>

namespace penner {

namespace {

// Shifts on negative cpp_int values are not portable; scale by powers of two instead.
Integer shl(const Integer& x, unsigned k) { return x * (Integer(1) << k); }

/// num / 2^shift. Every finite double and every bisection midpoint is one.
struct Dyadic {
  Integer num = 0;
  unsigned shift = 0;

  static Dyadic from_double(double x) {
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant · 2^exp, 0.5 <= |mant| < 1
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Dyadic d;
    if (exp >= 0) {
      d.num = shl(Integer(scaled), static_cast<unsigned>(exp));
    } else {
      d.num = scaled;
      d.shift = static_cast<unsigned>(-exp);
    }
    d.normalize();
    return d;
  }

  static Dyadic from_integer(const Integer& v) { return Dyadic{v, 0}; }

  void normalize() {
    if (num == 0) {
      shift = 0;
      return;
    }
    while (shift > 0 && num % 2 == 0) {
      num /= 2;
      --shift;
    }
  }

  Rational to_rational() const { return Rational(num, Integer(1) << shift); }
};

Integer aligned(const Dyadic& d, unsigned shift) { return shl(d.num, shift - d.shift); }

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned s = std::max(a.shift, b.shift);
  Dyadic m{aligned(a, s) + aligned(b, s), s + 1};
  m.normalize();
  return m;
}

/// a + (b - a)·frac_num / 2^frac_shift, used to step off an exact root.
Dyadic interpolate(const Dyadic& a, const Dyadic& b, unsigned frac_num, unsigned frac_shift) {
  const unsigned s = std::max(a.shift, b.shift);
  const Integer an = aligned(a, s);
  const Integer bn = aligned(b, s);
  Dyadic r{shl(an, frac_shift) + (bn - an) * frac_num, s + frac_shift};
  r.normalize();
  return r;
}

int sign_at(const IntPolynomial& p, const Dyadic& x) { return p.sign_at_dyadic(x.num, x.shift); }

/// 2^(shift·deg) · p(y / 2^shift), an integer polynomial in y.
IntPolynomial homogenised(const IntPolynomial& p, unsigned shift) {
  const int d = p.degree();
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = shl(p.coeff(i), shift * static_cast<unsigned>(d - i));
  return IntPolynomial(std::move(c));
}

/// Descartes bound for roots of p in (b, +inf); zero proves there are none.
int descartes_above(const IntPolynomial& p, const Dyadic& b) {
  const IntPolynomial shifted = homogenised(p, b.shift).taylor_shift(b.num);
  if (shifted.coeff(0) == 0) return std::numeric_limits<int>::max();  // b is a root
  return shifted.sign_variations();
}

/// Descartes bound for roots of p in (a, b); one proves exactly one root.
int descartes_between(const IntPolynomial& p, const Dyadic& a, const Dyadic& b) {
  const unsigned s = std::max(a.shift, b.shift);
  const Integer an = aligned(a, s);
  const Integer width = aligned(b, s) - an;
  const IntPolynomial unit = homogenised(p, s).taylor_shift(an).scale_argument(width);
  // roots in (0, 1) of unit  <->  positive roots of (x+1)^d unit(1/(x+1))
  return unit.reversed().taylor_shift(1).sign_variations();
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& q) {
  std::vector<IntPolynomial> chain{q, q.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    const IntPolynomial& a = chain[chain.size() - 2];
    const IntPolynomial& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem multiplies by lc(b)^e; undo its sign so the chain stays a Sturm chain.
    const int e = a.degree() - b.degree() + 1;
    const bool flipped = b.leading() < 0 && (e % 2 == 1);
    Integer g = r.content();
    if (!flipped) g = -g;
    std::vector<Integer> v = r.coefficients();
    for (auto& c : v) c /= g;
    chain.emplace_back(std::move(v));
  }
  return chain;
}

template <typename SignFn>
int variations(const std::vector<IntPolynomial>& chain, SignFn sign) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<IntPolynomial>& chain, const Dyadic& x) {
  return variations(chain, [&](const IntPolynomial& p) { return sign_at(p, x); });
}

/// Every root of q has |z| < cauchy_bound(q).
Integer cauchy_bound(const IntPolynomial& q) {
  Integer biggest = 0;
  for (int i = 0; i < q.degree(); ++i) {
    Integer c = q.coeff(i);
    if (c < 0) c = -c;
    biggest = std::max(biggest, c);
  }
  Integer lc = q.leading();
  if (lc < 0) lc = -lc;
  return 2 + biggest / lc;
}

struct Bracket {
  Dyadic lo;
  Dyadic hi;
};

/// Tries to certify that the largest real root of q lies alone in a small
/// interval around a floating estimate.
std::optional<Bracket> bracket_near(const IntPolynomial& q, double estimate, double tol) {
  if (!std::isfinite(estimate)) return std::nullopt;
  const double scale = std::max(1.0, std::abs(estimate));
  // start at tol/4 so that a successful bracket already meets the tolerance
  for (double delta = std::max(tol / 4.0, 4.0 * scale * std::numeric_limits<double>::epsilon());
       delta < scale; delta *= 1e3) {
    const Dyadic lo = Dyadic::from_double(estimate - delta);
    const Dyadic hi = Dyadic::from_double(estimate + delta);
    if (sign_at(q, lo) == 0 || sign_at(q, hi) == 0) continue;
    if (descartes_above(q, hi) != 0) continue;
    if (descartes_between(q, lo, hi) == 1) return Bracket{lo, hi};
  }
  return std::nullopt;
}

/// Sturm bisection from the Cauchy bound down to an interval holding only the
/// largest real root.
Bracket sturm_isolate_largest(const IntPolynomial& q) {
  const auto chain = sturm_chain(q);
  const Integer bound = cauchy_bound(q);
  Dyadic lo = Dyadic::from_integer(-bound);
  Dyadic hi = Dyadic::from_integer(bound);
  const int v_hi = variations_at(chain, hi);
  if (variations_at(chain, lo) - v_hi == 0) fail(ErrorCode::no_real_root, "polynomial has no real root: " + q.to_string());
  while (variations_at(chain, lo) - v_hi > 1) {
    Dyadic mid = midpoint(lo, hi);
    for (unsigned k = 5; sign_at(q, mid) == 0; k = k * 2 + 1) mid = interpolate(lo, hi, k, 10 + k);
    if (variations_at(chain, mid) - v_hi >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

double round_up(const Rational& x) {
  double d = to_double(x);
  if (exact_rational(d) < x) d = std::nextafter(d, INFINITY);
  return d;
}

RootApproximation exact_root(const IntPolynomial& p, const Rational& r) {
  RootApproximation out;
  out.lower = r;
  out.upper = r;
  out.value = to_double(r);
  const Rational err = abs(exact_rational(out.value) - r);
  out.radius = err == 0 ? 0.0 : round_up(err);
  out.exact = true;
  out.certified_by = p;
  return out;
}

/// A rational root of the primitive q has a denominator dividing lc(q), so the
/// only candidate in a bracket of width < 1/lc is round(mid·lc)/lc.
std::optional<Rational> rational_root_in(const IntPolynomial& q, const Bracket& b) {
  Integer lc = q.leading();
  if (lc < 0) lc = -lc;
  const Rational lo = b.lo.to_rational();
  const Rational hi = b.hi.to_rational();
  if ((hi - lo) * lc >= 1) return std::nullopt;
  const Rational scaled = (lo + hi) / 2 * lc;
  Integer rounded = numerator(scaled) / denominator(scaled);
  for (Integer cand = rounded - 1; cand <= rounded + 1; ++cand) {
    const Rational r(cand, lc);
    if (r < lo || r > hi) continue;
    if (q.sign_at(r) == 0) return r;
  }
  return std::nullopt;
}

RootApproximation refine(const IntPolynomial& p, const IntPolynomial& q, Bracket b, double tol) {
  if (auto r = rational_root_in(q, b)) return exact_root(p, *r);
  int s_lo = sign_at(q, b.lo);
  for (;;) {
    const Rational width = b.hi.to_rational() - b.lo.to_rational();
    const Dyadic mid = midpoint(b.lo, b.hi);
    const Rational mid_q = mid.to_rational();
    const double value = to_double(mid_q);
    const Rational radius = width / 2 + abs(exact_rational(value) - mid_q);
    if (round_up(radius) <= tol || width < Rational(1, Integer(1) << 1100)) {
      if (auto r = rational_root_in(q, b)) return exact_root(p, *r);
      RootApproximation out;
      out.lower = b.lo.to_rational();
      out.upper = b.hi.to_rational();
      out.value = value;
      out.radius = round_up(radius);
      out.certified_by = p;
      return out;
    }
    const int s = sign_at(q, mid);
    if (s == 0) return exact_root(p, mid_q);
    if (s == s_lo)
      b.lo = mid;
    else
      b.hi = mid;
    s_lo = sign_at(q, b.lo);
  }
}

/// A few floating Newton steps; the hint only steers the exact bracket.
double newton_polish(const IntPolynomial& p, double x) {
  const IntPolynomial dp = p.derivative();
  for (int step = 0; step < 4; ++step) {
    const double slope = dp.evaluate(x);
    if (slope == 0.0) break;
    const double next = x - p.evaluate(x) / slope;
    if (!std::isfinite(next) || std::abs(next - x) > 1e-3 * std::max(1.0, std::abs(x))) break;
    x = next;
  }
  return x;
}

}  // namespace

Rational exact_rational(double x) { return Dyadic::from_double(x).to_rational(); }

std::string to_string(const Rational& x) { return x.str(); }

ScaledCharPoly char_poly_scaled(const RationalMatrix& m) {
  Integer scale = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      scale = boost::multiprecision::lcm(scale, Integer(denominator(m(i, j))));
  IntegerMatrix scaled(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      scaled(i, j) = Integer(numerator(m(i, j)) * (scale / denominator(m(i, j))));
  return {char_poly(scaled), scale};
}

RootApproximation largest_real_root(const IntPolynomial& p, double tol, std::optional<double> hint) {
  if (p.degree() < 1) fail(ErrorCode::invalid_parameter, "largest_real_root needs a nonconstant polynomial");
  if (!(tol > 0.0)) fail(ErrorCode::invalid_parameter, "tolerance must be positive");
  if (p.degree() == 1) return exact_root(p, Rational(-p.coeff(0), p.coeff(1)));

  // Descartes counts roots with multiplicity, so a bracket certified on p
  // itself isolates a simple root and the gcd with p' can be skipped.
  if (hint) {
    hint = newton_polish(p, *hint);
    if (auto bracket = bracket_near(p, *hint, tol)) return refine(p, p, *bracket, tol);
  }

  const IntPolynomial q = squarefree_part(p);
  if (q.degree() == 1) return exact_root(p, Rational(-q.coeff(0), q.coeff(1)));

  std::optional<Bracket> bracket;
  if (hint) bracket = bracket_near(q, *hint, tol);
  if (!bracket) {
    double best = -INFINITY;
    for (const auto& z : complex_roots(q))
      if (std::abs(z.imag()) <= 1e-6 * std::max(1.0, std::abs(z))) best = std::max(best, z.real());
    bracket = bracket_near(q, best, tol);
  }
  if (!bracket) bracket = sturm_isolate_largest(q);
  return refine(p, q, *bracket, tol);
}

int count_real_roots(const IntPolynomial& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  const IntPolynomial q = squarefree_part(p);
  const auto chain = sturm_chain(q);
  auto var = [&](const Rational& x) {
    return variations(chain, [&](const IntPolynomial& f) { return f.sign_at(x); });
  };
  int count = var(a) - var(b);
  if (q.sign_at(b) == 0) --count;  // Sturm counts (a, b]
  return count;
}

std::optional<double> power_iteration_estimate(const Eigen::MatrixXd& m, double tol) {
  const Eigen::Index n = m.rows();
  const int max_steps = 10 * static_cast<int>(n) * static_cast<int>(std::ceil(-std::log10(tol)));
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double previous = NAN;
  for (int step = 0; step < max_steps; ++step) {
    Eigen::VectorXd y = m * x;
    const double norm = y.lpNorm<Eigen::Infinity>();
    if (norm == 0.0) return 0.0;
    const double estimate = norm / x.lpNorm<Eigen::Infinity>();
    x = y / norm;
    if (std::abs(estimate - previous) <= tol * std::max(1.0, estimate)) return estimate;
    previous = estimate;
  }
  return std::nullopt;
}

SpectralReport spectral_report(const IntegerMatrix& m, double tol) {
  if (!is_square(m)) fail(ErrorCode::invalid_parameter, "spectral radius needs a nonempty square matrix");
  if (!is_nonnegative(m)) fail(ErrorCode::not_nonnegative, "spectral radius certification needs a nonnegative matrix");
  SpectralReport report;
  report.char_poly = char_poly(m);
  const Eigen::MatrixXd approx = exact_cast<double>(m);
  report.power_estimate = power_iteration_estimate(approx, tol);
  std::optional<double> hint = report.power_estimate;
  if (!hint) {
    const Eigen::VectorXcd eig = Eigen::EigenSolver<Eigen::MatrixXd>(approx, false).eigenvalues();
    hint = eig.cwiseAbs().maxCoeff();
  }
  report.radius = largest_real_root(report.char_poly, tol, hint);
  report.cross_check_agrees =
      report.power_estimate && std::abs(*report.power_estimate - report.radius.value) <= 10.0 * tol * std::max(1.0, report.radius.value);
  return report;
}

namespace {

using Complex = std::complex<long double>;

Complex polish(const IntPolynomial& p, Complex z) {
  const IntPolynomial dp = p.derivative();
  auto eval = [](const IntPolynomial& q, Complex x) {
    Complex acc = 0;
    for (int k = q.degree(); k >= 0; --k) acc = acc * x + static_cast<long double>(to_double(q.coeff(k)));
    return acc;
  };
  for (int step = 0; step < 6; ++step) {
    const Complex d = eval(dp, z);
    if (std::abs(d) == 0) break;
    z -= eval(p, z) / d;
  }
  return z;
}

// Monic product of (t - z) over the given roots, rounded to integers when
// every coefficient is close to one.
std::optional<IntPolynomial> rounded_product(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1)};
  for (const Complex& z : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= z * c[k];
    }
    c = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (const Complex& x : c) {
    const long double r = std::round(x.real());
    if (std::abs(r) > 1e15L || std::abs(x.real() - r) > 1e-4L * std::max(1.0L, std::abs(r)) ||
        std::abs(x.imag()) > 1e-4L * std::max(1.0L, std::abs(r)))
      return std::nullopt;
    coeffs.emplace_back(static_cast<long long>(r));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

std::optional<IntPolynomial> minimal_polynomial(const RootApproximation& root, int max_degree) {
  if (root.exact) {
    const Rational& r = root.lower;
    return IntPolynomial(std::vector<Integer>{-numerator(r), denominator(r)});
  }
  IntPolynomial q = squarefree_part(root.certified_by).primitive_part();
  auto holds_root = [&](const IntPolynomial& f) { return f.sign_at(root.lower) * f.sign_at(root.upper) < 0; };
  // cyclotomic factors are common in Coxeter polynomials and never hold a root > 1
  for (int k = 1; k <= 4 * q.degree() + 4 && q.degree() > max_degree; ++k) {
    const IntPolynomial phi = cyclotomic(k);
    if (phi.degree() > q.degree()) continue;
    const auto [quot, rem] = divide(q, phi);
    if (rem.is_zero()) q = quot.primitive_part();
  }
  if (q.degree() <= 1) return q;
  if (q.degree() > 24) return std::nullopt;

  // group real roots alone and complex roots with their conjugates
  std::vector<std::vector<Complex>> groups;
  int own = -1;
  double closest = std::numeric_limits<double>::infinity();
  for (const auto& z0 : complex_roots(q)) {
    const Complex z = polish(q, Complex(z0.real(), z0.imag()));
    if (std::abs(z.imag()) <= 1e-9L * std::max(1.0L, std::abs(z))) {
      const double gap = std::abs(static_cast<double>(z.real()) - root.value);
      if (gap < closest) {
        closest = gap;
        own = static_cast<int>(groups.size());
      }
      groups.push_back({Complex(z.real(), 0)});
    } else if (z.imag() > 0) {
      groups.push_back({z, std::conj(z)});
    }
  }
  if (own < 0) return std::nullopt;
  std::swap(groups[0], groups[static_cast<std::size_t>(own)]);

  // smallest degree first: the first exact factor found is irreducible
  const int limit = std::min(max_degree, q.degree());
  for (int degree = 1; degree <= limit; ++degree) {
    std::optional<IntPolynomial> found;
    std::vector<Complex> chosen = groups[0];
    std::function<void(std::size_t, int)> pick = [&](std::size_t from, int remaining) {
      if (found) return;
      if (remaining == 0) {
        auto f = rounded_product(chosen);
        if (f && divide(q, *f).second.is_zero() && holds_root(*f)) found = f->primitive_part();
        return;
      }
      for (std::size_t g = from; g < groups.size(); ++g) {
        const int size = static_cast<int>(groups[g].size());
        if (size > remaining) continue;
        chosen.insert(chosen.end(), groups[g].begin(), groups[g].end());
        pick(g + 1, remaining - size);
        chosen.resize(chosen.size() - static_cast<std::size_t>(size));
      }
    };
    pick(1, degree - 1);
    if (found) return found;
  }
  if (q.degree() <= max_degree && holds_root(q)) return q;
  return std::nullopt;
}

double solve_reciprocal_sum(double s) {
  if (!(s >= 2.0)) fail(ErrorCode::no_real_solution, "lambda + 1/lambda = s has no real solution for s < 2");
  return (s + std::sqrt(s * s - 4.0)) / 2.0;
}

}  // namespace penner
