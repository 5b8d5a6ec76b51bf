#pragma once

// Exact characteristic polynomials and certified spectral radii of
// nonnegative matrices.

#include <optional>
#include <utility>

#include "penner/error.hpp"
#include "penner/exact.hpp"
#include "penner/polynomial.hpp"

namespace penner {

inline constexpr double kDefaultTolerance = 1e-12;

/// A certified real root: the isolating interval [lower, upper] holds exactly
/// one root of the squarefree part of the source polynomial, and
/// |value - root| <= radius.
struct RootApproximation {
  double value = 0.0;
  double radius = 0.0;
  Rational lower;
  Rational upper;
  /// The source polynomial with its signs at the interval endpoints. When
  /// `exact` is set the root is the rational `lower == upper`.
  IntPolynomial certified_by;
  bool exact = false;

  Rational midpoint() const { return (lower + upper) / 2; }
};

/// Characteristic polynomial of an integer matrix together with the positive
/// integer `scale` that was used to clear denominators (1 for integer input).
/// `poly` is det(tI - scale·m).
struct ScaledCharPoly {
  IntPolynomial poly;
  Integer scale = 1;
};

namespace detail {

// Faddeev-LeVerrier: c_{n-k} = -tr(m·A_k)/k, A_{k+1} = m·A_k + c_{n-k}·I.
// Every division is exact over the integers.
template <typename Scalar>
std::vector<Integer> faddeev_leverrier(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[static_cast<std::size_t>(n)] = 1;
  Matrix<Scalar> acc = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix<Scalar> prod = m * acc;
    Scalar trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) trace += prod(i, i);
    if (trace % Scalar(k) != 0)
      fail(ErrorCode::internal_inconsistency, "Faddeev-LeVerrier: inexact trace division");
    const Scalar coeff = -(trace / Scalar(k));
    c[static_cast<std::size_t>(n - k)] = Integer(coeff);
    acc = prod;
    for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += coeff;
  }
  return c;
}

}  // namespace detail

/// det(tI - m) with exact integer coefficients; degree equals dim.
///
/// Runs in 64-bit or checked 128-bit arithmetic when a norm bound proves the
/// intermediate values fit, and in arbitrary precision otherwise.
template <typename Derived>
IntPolynomial char_poly(const Eigen::MatrixBase<Derived>& m) {
  if (!is_square(m)) fail(ErrorCode::invalid_parameter, "char_poly needs a nonempty square matrix");
  using Scalar = typename Derived::Scalar;
  static_assert(!std::is_floating_point_v<Scalar>, "char_poly needs exact integer entries");
  const double n = static_cast<double>(m.rows());
  // |entries of A_k|, |tr(m A_k)| <= n·2^n·||m||^n
  const double bound_bits = n * std::max(0.0, log2_row_norm(m)) + n + std::log2(n) + 2.0;
  if (bound_bits < 62.0)
    return IntPolynomial(detail::faddeev_leverrier(exact_cast<std::int64_t>(m)));
  if (bound_bits < 126.0)
    return IntPolynomial(detail::faddeev_leverrier(exact_cast<CheckedInt128>(m)));
  return IntPolynomial(detail::faddeev_leverrier(exact_cast<Integer>(m)));
}

/// Characteristic polynomial of a rational matrix after clearing denominators.
ScaledCharPoly char_poly_scaled(const RationalMatrix& m);

/// Largest real root of p, certified by Descartes or Sturm isolation and exact
/// bisection to `radius <= tol`. An optional floating `hint` speeds up the
/// isolation; it never replaces the certificate.
RootApproximation largest_real_root(const IntPolynomial& p, double tol = kDefaultTolerance,
                                    std::optional<double> hint = std::nullopt);

/// Number of distinct real roots of p in the open interval (a, b), by Sturm.
int count_real_roots(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Power iteration from the all-ones vector; empty when it fails to converge
/// within 10·dim·ceil(-log10 tol) steps.
std::optional<double> power_iteration_estimate(const Eigen::MatrixXd& m, double tol = kDefaultTolerance);

struct SpectralReport {
  RootApproximation radius;
  IntPolynomial char_poly;
  std::optional<double> power_estimate;
  /// Diagnostic only: power iteration agrees with the certified value within 10·tol.
  bool cross_check_agrees = false;
};

/// Perron-Frobenius eigenvalue of a nonnegative integer matrix.
SpectralReport spectral_report(const IntegerMatrix& m, double tol = kDefaultTolerance);

inline RootApproximation spectral_radius(const IntegerMatrix& m, double tol = kDefaultTolerance) {
  return spectral_report(m, tol).radius;
}

/// Minimal polynomial over Q (primitive, positive leading coefficient) of the
/// root certified by `root`, or empty when its degree exceeds `max_degree`.
/// Candidate factors come from products of floating roots; each candidate is
/// accepted only after exact division and an exact sign change on the
/// isolating interval.
std::optional<IntPolynomial> minimal_polynomial(const RootApproximation& root, int max_degree = 16);

/// The larger solution of λ + 1/λ = s, for s >= 2.
double solve_reciprocal_sum(double s);

}  // namespace penner
