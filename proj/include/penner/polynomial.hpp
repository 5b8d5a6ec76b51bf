#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "penner/exact.hpp"

namespace penner {

/// Univariate polynomial with exact integer coefficients, constant term first.
///
/// The coefficient vector is kept trimmed: the leading coefficient is nonzero
/// unless the polynomial is zero, in which case the vector is empty and
/// `degree()` is -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const Integer& c);
  /// The monomial c·t^k.
  static IntPolynomial monomial(const Integer& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// Coefficient of t^k (zero outside the stored range).
  Integer coeff(int k) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate(const Integer& t) const;
  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  std::complex<double> evaluate(std::complex<double> t) const;
  /// Sign of p(num / 2^shift), computed exactly in integers.
  int sign_at_dyadic(const Integer& num, unsigned shift) const;
  int sign_at(const Rational& t) const;

  IntPolynomial derivative() const;
  /// Gcd of the coefficients, nonnegative.
  Integer content() const;
  /// p / content, normalised to a positive leading coefficient.
  IntPolynomial primitive_part() const;
  /// p(t + shift).
  IntPolynomial taylor_shift(const Integer& shift) const;
  /// p(scale · t).
  IntPolynomial scale_argument(const Integer& scale) const;
  /// t^deg · p(1/t).
  IntPolynomial reversed() const;
  /// Number of sign changes in the coefficient sequence, zeros skipped.
  int sign_variations() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);

  /// Human-readable form, highest degree first, e.g. "t^2 - 6*t + 1".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Quotient and remainder of exact division in Q[t]; throws unless both have
/// integer coefficients (true whenever the divisor is monic, or divides exactly).
std::pair<IntPolynomial, IntPolynomial> divide(const IntPolynomial& a, const IntPolynomial& b);

/// a / b, throwing `internal_inconsistency` if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) · a  mod  b, computed in Z[t].
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Complex roots by companion-matrix eigenvalues (floating point).
std::vector<std::complex<double>> complex_roots(const IntPolynomial& p);

/// The k-th cyclotomic polynomial.
IntPolynomial cyclotomic(int k);

}  // namespace penner
