#include "penner/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include <boost/multiprecision/integer.hpp>
#include <unsupported/Eigen/Polynomials>

#include "penner/error.hpp"

namespace penner {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer pow_int(const Integer& base, unsigned e) {
  Integer result = 1;
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int k) {
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1, Integer(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

double IntPolynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

int IntPolynomial::sign_at_dyadic(const Integer& num, unsigned shift) const {
  // 2^(shift·deg) · p(num / 2^shift) = sum c_i num^i 2^(shift·(deg - i)), by Horner
  // on the homogenised form.
  if (is_zero()) return 0;
  Integer acc = 0;
  for (int i = degree(); i >= 0; --i) {
    const Integer scale = Integer(1) << (shift * static_cast<unsigned>(degree() - i));
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * scale;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

int IntPolynomial::sign_at(const Rational& t) const {
  const Rational v = evaluate(t);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, abs_int(c));
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / g;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::taylor_shift(const Integer& shift) const {
  std::vector<Integer> a = coeffs_;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += shift * a[static_cast<std::size_t>(j) + 1];
  return IntPolynomial(std::move(a));
}

IntPolynomial IntPolynomial::scale_argument(const Integer& scale) const {
  std::vector<Integer> a = coeffs_;
  Integer power = 1;
  for (auto& c : a) {
    c *= power;
    power *= scale;
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Integer> a(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(a));
}

int IntPolynomial::sign_variations() const {
  int count = 0;
  int last = 0;
  for (const auto& c : coeffs_) {
    const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Integer mag = abs_int(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<IntPolynomial, IntPolynomial> divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::invalid_parameter, "polynomial division by zero");
  std::vector<Integer> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {IntPolynomial{}, a};
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db) + 1, Integer(0));
  const Integer& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (top % lb != 0) fail(ErrorCode::internal_inconsistency, "non-integral polynomial quotient");
    const Integer q = top / lb;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) fail(ErrorCode::internal_inconsistency, "polynomial division is not exact");
  return q;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::invalid_parameter, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const unsigned e = static_cast<unsigned>(a.degree() - b.degree() + 1);
  const IntPolynomial scaled = pow_int(b.leading(), e) * a;
  return divide(scaled, b).second;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.primitive_part();
  const IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

std::vector<std::complex<double>> complex_roots(const IntPolynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  Eigen::VectorXd c(d + 1);
  for (int i = 0; i <= d; ++i) c(i) = to_double(p.coeff(i));
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
  std::vector<std::complex<double>> roots(solver.roots().data(), solver.roots().data() + solver.roots().size());
  std::sort(roots.begin(), roots.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

IntPolynomial cyclotomic(int k) {
  if (k < 1) fail(ErrorCode::invalid_parameter, "cyclotomic index must be positive");
  // t^k - 1 = prod_{d | k} Phi_d(t)
  IntPolynomial result = IntPolynomial::monomial(1, k) - IntPolynomial{1};
  for (int d = 1; d < k; ++d)
    if (k % d == 0) result = exact_quotient(result, cyclotomic(d));
  return result;
}

}  // namespace penner
