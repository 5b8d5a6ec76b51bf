#pragma once

// Exact scalar types and the dense matrix aliases used throughout the library.

#include <Eigen/Dense>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// Boost 1.74 probes every operand for a byte-container interface. Under C++20
// Eigen expressions expose `const_iterator = void`, which breaks that probe when
// Eigen asks whether an expression converts to a multiprecision scalar.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace penner {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// Fixed-width integer that throws on overflow; used by fast kernels.
using CheckedInt128 = boost::multiprecision::checked_int128_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline double to_double(const Integer& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const CheckedInt128& x) { return x.convert_to<double>(); }
inline double to_double(std::int64_t x) { return static_cast<double>(x); }

/// Exact rational value of a finite double (every double is a dyadic rational).
Rational exact_rational(double x);

inline std::string to_string(const Integer& x) { return x.str(); }
std::string to_string(const Rational& x);

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

template <typename Derived>
bool is_square(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() && m.rows() > 0;
}

/// Entrywise cast between exact scalar types (and to double).
template <typename To, typename Derived>
Matrix<To> exact_cast(const Eigen::MatrixBase<Derived>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<To, double>)
        out(i, j) = to_double(m(i, j));
      else
        out(i, j) = To(m(i, j));
    }
  return out;
}

/// log2 of the max-row-sum norm, used to pick a machine-integer kernel safely.
template <typename Derived>
double log2_row_norm(const Eigen::MatrixBase<Derived>& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) row += std::abs(to_double(m(i, j)));
    best = std::max(best, row);
  }
  return best > 0.0 ? std::log2(best) : -INFINITY;
}

}  // namespace penner
