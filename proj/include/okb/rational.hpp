// Exact scalars used throughout the library.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <compare>
#include <string>
#include <string_view>

namespace okb {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arbitrary-precision fraction, always kept reduced with a positive
/// denominator by the GMP backend, so `==` is structural.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Parses "p/q", "p" or "-p/q". Whitespace is not accepted. The result is
/// reduced; a zero denominator or malformed token throws std::invalid_argument
/// naming the token.
Rational parse_rational(std::string_view token);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline int sign(const Rational& value) { return value.sign(); }

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Lossy conversion for presentation output only.
inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace okb
