// Numbers of the form a + b*sqrt(n) with a, b rational.
#pragma once

#include "okb/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>

namespace okb {

class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational rational_part)  // NOLINT(google-explicit-constructor)
      : a_(std::move(rational_part)) {}
  QuadraticNumber(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(radicand). The radicand is split into k^2 * r with r
  /// square-free and stored as (a, b*k, r); r == 1 collapses to a rational.
  QuadraticNumber(Rational a, Rational b, std::int64_t radicand);

  /// sqrt(radicand) exactly.
  static QuadraticNumber sqrt(std::int64_t radicand) { return {Rational(0), Rational(1), radicand}; }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  /// Square-free radicand; 1 whenever the value is rational.
  std::int64_t radicand() const { return n_; }

  bool is_rational() const { return b_ == 0; }
  std::optional<Rational> to_rational() const {
    if (!is_rational()) return std::nullopt;
    return a_;
  }

  /// a - b*sqrt(n).
  QuadraticNumber conjugate() const;
  /// a^2 - n*b^2, the field norm.
  Rational norm() const { return a_ * a_ - Rational(n_) * b_ * b_; }

  int sign() const;
  double to_double() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
  friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
  friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }
  friend QuadraticNumber operator/(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.n_ == rhs.n_;
  }
  friend std::strong_ordering operator<=>(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    const int s = (lhs - rhs).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  // Common radicand for a binary operation; throws if both are irrational
  // over different fields.
  std::int64_t joint_radicand(const QuadraticNumber& rhs) const;
  void normalize();

  Rational a_{0};
  Rational b_{0};
  std::int64_t n_ = 1;
};

inline int sign(const QuadraticNumber& value) { return value.sign(); }
inline double to_double(const QuadraticNumber& value) { return value.to_double(); }

/// "a + b*sqrt(n)" style rendering for human-readable output.
std::string to_string(const QuadraticNumber& value);
std::ostream& operator<<(std::ostream& os, const QuadraticNumber& value);

/// Largest k with k^2 dividing n, and n / k^2.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n);
bool is_perfect_square(std::int64_t n);

}  // namespace okb
