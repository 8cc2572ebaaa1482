#include "okb/quadratic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace okb {

std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("radicand must be positive, got " + std::to_string(n));
  std::int64_t root = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
  }
  return {root, rest};
}

bool is_perfect_square(std::int64_t n) { return n > 0 && split_square(n).second == 1; }

QuadraticNumber::QuadraticNumber(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)) {
  const auto [root, rest] = split_square(radicand);
  b_ *= Rational(root);
  n_ = rest;
  normalize();
}

void QuadraticNumber::normalize() {
  if (n_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) n_ = 1;
}

std::int64_t QuadraticNumber::joint_radicand(const QuadraticNumber& rhs) const {
  if (is_rational()) return rhs.n_;
  if (rhs.is_rational() || rhs.n_ == n_) return n_;
  throw std::invalid_argument("mixed radicands sqrt(" + std::to_string(n_) + ") and sqrt(" +
                              std::to_string(rhs.n_) + ")");
}

QuadraticNumber QuadraticNumber::conjugate() const {
  QuadraticNumber out = *this;
  out.b_ = -out.b_;
  return out;
}

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a^2 with n*b^2.
  const int c = norm().sign();
  return sa > 0 ? c : -c;
}

double QuadraticNumber::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(static_cast<double>(n_));
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
  n_ = joint_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) { return *this += -rhs; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
  const std::int64_t n = joint_radicand(rhs);
  const Rational a = a_ * rhs.a_ + Rational(n) * b_ * rhs.b_;
  const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  n_ = n;
  normalize();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
  const Rational denom = rhs.norm();
  if (denom == 0) throw std::domain_error("division by zero quadratic number");
  *this *= rhs.conjugate();
  a_ /= denom;
  b_ /= denom;
  normalize();
  return *this;
}

std::string to_string(const QuadraticNumber& value) {
  if (value.is_rational()) return to_string(value.rational_part());
  std::string out;
  if (value.rational_part() != 0) {
    out = to_string(value.rational_part());
    out += value.radical_part().sign() < 0 ? " - " : " + ";
  } else if (value.radical_part().sign() < 0) {
    out = "-";
  }
  const Rational mag = abs(value.radical_part());
  if (mag != 1) out += to_string(mag) + "*";
  out += "sqrt(" + std::to_string(value.radicand()) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& value) {
  return os << to_string(value);
}

}  // namespace okb
