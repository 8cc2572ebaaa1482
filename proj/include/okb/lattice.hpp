// The Picard lattice of the plane blown up in n <= 9 points.
//
// A class is stored as (d; m_1, ..., m_n) and denotes d*e_0 - sum m_i*e_i,
// so that e_i (i >= 1) has m_i = -1 and table rows such as (6; 3,2,2,2,2,2,2,2)
// can be written verbatim. The intersection form is e_0^2 = 1, e_i^2 = -1.
#pragma once

#include "okb/rational.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

inline constexpr int kMaxPoints = 9;

class DivisorClass {
 public:
  /// The zero class on X_n.
  explicit DivisorClass(int n = 0);
  DivisorClass(Rational d, const std::vector<Rational>& m);
  /// Coefficient vector (d, m_1, ..., m_n).
  explicit DivisorClass(RationalVector coeffs);

  /// e_i on X_n; i == 0 is the pulled-back line class.
  static DivisorClass basis(int n, int i);
  /// d*e_0 - m*(e_1 + ... + e_n).
  static DivisorClass uniform(int n, const Rational& d, const Rational& m);
  /// Integer shorthand, e.g. from_ints({6, 3, 2, 2, 2, 2, 2, 2, 2}).
  static DivisorClass from_ints(std::initializer_list<long> dm);

  int n() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& d() const { return coeffs_(0); }
  /// Multiplicity at point i, 1 <= i <= n.
  const Rational& m(int i) const { return coeffs_(i); }
  const RationalVector& coeffs() const { return coeffs_; }

  bool is_integral() const;
  bool is_zero() const { return coeffs_.isZero(); }
  /// m_1 + ... + m_n.
  Rational total_multiplicity() const;

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Rational& s);
  DivisorClass operator-() const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  /// Canonical order: by n, then d, then lexicographically on m.
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

 private:
  void check_n() const;
  RationalVector coeffs_;
};

/// An integral class that represents (or is meant to represent) an
/// irreducible reduced curve.
class CurveClass {
 public:
  /// Throws std::invalid_argument if c is not integral.
  explicit CurveClass(DivisorClass c);

  const DivisorClass& divisor_class() const { return class_; }
  operator const DivisorClass&() const { return class_; }  // NOLINT(google-explicit-constructor)

  int n() const { return class_.n(); }
  const Rational& d() const { return class_.d(); }
  const Rational& m(int i) const { return class_.m(i); }

  /// C^2 == -1 and C.k == -1.
  bool is_exceptional() const;

  friend bool operator==(const CurveClass& a, const CurveClass& b) { return a.class_ == b.class_; }
  friend std::strong_ordering operator<=>(const CurveClass& a, const CurveClass& b) {
    return a.class_ <=> b.class_;
  }

 private:
  DivisorClass class_;
};

/// d_a*d_b - sum m_{i,a}*m_{i,b}. Throws std::invalid_argument on mismatched n.
Rational intersect(const DivisorClass& a, const DivisorClass& b);
inline Rational self_intersection(const DivisorClass& a) { return intersect(a, a); }

/// k = -3e_0 + e_1 + ... + e_n, i.e. (-3; -1, ..., -1).
DivisorClass canonical_class(int n);

/// Arithmetic genus from adjunction: (C^2 + C.k)/2 + 1.
Rational expected_genus(const DivisorClass& c);

/// "(d; m1,...,mn)".
std::string to_string(const DivisorClass& c);
std::ostream& operator<<(std::ostream& os, const DivisorClass& c);
std::ostream& operator<<(std::ostream& os, const CurveClass& c);

/// Parses the shorthand "d,m1,m2,..." with rational entries.
DivisorClass parse_divisor_class(std::string_view text);

void check_point_count(int n, int lo = 0, int hi = kMaxPoints);

}  // namespace okb
