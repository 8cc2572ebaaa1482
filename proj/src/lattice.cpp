#include "okb/lattice.hpp"

#include <ostream>
#include <stdexcept>

namespace okb {

void check_point_count(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::invalid_argument("number of points n=" + std::to_string(n) + " outside " + std::to_string(lo) +
                                ".." + std::to_string(hi));
  }
}

DivisorClass::DivisorClass(int n) {
  check_point_count(n);
  coeffs_ = RationalVector::Zero(n + 1);
}

DivisorClass::DivisorClass(Rational d, const std::vector<Rational>& m) : coeffs_(m.size() + 1) {
  coeffs_(0) = std::move(d);
  for (std::size_t i = 0; i < m.size(); ++i) coeffs_(static_cast<Eigen::Index>(i + 1)) = m[i];
  check_n();
}

DivisorClass::DivisorClass(RationalVector coeffs) : coeffs_(std::move(coeffs)) { check_n(); }

void DivisorClass::check_n() const {
  if (coeffs_.size() < 1) throw std::invalid_argument("divisor class needs at least the e0 coefficient");
  check_point_count(n());
}

DivisorClass DivisorClass::basis(int n, int i) {
  check_point_count(n);
  if (i < 0 || i > n) throw std::invalid_argument("basis index e" + std::to_string(i) + " outside 0.." + std::to_string(n));
  DivisorClass out(n);
  out.coeffs_(i) = i == 0 ? 1 : -1;
  return out;
}

DivisorClass DivisorClass::uniform(int n, const Rational& d, const Rational& m) {
  DivisorClass out(n);
  out.coeffs_(0) = d;
  for (int i = 1; i <= n; ++i) out.coeffs_(i) = m;
  return out;
}

DivisorClass DivisorClass::from_ints(std::initializer_list<long> dm) {
  RationalVector v(static_cast<Eigen::Index>(dm.size()));
  Eigen::Index i = 0;
  for (long x : dm) v(i++) = x;
  return DivisorClass(std::move(v));
}

bool DivisorClass::is_integral() const {
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    if (!is_integer(coeffs_(i))) return false;
  return true;
}

Rational DivisorClass::total_multiplicity() const {
  Rational s(0);
  for (int i = 1; i <= n(); ++i) s += coeffs_(i);
  return s;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  if (rhs.n() != n()) throw std::invalid_argument("adding classes on different surfaces");
  coeffs_ += rhs.coeffs_;
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  if (rhs.n() != n()) throw std::invalid_argument("subtracting classes on different surfaces");
  coeffs_ -= rhs.coeffs_;
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

DivisorClass DivisorClass::operator-() const { return DivisorClass(RationalVector(-coeffs_)); }

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_(i) < b.coeffs_(i)) return std::strong_ordering::less;
    if (b.coeffs_(i) < a.coeffs_(i)) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CurveClass::CurveClass(DivisorClass c) : class_(std::move(c)) {
  if (!class_.is_integral()) throw std::invalid_argument("curve class " + to_string(class_) + " is not integral");
}

bool CurveClass::is_exceptional() const {
  return self_intersection(class_) == -1 && intersect(class_, canonical_class(n())) == -1;
}

Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("intersecting classes on X_" + std::to_string(a.n()) + " and X_" +
                                std::to_string(b.n()));
  }
  Rational s = a.d() * b.d();
  for (int i = 1; i <= a.n(); ++i) s -= a.m(i) * b.m(i);
  return s;
}

DivisorClass canonical_class(int n) { return DivisorClass::uniform(n, Rational(-3), Rational(-1)); }

Rational expected_genus(const DivisorClass& c) {
  return (self_intersection(c) + intersect(c, canonical_class(c.n()))) / 2 + 1;
}

std::string to_string(const DivisorClass& c) {
  if (c.n() == 0) return "(" + to_string(c.d()) + ")";
  std::string out = "(" + to_string(c.d()) + ";";
  for (int i = 1; i <= c.n(); ++i) {
    out += i == 1 ? " " : ",";
    out += to_string(c.m(i));
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const CurveClass& c) { return os << c.divisor_class(); }

DivisorClass parse_divisor_class(std::string_view text) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view entry = text.substr(start, comma - start);
    while (!entry.empty() && entry.front() == ' ') entry.remove_prefix(1);
    while (!entry.empty() && entry.back() == ' ') entry.remove_suffix(1);
    entries.push_back(parse_rational(entry));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (entries.size() > static_cast<std::size_t>(kMaxPoints) + 1) {
    throw std::invalid_argument("class '" + std::string(text) + "' has more than " + std::to_string(kMaxPoints) +
                                " multiplicities");
  }
  Rational d = entries.front();
  entries.erase(entries.begin());
  return DivisorClass(std::move(d), entries);
}

}  // namespace okb
