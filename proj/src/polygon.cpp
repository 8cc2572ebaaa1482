#include "okb/polygon.hpp"

namespace okb {

RationalPolygon unit_simplex() {
  return RationalPolygon::hull({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
}

QuadraticPolygon to_quadratic(const RationalPolygon& p) {
  std::vector<QuadraticPoint> pts;
  pts.reserve(p.size());
  for (const RationalPoint& v : p.vertices()) pts.push_back({QuadraticNumber(v.x), QuadraticNumber(v.y)});
  return QuadraticPolygon::hull(std::move(pts), p.conjectural());
}

}  // namespace okb
