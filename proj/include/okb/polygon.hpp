// Convex polygons with exact coordinates.
//
// A Polygon is always kept in canonical form: the convex hull of its
// defining points, counterclockwise, without repeated or collinear
// vertices, starting at the lexicographically smallest vertex. Degenerate
// hulls are allowed (a segment has two vertices, a point one, the empty
// polygon none), so equality of polygons is plain vertex-list equality.
#pragma once

#include "okb/quadratic.hpp"
#include "okb/rational.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

namespace okb {

template <typename Scalar>
struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// Orientation of (b - a) x (c - a): positive for a left turn.
template <typename Scalar>
int orientation(const Point<Scalar>& a, const Point<Scalar>& b, const Point<Scalar>& c) {
  const Scalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign(cross);
}

template <typename Scalar>
class Polygon {
 public:
  using PointType = Point<Scalar>;

  Polygon() = default;

  /// Canonical convex hull of the given points (Andrew's monotone chain).
  static Polygon hull(std::vector<PointType> points, bool conjectural = false) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Polygon out;
    out.conjectural_ = conjectural;
    if (points.size() <= 2) {
      out.vertices_ = std::move(points);
      return out;
    }
    std::vector<PointType> h;
    h.reserve(2 * points.size());
    for (const PointType& p : points) {
      while (h.size() >= 2 && orientation(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
      h.push_back(p);
    }
    const std::size_t lower = h.size() + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
      while (h.size() >= lower && orientation(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
      h.push_back(*it);
    }
    h.pop_back();
    out.vertices_ = std::move(h);
    return out;
  }

  const std::vector<PointType>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Set for shapes that rest on an unproven conjecture.
  bool conjectural() const { return conjectural_; }
  void set_conjectural(bool value) { conjectural_ = value; }

  /// Twice the enclosed area (shoelace formula); zero for degenerate hulls.
  Scalar twice_area() const {
    Scalar s(0);
    if (vertices_.size() < 3) return s;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const PointType& p = vertices_[i];
      const PointType& q = vertices_[(i + 1) % vertices_.size()];
      s += p.x * q.y - q.x * p.y;
    }
    return s;
  }

  bool contains(const PointType& p) const {
    switch (vertices_.size()) {
      case 0:
        return false;
      case 1:
        return vertices_[0] == p;
      case 2: {
        const PointType& a = vertices_[0];
        const PointType& b = vertices_[1];
        if (orientation(a, b, p) != 0) return false;
        return !(p < a) && !(b < p);
      }
      default:
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
          if (orientation(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0) return false;
        }
        return true;
    }
  }

  /// Containment of convex sets reduces to containment of vertices.
  bool contains(const Polygon& other) const {
    return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                       [&](const PointType& p) { return contains(p); });
  }

  Polygon scaled(const Scalar& factor) const {
    if (factor < Scalar(0)) throw std::invalid_argument("polygon scale factor must be nonnegative");
    std::vector<PointType> pts;
    pts.reserve(vertices_.size());
    for (const PointType& p : vertices_) pts.push_back({p.x * factor, p.y * factor});
    return hull(std::move(pts), conjectural_);
  }

  /// Intersection with the half-plane a*x + b*y <= c (Sutherland-Hodgman
  /// on the closed vertex loop, then re-canonicalized).
  Polygon clipped(const Scalar& a, const Scalar& b, const Scalar& c) const {
    std::vector<PointType> out;
    const std::size_t k = vertices_.size();
    const auto value = [&](const PointType& p) { return a * p.x + b * p.y; };
    for (std::size_t i = 0; i < k; ++i) {
      const PointType& cur = vertices_[i];
      const PointType& next = vertices_[(i + 1) % k];
      const Scalar fc = value(cur);
      const Scalar fn = value(next);
      const bool cur_in = !(c < fc);
      const bool next_in = !(c < fn);
      if (cur_in) out.push_back(cur);
      if (cur_in != next_in) {
        const Scalar s = (c - fc) / (fn - fc);
        out.push_back({cur.x + (next.x - cur.x) * s, cur.y + (next.y - cur.y) * s});
      }
    }
    return hull(std::move(out), conjectural_);
  }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<PointType> vertices_;
  bool conjectural_ = false;
};

using RationalPoint = Point<Rational>;
using RationalPolygon = Polygon<Rational>;
using QuadraticPoint = Point<QuadraticNumber>;
using QuadraticPolygon = Polygon<QuadraticNumber>;

/// {x >= 0, y >= 0, x + y <= 1}.
RationalPolygon unit_simplex();

/// Exact embedding of a rational polygon into Q(sqrt n) coordinates.
QuadraticPolygon to_quadratic(const RationalPolygon& p);

}  // namespace okb
