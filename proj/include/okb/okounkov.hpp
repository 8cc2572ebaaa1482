// Okounkov bodies of classes on X_n with respect to the flag
// (very general line, very general point on it).
//
// For a big class D the body is { (t, y) : 0 <= t <= mu, 0 <= y <= beta(t) }
// where mu is the bigness threshold of D - t*e0 and beta(t) = e0 . P_t is
// read off the Zariski decomposition D - t*e0 = P_t + N_t. The lower
// boundary is identically zero: the line class has positive square and so
// never enters a negative support, and a very general point avoids every
// support curve.
#pragma once

#include "okb/lattice.hpp"
#include "okb/polygon.hpp"
#include "okb/zariski.hpp"

#include <string>
#include <vector>

namespace okb {

/// Continuous piecewise-linear function given by its values at strictly
/// increasing breakpoints; only genuine slope changes are kept.
struct PiecewiseLinearFn {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  Rational operator()(const Rational& t) const;
  /// Slope on each of the breakpoints.size() - 1 segments.
  std::vector<Rational> slopes() const;
  bool is_concave() const;
};

/// One linear piece of the chamber walk.
struct ChamberSegment {
  Rational start;
  Rational end;
  ChamberSupport support;
};

struct BetaProfile {
  Rational mu;
  PiecewiseLinearFn beta;
  std::vector<ChamberSegment> chambers;
};

struct BodyRequest {
  DivisorClass divisor;
};

/// The parametric walk along D - t*e0, 0 <= t <= mu. Every chamber is
/// entered through an exact first-order Zariski decomposition at its left
/// end and cross-checked by a direct decomposition at its midpoint.
/// Requires D big and n <= 8.
BetaProfile beta_profile(const DivisorClass& d);

RationalPolygon okounkov_body(const DivisorClass& d);
RationalPolygon okounkov_body(const BodyRequest& request);

/// hull{(0,0), (1 - n*eps_n^2, 0), (0,1)} for 1 <= n <= 9; a segment when n = 9.
RationalPolygon seshadri_body(int n);

/// phi_r(x, y) = (r*(x - 1) + 1, r*y), followed by intersection with the
/// unit simplex. r must be positive.
RationalPolygon rescale(const RationalPolygon& body, const Rational& r);

/// Body of d*e0 - m*(e_1 + ... + e_n), i.e. d times the body of e0 - (m/d)*sum e_i.
/// On X_9 only m/d in {0, 1/3} is available.
RationalPolygon body_L(int n, const Rational& d, const Rational& m);

/// The strip hull{(0,0), (d - sqrt(n)*m, 0), (d - sqrt(n)*m, sqrt(n)*m), (0,d)}
/// for n >= 9 and d >= sqrt(n)*m. Flagged conjectural unless n is a square.
QuadraticPolygon nagata_strip(long n, const Rational& d, const Rational& m);

struct DissectionEntry {
  int n;
  RationalPolygon body;
};

struct Dissection {
  Rational eps;
  std::vector<DissectionEntry> bodies;
  std::vector<std::string> warnings;
};

/// Bodies of e0 - eps*(e_1 + ... + e_n) for n = 0..9, checked to be nested.
/// Classes on the pseudo-effective boundary give the degenerate segment
/// {0} x [0, e0 . P]; classes outside the cone give the empty polygon.
Dissection dissection(const Rational& eps = make_rational(1, 3));

}  // namespace okb
