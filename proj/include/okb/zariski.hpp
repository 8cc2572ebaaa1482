// Zariski decomposition D = P + N of pseudo-effective classes on X_n, n <= 8.
#pragma once

#include "okb/lattice.hpp"

#include <cstddef>
#include <vector>

namespace okb {

struct NegativeComponent {
  CurveClass curve;
  Rational coefficient;

  friend bool operator==(const NegativeComponent&, const NegativeComponent&) = default;
};

struct ZariskiDecomposition {
  DivisorClass input;
  /// Nef, orthogonal to every support curve.
  DivisorClass positive;
  /// Canonically sorted by curve; every coefficient is strictly positive.
  std::vector<NegativeComponent> negative;
  /// Intersection matrix of the support curves, in the order of `negative`.
  RationalMatrix gram;

  DivisorClass negative_part() const;
};

/// Curves in the support of the negative part (the set Neg(D)).
struct ChamberSupport {
  std::vector<CurveClass> curves;

  friend bool operator==(const ChamberSupport&, const ChamberSupport&) = default;
};

/// Throws MathError kNotPseudoEffective for classes outside the effective
/// cone. Candidate curves are the negative generators of ConeModel::get(n).
ZariskiDecomposition zariski_decompose(const DivisorClass& d);

/// Same, with an explicit candidate list (its order must not matter).
ZariskiDecomposition zariski_decompose(const DivisorClass& d, const std::vector<CurveClass>& candidates);

ChamberSupport neg_support(const DivisorClass& d);

/// Generators C with C.P == 0 (the set Null(P)). Throws MathError kNotNef
/// when P is not nef.
std::vector<CurveClass> null_set(const DivisorClass& p);

namespace detail {

/// Lexicographic sign of a row: the sign of its first nonzero entry.
int lex_sign(const RationalMatrix& m, Eigen::Index row);

struct SupportSolution {
  /// Indices into the candidate list, ascending.
  std::vector<std::size_t> support;
  /// One row per support curve; same column count as the input.
  RationalMatrix coefficients;
};

/// The support fixpoint behind the decomposition. Row j of `dots` holds D.C_j
/// for candidate j; with more than one column each row is read as a
/// value followed by infinitesimal corrections and compared
/// lexicographically. Repeatedly adds every candidate meeting the current
/// positive part negatively and re-solves gram_S * x = dots_S.
SupportSolution negative_support(const RationalMatrix& dots, const RationalMatrix& gram);

}  // namespace detail

}  // namespace okb
