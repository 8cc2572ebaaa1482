// Positivity cones of X_n for n <= 8, and the Seshadri constants.
#pragma once

#include "okb/lattice.hpp"

#include <optional>
#include <vector>

namespace okb {

/// Extremal effective classes of X_n. Built once per n and shared.
class ConeModel {
 public:
  /// 0 <= n <= 8. n == 9 throws MathError kConeNotFinitelyGenerated.
  static const ConeModel& get(int n);

  int n() const { return n_; }
  /// n=0: {e0}; n=1: {e1, e0-e1}; n>=2: the exceptional classes.
  const std::vector<CurveClass>& generators() const { return generators_; }
  /// Generators as columns of a (n+1) x count matrix.
  const RationalMatrix& generator_matrix() const { return generator_matrix_; }
  /// The generators of negative self-intersection: every irreducible
  /// curve of negative square on X_n is one of these.
  const std::vector<CurveClass>& negative_curves() const { return negative_curves_; }
  /// Intersection matrix of negative_curves().
  const RationalMatrix& negative_gram() const { return negative_gram_; }

 private:
  explicit ConeModel(int n);

  int n_;
  std::vector<CurveClass> generators_;
  RationalMatrix generator_matrix_;
  std::vector<CurveClass> negative_curves_;
  RationalMatrix negative_gram_;
};

bool is_pseudoeffective(const DivisorClass& d);
/// Nonnegative generator coefficients summing to d, when d is pseudo-effective.
std::optional<RationalVector> pseudoeffective_certificate(const DivisorClass& d);

bool is_nef(const DivisorClass& d);
/// First generator meeting d negatively, if any.
std::optional<CurveClass> nef_violation(const DivisorClass& d);

/// Pseudo-effective with positive Zariski part of positive square.
bool is_big(const DivisorClass& d);
/// d^2 > 0 and d.g > 0 for every generator g.
bool is_ample(const DivisorClass& d);

/// n-point Seshadri constant of the line class, 1 <= n <= 9. For n <= 8 it is
/// the minimum of d_C / sum m_{i,C} over generators with positive total
/// multiplicity; n == 9 gives 1/3 (no finite certificate exists).
Rational seshadri(int n);

/// sup { s > 0 : d - s*flag is big }, with flag the line class e0. Throws
/// MathError kNotBig if d itself is not big.
Rational mu_threshold(const DivisorClass& d, const DivisorClass& flag);

}  // namespace okb
