// Exact linear programming for small polyhedral cone problems.
#pragma once

#include "okb/rational.hpp"

#include <optional>
#include <vector>

namespace okb {

/// maximize c.x  subject to  a x = b,  x >= 0.
struct LinearProgram {
  RationalMatrix a;
  RationalVector b;
  RationalVector c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective{0};
  RationalVector x;
};

/// Two-phase dense tableau simplex with Bland's rule (smallest-index
/// entering and leaving variables), which cannot cycle.
LpSolution solve_lp(const LinearProgram& lp);

/// Nonnegative coefficients lambda with generators * lambda == x, if any.
/// Generators are the columns of `generators`.
std::optional<RationalVector> cone_combination(const RationalVector& x, const RationalMatrix& generators);

bool cone_member(const RationalVector& x, const RationalMatrix& generators);
bool cone_member(const RationalVector& x, const std::vector<RationalVector>& generators);

/// sup { t >= 0 : start - t * direction lies in the cone }.
/// Throws MathError kNotInCone if start is outside the cone and
/// kUnboundedThreshold if the ray never leaves it.
Rational cone_exit_threshold(const RationalVector& start, const RationalVector& direction,
                             const RationalMatrix& generators);
Rational cone_exit_threshold(const RationalVector& start, const RationalVector& direction,
                             const std::vector<RationalVector>& generators);

/// Packs equal-length vectors as matrix columns.
RationalMatrix columns_of(const std::vector<RationalVector>& vectors);

}  // namespace okb
