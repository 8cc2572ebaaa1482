#include "okb/cones.hpp"

#include "okb/cone_lp.hpp"
#include "okb/error.hpp"
#include "okb/weyl.hpp"
#include "okb/zariski.hpp"

#include <array>
#include <stdexcept>

namespace okb {

namespace {

void require_finite_cone(int n) {
  if (n == kMaxPoints) {
    throw MathError(MathErrorKind::kConeNotFinitelyGenerated,
                    "cone not finitely generated: the effective cone of X_9 has infinitely many extremal rays");
  }
  check_point_count(n, 0, kMaxPoints - 1);
}

}  // namespace

ConeModel::ConeModel(int n) : n_(n) {
  if (n == 0) {
    generators_.emplace_back(DivisorClass::basis(0, 0));
  } else if (n == 1) {
    generators_.emplace_back(DivisorClass::basis(1, 1));
    generators_.emplace_back(DivisorClass::basis(1, 0) - DivisorClass::basis(1, 1));
  } else {
    generators_ = exceptional_classes(n);
  }

  generator_matrix_.resize(n + 1, static_cast<Eigen::Index>(generators_.size()));
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    generator_matrix_.col(static_cast<Eigen::Index>(j)) = generators_[j].divisor_class().coeffs();
    if (self_intersection(generators_[j]) < 0) negative_curves_.push_back(generators_[j]);
  }

  const auto k = static_cast<Eigen::Index>(negative_curves_.size());
  negative_gram_.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      negative_gram_(i, j) = negative_gram_(j, i) =
          intersect(negative_curves_[static_cast<std::size_t>(i)], negative_curves_[static_cast<std::size_t>(j)]);
}

const ConeModel& ConeModel::get(int n) {
  require_finite_cone(n);
  static const std::array<ConeModel, kMaxPoints> models = [] {
    return std::array<ConeModel, kMaxPoints>{ConeModel(0), ConeModel(1), ConeModel(2), ConeModel(3), ConeModel(4),
                                             ConeModel(5), ConeModel(6), ConeModel(7), ConeModel(8)};
  }();
  return models[static_cast<std::size_t>(n)];
}

std::optional<RationalVector> pseudoeffective_certificate(const DivisorClass& d) {
  return cone_combination(d.coeffs(), ConeModel::get(d.n()).generator_matrix());
}

bool is_pseudoeffective(const DivisorClass& d) { return pseudoeffective_certificate(d).has_value(); }

std::optional<CurveClass> nef_violation(const DivisorClass& d) {
  for (const CurveClass& g : ConeModel::get(d.n()).generators()) {
    if (intersect(d, g) < 0) return g;
  }
  return std::nullopt;
}

bool is_nef(const DivisorClass& d) { return !nef_violation(d).has_value(); }

bool is_big(const DivisorClass& d) {
  require_finite_cone(d.n());
  try {
    return self_intersection(zariski_decompose(d).positive) > 0;
  } catch (const MathError& e) {
    if (e.kind() == MathErrorKind::kNotPseudoEffective) return false;
    throw;
  }
}

bool is_ample(const DivisorClass& d) {
  if (!(self_intersection(d) > 0)) return false;
  for (const CurveClass& g : ConeModel::get(d.n()).generators()) {
    if (!(intersect(d, g) > 0)) return false;
  }
  return true;
}

Rational seshadri(int n) {
  check_point_count(n, 1, kMaxPoints);
  if (n == kMaxPoints) return make_rational(1, 3);
  std::optional<Rational> best;
  for (const CurveClass& g : ConeModel::get(n).generators()) {
    const Rational total = g.divisor_class().total_multiplicity();
    if (!(total > 0)) continue;
    Rational ratio = g.d() / total;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return *best;
}

Rational mu_threshold(const DivisorClass& d, const DivisorClass& flag) {
  require_finite_cone(d.n());
  const DivisorClass line = DivisorClass::basis(d.n(), 0);
  if (flag != line) throw std::invalid_argument("flag curve must be the line class e0, got " + to_string(flag));
  if (!is_big(d)) throw MathError(MathErrorKind::kNotBig, "class " + to_string(d) + " is not big");

  const ConeModel& cone = ConeModel::get(d.n());
  Rational mu = cone_exit_threshold(d.coeffs(), line.coeffs(), cone.generator_matrix());
  // Along this ray the big and pseudo-effective thresholds agree; confirm the
  // class just before the endpoint still has positive volume.
  const DivisorClass inside = d - (mu - mu / 1024) * line;
  if (!(self_intersection(zariski_decompose(inside).positive) > 0)) {
    throw MathError(MathErrorKind::kInvariantViolation,
                    "volume vanishes before the pseudo-effective threshold along " + to_string(d));
  }
  return mu;
}

}  // namespace okb
