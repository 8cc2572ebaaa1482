#include "okb/zariski.hpp"

#include "okb/cones.hpp"
#include "okb/error.hpp"
#include "okb/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace okb {

namespace detail {

int lex_sign(const RationalMatrix& m, Eigen::Index row) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (const int s = m(row, j).sign(); s != 0) return s;
  }
  return 0;
}

namespace {

template <typename Gram>
RationalMatrix principal_block(const Gram& gram, const std::vector<std::size_t>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  RationalMatrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = gram(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
  return out;
}

RationalMatrix rows_of(const RationalMatrix& m, const std::vector<std::size_t>& idx) {
  RationalMatrix out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(idx[i]));
  return out;
}

// Necessary condition: every 2x2 principal minor of a negative-definite
// matrix is positive.
template <typename Gram>
bool pairwise_definite(const Gram& gram, const std::vector<std::size_t>& idx) {
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const auto i = static_cast<Eigen::Index>(idx[a]);
    if (!(gram(i, i) < 0)) return false;
    for (std::size_t b = 0; b < a; ++b) {
      const auto j = static_cast<Eigen::Index>(idx[b]);
      if (!(gram(i, i) * gram(j, j) > gram(i, j) * gram(i, j))) return false;
    }
  }
  return true;
}

// gram(i, j) returns C_i.C_j for candidate indices.
template <typename Gram>
SupportSolution solve_support(const RationalMatrix& dots, const Gram& gram) {
  const Eigen::Index count = dots.rows();
  SupportSolution out{{}, RationalMatrix(0, dots.cols())};
  std::vector<char> in_support(static_cast<std::size_t>(count), 0);

  for (Eigen::Index round = 0;; ++round) {
    if (round > 4 * count + 4) {
      throw MathError(MathErrorKind::kInvariantViolation, "negative support search did not settle");
    }
    // Residual P.C_j = D.C_j - sum_i x_i C_i.C_j.
    std::vector<std::size_t> violators;
    for (Eigen::Index j = 0; j < count; ++j) {
      if (in_support[static_cast<std::size_t>(j)]) continue;
      RationalMatrix residual = dots.row(j);
      for (std::size_t i = 0; i < out.support.size(); ++i) {
        const Rational& g = gram(static_cast<Eigen::Index>(out.support[i]), j);
        if (g != 0) residual.row(0) -= g * out.coefficients.row(static_cast<Eigen::Index>(i));
      }
      if (lex_sign(residual, 0) < 0) violators.push_back(static_cast<std::size_t>(j));
    }
    if (violators.empty()) return out;

    for (std::size_t j : violators) in_support[j] = 1;
    out.support.insert(out.support.end(), violators.begin(), violators.end());
    std::sort(out.support.begin(), out.support.end());

    if (!pairwise_definite(gram, out.support)) {
      throw MathError(MathErrorKind::kInvariantViolation, "negative support lost negative-definiteness");
    }
    const RationalMatrix block = principal_block(gram, out.support);
    if (!is_negative_definite(block)) {
      throw MathError(MathErrorKind::kInvariantViolation, "negative support lost negative-definiteness");
    }
    out.coefficients = solve_linear<Rational>(block, rows_of(dots, out.support));

    // A zero coefficient leaves the remaining equations satisfied, so that
    // curve is dropped without re-solving.
    std::vector<std::size_t> kept;
    std::vector<Eigen::Index> kept_rows;
    for (std::size_t i = 0; i < out.support.size(); ++i) {
      const int s = lex_sign(out.coefficients, static_cast<Eigen::Index>(i));
      if (s < 0) throw MathError(MathErrorKind::kInvariantViolation, "negative coefficient in negative part");
      if (s > 0) {
        kept.push_back(out.support[i]);
        kept_rows.push_back(static_cast<Eigen::Index>(i));
      } else {
        in_support[out.support[i]] = 0;
      }
    }
    if (kept.size() != out.support.size()) {
      RationalMatrix shrunk(static_cast<Eigen::Index>(kept_rows.size()), out.coefficients.cols());
      for (std::size_t i = 0; i < kept_rows.size(); ++i) shrunk.row(static_cast<Eigen::Index>(i)) = out.coefficients.row(kept_rows[i]);
      out.support = std::move(kept);
      out.coefficients = std::move(shrunk);
    }
  }
}

}  // namespace

SupportSolution negative_support(const RationalMatrix& dots, const RationalMatrix& gram) {
  return solve_support(dots, [&](Eigen::Index i, Eigen::Index j) -> const Rational& { return gram(i, j); });
}

}  // namespace detail

DivisorClass ZariskiDecomposition::negative_part() const {
  DivisorClass out(input.n());
  for (const NegativeComponent& c : negative) out += c.coefficient * c.curve.divisor_class();
  return out;
}

namespace {

template <typename Gram>
ZariskiDecomposition decompose_unchecked(const DivisorClass& d, const std::vector<CurveClass>& candidates,
                                         const Gram& gram) {
  RationalMatrix dots(static_cast<Eigen::Index>(candidates.size()), 1);
  for (std::size_t j = 0; j < candidates.size(); ++j) dots(static_cast<Eigen::Index>(j), 0) = intersect(d, candidates[j]);

  const detail::SupportSolution sol = detail::solve_support(dots, gram);

  ZariskiDecomposition out{d, d, {}, {}};
  for (std::size_t i = 0; i < sol.support.size(); ++i) {
    out.negative.push_back({candidates[sol.support[i]], sol.coefficients(static_cast<Eigen::Index>(i), 0)});
  }
  std::sort(out.negative.begin(), out.negative.end(),
            [](const NegativeComponent& a, const NegativeComponent& b) { return a.curve < b.curve; });

  const auto k = static_cast<Eigen::Index>(out.negative.size());
  out.gram.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const NegativeComponent& c = out.negative[static_cast<std::size_t>(i)];
    out.positive -= c.coefficient * c.curve.divisor_class();
    for (Eigen::Index j = 0; j < k; ++j) out.gram(i, j) = intersect(c.curve, out.negative[static_cast<std::size_t>(j)].curve);
  }

  const auto fail = [&](const std::string& what) {
    throw MathError(MathErrorKind::kInvariantViolation, "Zariski decomposition of " + to_string(d) + ": " + what);
  };
  if (!is_nef(out.positive)) fail("positive part is not nef");
  for (const NegativeComponent& c : out.negative) {
    if (intersect(out.positive, c.curve) != 0) fail("positive part not orthogonal to support");
    if (!(c.coefficient > 0)) fail("non-positive coefficient");
  }
  if (k > 0 && !is_negative_definite(out.gram)) fail("support Gram matrix is not negative-definite");
  return out;
}

// A successful run certifies pseudo-effectivity by itself (D = P + N with P
// nef and N effective); the LP is consulted only to classify a failure.
template <typename Gram>
ZariskiDecomposition decompose_with(const DivisorClass& d, const std::vector<CurveClass>& candidates,
                                    const Gram& gram) {
  try {
    return decompose_unchecked(d, candidates, gram);
  } catch (const MathError& e) {
    if (e.kind() != MathErrorKind::kInvariantViolation || is_pseudoeffective(d)) throw;
    throw MathError(MathErrorKind::kNotPseudoEffective, "class " + to_string(d) + " is not pseudo-effective");
  }
}

}  // namespace

ZariskiDecomposition zariski_decompose(const DivisorClass& d) {
  const ConeModel& cone = ConeModel::get(d.n());
  const RationalMatrix& gram = cone.negative_gram();
  return decompose_with(d, cone.negative_curves(),
                        [&](Eigen::Index i, Eigen::Index j) -> const Rational& { return gram(i, j); });
}

ZariskiDecomposition zariski_decompose(const DivisorClass& d, const std::vector<CurveClass>& candidates) {
  const ConeModel& cone = ConeModel::get(d.n());
  const std::vector<CurveClass>& known = cone.negative_curves();
  const auto k = static_cast<Eigen::Index>(candidates.size());
  std::vector<Eigen::Index> pos;
  for (const CurveClass& c : candidates) {
    const auto it = std::lower_bound(known.begin(), known.end(), c);
    if (it == known.end() || !(*it == c)) break;
    pos.push_back(it - known.begin());
  }
  if (pos.size() == candidates.size()) {
    const RationalMatrix& cached = cone.negative_gram();
    return decompose_with(d, candidates, [&](Eigen::Index i, Eigen::Index j) -> const Rational& {
      return cached(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
    });
  }
  RationalMatrix gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j)
      gram(i, j) = intersect(candidates[static_cast<std::size_t>(i)], candidates[static_cast<std::size_t>(j)]);
  }
  return decompose_with(d, candidates, [&](Eigen::Index i, Eigen::Index j) -> const Rational& { return gram(i, j); });
}

ChamberSupport neg_support(const DivisorClass& d) {
  ChamberSupport out;
  for (NegativeComponent& c : zariski_decompose(d).negative) out.curves.push_back(std::move(c.curve));
  return out;
}

std::vector<CurveClass> null_set(const DivisorClass& p) {
  if (auto bad = nef_violation(p)) {
    throw MathError(MathErrorKind::kNotNef, "class " + to_string(p) + " is not nef: meets " + to_string(*bad) + " negatively");
  }
  std::vector<CurveClass> out;
  for (const CurveClass& g : ConeModel::get(p.n()).generators()) {
    if (intersect(p, g) == 0) out.push_back(g);
  }
  return out;
}

}  // namespace okb
