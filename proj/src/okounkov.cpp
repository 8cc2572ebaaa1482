#include "okb/okounkov.hpp"

#include "okb/cones.hpp"
#include "okb/error.hpp"

#include <stdexcept>

namespace okb {

Rational PiecewiseLinearFn::operator()(const Rational& t) const {
  if (breakpoints.empty() || t < breakpoints.front() || breakpoints.back() < t) {
    throw std::out_of_range("piecewise-linear function evaluated outside its domain");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (t <= breakpoints[i + 1]) {
      const Rational slope = (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
      return values[i] + slope * (t - breakpoints[i]);
    }
  }
  return values.back();
}

std::vector<Rational> PiecewiseLinearFn::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    out.push_back((values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]));
  return out;
}

bool PiecewiseLinearFn::is_concave() const {
  const std::vector<Rational> s = slopes();
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i + 1] > s[i]) return false;
  return true;
}

namespace {

[[noreturn]] void invariant(const std::string& what) { throw MathError(MathErrorKind::kInvariantViolation, what); }

ChamberSupport support_of(const detail::SupportSolution& sol, const std::vector<CurveClass>& curves) {
  ChamberSupport out;
  for (std::size_t i : sol.support) out.curves.push_back(curves[i]);
  std::sort(out.curves.begin(), out.curves.end());
  return out;
}

// Positive part of D - t*e0 for a support solution whose first column is
// evaluated at t.
DivisorClass positive_part(const DivisorClass& d, const Rational& t, const detail::SupportSolution& sol,
                           const std::vector<CurveClass>& curves) {
  DivisorClass p = d - t * DivisorClass::basis(d.n(), 0);
  for (std::size_t i = 0; i < sol.support.size(); ++i)
    p -= sol.coefficients(static_cast<Eigen::Index>(i), 0) * curves[sol.support[i]].divisor_class();
  return p;
}

class ChamberWalk {
 public:
  explicit ChamberWalk(const DivisorClass& d)
      : d_(d), cone_(ConeModel::get(d.n())), curves_(cone_.negative_curves()), gram_(cone_.negative_gram()),
        base_(static_cast<Eigen::Index>(curves_.size())), degree_(static_cast<Eigen::Index>(curves_.size())) {
    for (std::size_t j = 0; j < curves_.size(); ++j) {
      base_(static_cast<Eigen::Index>(j)) = intersect(d, curves_[j]);
      degree_(static_cast<Eigen::Index>(j)) = curves_[j].d();
    }
  }

  // D_t . C_j, optionally followed by its t-derivative.
  RationalMatrix dots(const Rational& t, bool with_slope) const {
    RationalMatrix out(base_.size(), with_slope ? 2 : 1);
    out.col(0) = base_ - t * degree_;
    if (with_slope) out.col(1) = -degree_;
    return out;
  }

  // e0 . P_t and its t-derivative on the chamber described by sol.
  std::pair<Rational, Rational> beta(const Rational& t, const detail::SupportSolution& sol) const {
    Rational value = d_.d() - t;
    Rational slope(-1);
    for (std::size_t i = 0; i < sol.support.size(); ++i) {
      const Rational& deg = degree_(static_cast<Eigen::Index>(sol.support[i]));
      value -= sol.coefficients(static_cast<Eigen::Index>(i), 0) * deg;
      if (sol.coefficients.cols() > 1) slope -= sol.coefficients(static_cast<Eigen::Index>(i), 1) * deg;
    }
    return {value, slope};
  }

  // First t' > t where the chamber entered at t ends: a candidate outside the
  // support reaching P.C = 0 from above, or a coefficient reaching zero.
  Rational chamber_end(const Rational& t, const RationalMatrix& dots, const detail::SupportSolution& sol,
                       const Rational& mu) const {
    Rational end = mu;
    std::vector<char> in_support(curves_.size(), 0);
    for (std::size_t i : sol.support) in_support[i] = 1;
    for (Eigen::Index j = 0; j < dots.rows(); ++j) {
      if (in_support[static_cast<std::size_t>(j)]) continue;
      Rational value = dots(j, 0);
      Rational slope = dots(j, 1);
      for (std::size_t i = 0; i < sol.support.size(); ++i) {
        const Rational& g = gram_(static_cast<Eigen::Index>(sol.support[i]), j);
        if (g == 0) continue;
        value -= g * sol.coefficients(static_cast<Eigen::Index>(i), 0);
        slope -= g * sol.coefficients(static_cast<Eigen::Index>(i), 1);
      }
      if (slope < 0) end = std::min(end, Rational(t - value / slope));
    }
    for (std::size_t i = 0; i < sol.support.size(); ++i) {
      const Rational& slope = sol.coefficients(static_cast<Eigen::Index>(i), 1);
      if (slope < 0) end = std::min(end, Rational(t - sol.coefficients(static_cast<Eigen::Index>(i), 0) / slope));
    }
    return end;
  }

  BetaProfile run() {
    BetaProfile out;
    const DivisorClass line = DivisorClass::basis(d_.n(), 0);
    out.mu = mu_threshold(d_, line);

    std::vector<Rational> ts;
    std::vector<Rational> betas;
    Rational t(0);
    for (;;) {
      const RationalMatrix first_order = dots(t, true);
      const detail::SupportSolution sol = detail::negative_support(first_order, gram_);
      ChamberSupport support = support_of(sol, curves_);
      for (const CurveClass& c : support.curves) {
        if (c.divisor_class() == line) invariant("flag line entered a negative support");
      }

      const auto [value, slope] = beta(t, sol);
      ts.push_back(t);
      betas.push_back(value);

      const Rational end = chamber_end(t, first_order, sol, out.mu);
      if (!(t < end)) invariant("chamber walk failed to advance at t=" + to_string(t));

      // Direct decomposition inside the open chamber must agree.
      const Rational mid = (t + end) / 2;
      const detail::SupportSolution check = detail::negative_support(dots(mid, false), gram_);
      if (check.support != sol.support) invariant("support changed inside a chamber at t=" + to_string(mid));
      if (beta(mid, check).first != value + slope * (mid - t)) invariant("beta is not affine on a chamber");
      if (!(self_intersection(positive_part(d_, mid, check, curves_)) > 0)) {
        invariant("volume vanishes before mu at t=" + to_string(mid));
      }

      out.chambers.push_back({t, end, std::move(support)});
      if (end == out.mu) {
        const detail::SupportSolution last = detail::negative_support(dots(out.mu, false), gram_);
        const Rational beta_mu = beta(out.mu, last).first;
        if (beta_mu != value + slope * (out.mu - t)) invariant("beta is discontinuous at mu");
        if (self_intersection(positive_part(d_, out.mu, last, curves_)) != 0) invariant("volume at mu is positive");
        ts.push_back(out.mu);
        betas.push_back(beta_mu);
        break;
      }
      t = end;
    }

    // Keep genuine breakpoints only.
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::size_t k = out.beta.breakpoints.size();
      if (k >= 2) {
        const Rational s_prev = (out.beta.values[k - 1] - out.beta.values[k - 2]) /
                                (out.beta.breakpoints[k - 1] - out.beta.breakpoints[k - 2]);
        const Rational s_next = (betas[i] - out.beta.values[k - 1]) / (ts[i] - out.beta.breakpoints[k - 1]);
        if (s_prev == s_next) {
          out.beta.breakpoints.back() = ts[i];
          out.beta.values.back() = betas[i];
          continue;
        }
      }
      out.beta.breakpoints.push_back(ts[i]);
      out.beta.values.push_back(betas[i]);
    }
    if (!out.beta.is_concave()) invariant("beta is not concave");
    return out;
  }

 private:
  const DivisorClass& d_;
  const ConeModel& cone_;
  const std::vector<CurveClass>& curves_;
  const RationalMatrix& gram_;
  RationalVector base_;
  RationalVector degree_;
};

void require_walkable(const DivisorClass& d) {
  if (d.n() == kMaxPoints) {
    throw MathError(MathErrorKind::kUnsupported, "n=9 requires the Seshadri/rescale pipeline");
  }
}

}  // namespace

BetaProfile beta_profile(const DivisorClass& d) {
  require_walkable(d);
  return ChamberWalk(d).run();
}

RationalPolygon okounkov_body(const DivisorClass& d) {
  const BetaProfile profile = beta_profile(d);
  std::vector<RationalPoint> pts{{Rational(0), Rational(0)}, {profile.mu, Rational(0)}};
  for (std::size_t i = 0; i < profile.beta.breakpoints.size(); ++i)
    pts.push_back({profile.beta.breakpoints[i], profile.beta.values[i]});
  return RationalPolygon::hull(std::move(pts));
}

RationalPolygon okounkov_body(const BodyRequest& request) { return okounkov_body(request.divisor); }

RationalPolygon seshadri_body(int n) {
  check_point_count(n, 1, kMaxPoints);
  const Rational eps = seshadri(n);
  const Rational corner = 1 - Rational(n) * eps * eps;
  return RationalPolygon::hull({{Rational(0), Rational(0)}, {corner, Rational(0)}, {Rational(0), Rational(1)}});
}

RationalPolygon rescale(const RationalPolygon& body, const Rational& r) {
  if (!(r > 0)) throw std::invalid_argument("rescale factor must be positive, got " + to_string(r));
  std::vector<RationalPoint> pts;
  pts.reserve(body.size());
  for (const RationalPoint& p : body.vertices()) pts.push_back({r * (p.x - 1) + 1, r * p.y});
  return RationalPolygon::hull(std::move(pts))
      .clipped(Rational(-1), Rational(0), Rational(0))
      .clipped(Rational(0), Rational(-1), Rational(0))
      .clipped(Rational(1), Rational(1), Rational(1));
}

RationalPolygon body_L(int n, const Rational& d, const Rational& m) {
  check_point_count(n);
  if (!(d > 0)) throw std::invalid_argument("degree d must be positive, got " + to_string(d));
  const Rational eps = m / d;
  if (n < kMaxPoints) {
    const DivisorClass normalized = DivisorClass::uniform(n, Rational(1), n == 0 ? Rational(0) : eps);
    if (!is_big(normalized)) {
      throw MathError(MathErrorKind::kNotBig, "L_{" + std::to_string(n) + "," + to_string(d) + "," + to_string(m) + "} is not big");
    }
    return okounkov_body(normalized).scaled(d);
  }
  const Rational third = make_rational(1, 3);
  if (eps == 0) return unit_simplex().scaled(d);
  if (eps == third) return seshadri_body(kMaxPoints).scaled(d);
  if (eps > third) {
    throw MathError(MathErrorKind::kNotBig, "L_{9," + to_string(d) + "," + to_string(m) + "} is not pseudo-effective");
  }
  throw MathError(MathErrorKind::kUnsupported,
                  "on X_9 only m/d = 1/3 is reachable through the Seshadri/rescale pipeline");
}

QuadraticPolygon nagata_strip(long n, const Rational& d, const Rational& m) {
  if (n < 9) throw std::invalid_argument("Nagata strips need n >= 9, got " + std::to_string(n));
  if (!(d > 0)) throw std::invalid_argument("degree d must be positive, got " + to_string(d));
  if (m < 0) throw std::invalid_argument("multiplicity m must be nonnegative, got " + to_string(m));
  const QuadraticNumber root = QuadraticNumber::sqrt(n) * QuadraticNumber(m);
  const QuadraticNumber width = QuadraticNumber(d) - root;
  if (width.sign() < 0) {
    throw MathError(MathErrorKind::kPredictedNonBig, "predicted non-big: d < sqrt(" + std::to_string(n) + ")*m");
  }
  const QuadraticNumber zero(0L);
  return QuadraticPolygon::hull({{zero, zero}, {width, zero}, {width, root}, {zero, QuadraticNumber(d)}},
                                !is_perfect_square(n));
}

namespace {

RationalPolygon dissection_body(int n, const Rational& eps) {
  const DivisorClass d = DivisorClass::uniform(n, Rational(1), eps);
  if (is_big(d)) return okounkov_body(d);
  if (!is_pseudoeffective(d)) return {};
  const Rational top = zariski_decompose(d).positive.d();
  return RationalPolygon::hull({{Rational(0), Rational(0)}, {Rational(0), top}});
}

}  // namespace

Dissection dissection(const Rational& eps) {
  Dissection out{eps, {}, {}};
  for (int n = 0; n < kMaxPoints; ++n) out.bodies.push_back({n, dissection_body(n, eps)});

  const Rational third = make_rational(1, 3);
  if (eps == 0) {
    out.bodies.push_back({kMaxPoints, unit_simplex()});
  } else if (eps == third) {
    out.bodies.push_back({kMaxPoints, seshadri_body(kMaxPoints)});
  } else if (eps > third) {
    out.bodies.push_back({kMaxPoints, RationalPolygon()});
  } else {
    out.warnings.push_back("n=9 omitted: eps=" + to_string(eps) + " is not reachable from the Seshadri body");
  }

  for (std::size_t i = 1; i < out.bodies.size(); ++i) {
    if (!out.bodies[i - 1].body.contains(out.bodies[i].body)) {
      invariant("dissection not nested between n=" + std::to_string(out.bodies[i - 1].n) + " and n=" +
                std::to_string(out.bodies[i].n));
    }
  }
  return out;
}

}  // namespace okb
