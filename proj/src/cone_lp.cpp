#include "okb/cone_lp.hpp"

#include "okb/error.hpp"
#include "okb/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace okb {

namespace {

using Index = Eigen::Index;

template <typename Scalar>
struct Sign {
  static bool negative(const Scalar& v) { return v < 0; }
  static bool positive(const Scalar& v) { return v > 0; }
  static bool zero(const Scalar& v) { return v == 0; }
};

template <>
struct Sign<double> {
  static constexpr double kTol = 1e-9;
  static bool negative(double v) { return v < -kTol; }
  static bool positive(double v) { return v > kTol; }
  static bool zero(double v) { return std::abs(v) <= kTol; }
};

// Dense tableau: rows 0..m-1 are constraints, row m holds reduced costs
// (z_j - c_j), the last column holds the right-hand side.
template <typename Scalar>
class Tableau {
 public:
  using S = Sign<Scalar>;
  using Mat = Matrix<Scalar>;
  using Vec = Vector<Scalar>;

  Tableau(const Mat& a, const Vec& b)
      : m_(a.rows()), n_(a.cols()), t_(Mat::Zero(a.rows() + 1, a.cols() + a.rows() + 1)),
        basis_(static_cast<std::size_t>(a.rows())) {
    for (Index i = 0; i < m_; ++i) {
      const bool flip = b(i) < 0;
      for (Index j = 0; j < n_; ++j) t_(i, j) = flip ? Scalar(-a(i, j)) : a(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs_col()) = flip ? Scalar(-b(i)) : b(i);
      basis_[static_cast<std::size_t>(i)] = n_ + i;
    }
  }

  Index rhs_col() const { return t_.cols() - 1; }
  Index rows() const { return m_; }
  bool is_artificial(Index j) const { return j >= n_ && j < rhs_col(); }
  const std::vector<Index>& basis() const { return basis_; }

  // Installs the objective "maximize cost . x" (cost over all columns but rhs).
  void set_objective(const Vec& cost) {
    for (Index j = 0; j <= rhs_col(); ++j) {
      Scalar r = j < rhs_col() ? Scalar(-cost(j)) : Scalar(0);
      for (Index i = 0; i < m_; ++i) {
        const Scalar& cb = cost(basis_[static_cast<std::size_t>(i)]);
        if (cb != 0 && t_(i, j) != 0) r += cb * t_(i, j);
      }
      t_(m_, j) = r;
    }
  }

  // Runs Bland's rule over columns [0, limit). Returns false when unbounded.
  bool optimize(Index limit) {
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < limit; ++j) {
        if (S::negative(t_(m_, j))) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      Index leave = -1;
      Scalar best;
      for (Index i = 0; i < m_; ++i) {
        if (!S::positive(t_(i, enter))) continue;
        Scalar ratio = t_(i, rhs_col()) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(Index row, Index col) {
    const Scalar p = t_(row, col);
    std::vector<Index> nz;
    for (Index j = 0; j <= rhs_col(); ++j) {
      if (t_(row, j) == 0) continue;
      t_(row, j) /= p;
      nz.push_back(j);
    }
    for (Index i = 0; i <= m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Scalar f = t_(i, col);
      for (Index j : nz) t_(i, j) -= f * t_(row, j);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // After phase one, pivots remaining zero-valued artificials out of the
  // basis; rows that cannot be pivoted are redundant and get dropped.
  void expel_artificials() {
    for (Index i = 0; i < m_;) {
      if (!is_artificial(basis_[static_cast<std::size_t>(i)])) {
        ++i;
        continue;
      }
      Index col = -1;
      for (Index j = 0; j < n_; ++j) {
        if (!S::zero(t_(i, j))) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
        ++i;
      } else {
        drop_row(i);
      }
    }
  }

  const Scalar& objective() const { return t_(m_, rhs_col()); }

  Vec primal() const {
    Vec x = Vec::Zero(n_);
    for (Index i = 0; i < m_; ++i) {
      const Index b = basis_[static_cast<std::size_t>(i)];
      if (b < n_) x(b) = t_(i, rhs_col());
    }
    return x;
  }

 private:
  void drop_row(Index i) {
    const Index last = t_.rows() - 1;
    Mat shrunk(t_.rows() - 1, t_.cols());
    shrunk << t_.topRows(i), t_.bottomRows(last - i);
    t_ = std::move(shrunk);
    basis_.erase(basis_.begin() + i);
    --m_;
  }

  Index m_;
  Index n_;
  Mat t_;
  std::vector<Index> basis_;
};

template <typename Scalar>
LpSolution run_simplex(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& c,
                       std::vector<Index>* basis) {
  const Index m = a.rows();
  const Index n = a.cols();
  Tableau<Scalar> tab(a, b);
  Vector<Scalar> phase1 = Vector<Scalar>::Zero(n + m);
  phase1.tail(m).setConstant(Scalar(-1));
  tab.set_objective(phase1);
  tab.optimize(n);

  LpSolution out;
  if (!Sign<Scalar>::zero(tab.objective())) {
    out.status = LpStatus::kInfeasible;
    if (basis) *basis = tab.basis();
    return out;
  }
  tab.expel_artificials();

  Vector<Scalar> phase2 = Vector<Scalar>::Zero(n + m);
  phase2.head(n) = c;
  tab.set_objective(phase2);
  if (!tab.optimize(n)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  if (basis) *basis = tab.basis();
  if constexpr (std::is_same_v<Scalar, Rational>) {
    out.objective = tab.objective();
    out.x = tab.primal();
  }
  return out;
}

// Exact optimality test for a basis proposed by the floating-point pass:
// B x_B = b with x_B >= 0, and c_j - y.A_j <= 0 for y solving B^T y = c_B.
std::optional<LpSolution> certify_basis(const LinearProgram& lp, const std::vector<Index>& basis) {
  const Index m = lp.a.rows();
  if (static_cast<Index>(basis.size()) != m) return std::nullopt;
  RationalMatrix bmat(m, m);
  RationalVector cb(m);
  for (Index i = 0; i < m; ++i) {
    const Index j = basis[static_cast<std::size_t>(i)];
    if (j >= lp.a.cols()) return std::nullopt;
    bmat.col(i) = lp.a.col(j);
    cb(i) = lp.c(j);
  }
  RationalVector xb;
  RationalVector y;
  try {
    xb = solve_linear<Rational>(bmat, lp.b);
    y = solve_linear<Rational>(RationalMatrix(bmat.transpose()), cb);
  } catch (const MathError&) {
    return std::nullopt;
  }
  for (Index i = 0; i < m; ++i)
    if (xb(i) < 0) return std::nullopt;
  for (Index j = 0; j < lp.a.cols(); ++j) {
    Rational reduced = lp.c(j);
    for (Index i = 0; i < m; ++i) {
      if (y(i) != 0 && lp.a(i, j) != 0) reduced -= y(i) * lp.a(i, j);
    }
    if (reduced > 0) return std::nullopt;
  }
  LpSolution out;
  out.status = LpStatus::kOptimal;
  out.x = RationalVector::Zero(lp.a.cols());
  out.objective = 0;
  for (Index i = 0; i < m; ++i) {
    out.x(basis[static_cast<std::size_t>(i)]) = xb(i);
    out.objective += cb(i) * xb(i);
  }
  return out;
}

// Exact infeasibility test for a phase-one basis proposed by the
// floating-point pass. The phase-one duals y give a Farkas certificate:
// y.A_j >= 0 for every column and y.b < 0 (or both signs reversed).
bool certify_infeasible(const LinearProgram& lp, const std::vector<Index>& basis) {
  const Index m = lp.a.rows();
  const Index n = lp.a.cols();
  if (static_cast<Index>(basis.size()) != m) return false;
  RationalMatrix bmat = RationalMatrix::Zero(m, m);
  RationalVector cb(m);
  for (Index i = 0; i < m; ++i) {
    const Index j = basis[static_cast<std::size_t>(i)];
    if (j < n) {
      bmat.col(i) = lp.a.col(j);
      cb(i) = 0;
    } else {
      const Index row = j - n;
      bmat(row, i) = lp.b(row) < 0 ? -1 : 1;
      cb(i) = -1;
    }
  }
  RationalVector y;
  try {
    y = solve_linear<Rational>(RationalMatrix(bmat.transpose()), cb);
  } catch (const MathError&) {
    return false;
  }
  const Rational yb = y.dot(lp.b);
  if (yb == 0) return false;
  const int want = yb < 0 ? 1 : -1;
  for (Index j = 0; j < n; ++j) {
    const int s = sign(Rational(y.dot(lp.a.col(j))));
    if (s != 0 && s != want) return false;
  }
  return true;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const Index m = lp.a.rows();
  const Index n = lp.a.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw std::invalid_argument("solve_lp: inconsistent dimensions");

  // A floating-point pass proposes a basis; it is only used if it certifies
  // exactly, otherwise the exact simplex decides.
  std::vector<Index> basis;
  const Matrix<double> af = lp.a.unaryExpr([](const Rational& r) { return to_double(r); });
  const Vector<double> bf = lp.b.unaryExpr([](const Rational& r) { return to_double(r); });
  const Vector<double> cf = lp.c.unaryExpr([](const Rational& r) { return to_double(r); });
  switch (run_simplex<double>(af, bf, cf, &basis).status) {
    case LpStatus::kOptimal:
      if (auto certified = certify_basis(lp, basis)) return *std::move(certified);
      break;
    case LpStatus::kInfeasible:
      if (certify_infeasible(lp, basis)) return LpSolution{};
      break;
    case LpStatus::kUnbounded:
      break;
  }
  return run_simplex<Rational>(lp.a, lp.b, lp.c, nullptr);
}

RationalMatrix columns_of(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return RationalMatrix(0, 0);
  const Index dim = vectors.front().size();
  RationalMatrix out(dim, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) throw std::invalid_argument("generator dimension mismatch");
    out.col(static_cast<Index>(j)) = vectors[j];
  }
  return out;
}

std::optional<RationalVector> cone_combination(const RationalVector& x, const RationalMatrix& generators) {
  if (generators.cols() > 0 && generators.rows() != x.size())
    throw std::invalid_argument("cone_member: dimension mismatch");
  if (x.isZero()) return RationalVector(RationalVector::Zero(generators.cols()));
  if (generators.cols() == 0) return std::nullopt;
  LinearProgram lp{generators, x, RationalVector::Zero(generators.cols())};
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  return sol.x;
}

bool cone_member(const RationalVector& x, const RationalMatrix& generators) {
  return cone_combination(x, generators).has_value();
}

bool cone_member(const RationalVector& x, const std::vector<RationalVector>& generators) {
  return cone_member(x, columns_of(generators));
}

Rational cone_exit_threshold(const RationalVector& start, const RationalVector& direction,
                             const RationalMatrix& generators) {
  const Index dim = start.size();
  if (direction.size() != dim || (generators.cols() > 0 && generators.rows() != dim))
    throw std::invalid_argument("cone_exit_threshold: dimension mismatch");

  // Variables: lambda (one per generator) and t; generators*lambda + t*dir = start.
  LinearProgram lp;
  lp.a.resize(dim, generators.cols() + 1);
  lp.a.leftCols(generators.cols()) = generators;
  lp.a.col(generators.cols()) = direction;
  lp.b = start;
  lp.c = RationalVector::Zero(generators.cols() + 1);
  lp.c(generators.cols()) = 1;

  LpSolution sol = solve_lp(lp);
  switch (sol.status) {
    case LpStatus::kInfeasible:
      throw MathError(MathErrorKind::kNotInCone, "start point is not in the cone");
    case LpStatus::kUnbounded:
      throw MathError(MathErrorKind::kUnboundedThreshold, "unbounded threshold: the ray never leaves the cone");
    case LpStatus::kOptimal:
      break;
  }
  return sol.objective;
}

Rational cone_exit_threshold(const RationalVector& start, const RationalVector& direction,
                             const std::vector<RationalVector>& generators) {
  return cone_exit_threshold(start, direction, columns_of(generators));
}

}  // namespace okb
