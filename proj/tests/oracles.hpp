// Brute-force reference computations used to check the library algorithms.
// Each one enumerates subsets instead of pivoting or iterating, so it shares
// no code path with the routine under test beyond exact linear solves.
#pragma once

#include "okb/lattice.hpp"
#include "okb/linalg.hpp"
#include "okb/rational.hpp"

#include <optional>
#include <vector>

namespace oracle {

using okb::Rational;
using okb::RationalMatrix;
using okb::RationalVector;

// Calls f on every subset of {0..n-1} of size at most k, as sorted index lists.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    f(pick);
    if (static_cast<int>(pick.size()) == k) return;
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// Solves cols * lambda = x when the selected columns are independent.
inline std::optional<RationalVector> exact_combination(const RationalMatrix& cols, const RationalVector& x) {
  if (cols.cols() == 0) return x.isZero() ? std::optional<RationalVector>(RationalVector(0)) : std::nullopt;
  const RationalMatrix normal = cols.transpose() * cols;
  if (okb::determinant(normal) == 0) return std::nullopt;
  RationalVector lambda = okb::solve_linear<Rational>(normal, RationalVector(cols.transpose() * x));
  if (!(cols * lambda == x)) return std::nullopt;
  return lambda;
}

inline RationalMatrix select(const RationalMatrix& m, const std::vector<int>& idx) {
  RationalMatrix out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(idx[j]);
  return out;
}

// Caratheodory: x is in the cone iff it is a nonnegative combination of some
// linearly independent subset of the generators.
inline bool cone_member(const RationalVector& x, const RationalMatrix& gens) {
  bool found = false;
  for_each_subset(static_cast<int>(gens.cols()), static_cast<int>(x.size()), [&](const std::vector<int>& s) {
    if (found) return;
    if (auto lambda = exact_combination(select(gens, s), x)) {
      if ((lambda->array() >= Rational(0)).all()) found = true;
    }
  });
  return found;
}

// Largest t with start - t*dir in the cone, by enumerating every subset of
// generators together with dir; the optimum sits at such a vertex.
inline std::optional<Rational> exit_threshold(const RationalVector& start, const RationalVector& dir,
                                              const RationalMatrix& gens) {
  std::optional<Rational> best;
  const Eigen::Index dim = start.size();
  for_each_subset(static_cast<int>(gens.cols()), static_cast<int>(dim) - 1, [&](const std::vector<int>& s) {
    RationalMatrix cols(dim, static_cast<Eigen::Index>(s.size()) + 1);
    cols.leftCols(static_cast<Eigen::Index>(s.size())) = select(gens, s);
    cols.col(static_cast<Eigen::Index>(s.size())) = dir;
    auto sol = exact_combination(cols, start);
    if (!sol) return;
    const Rational t = (*sol)(sol->size() - 1);
    if (t < 0) return;
    for (Eigen::Index i = 0; i + 1 < sol->size(); ++i)
      if ((*sol)(i) < 0) return;
    if (!best || t > *best) best = t;
  });
  return best;
}

struct Decomposition {
  okb::DivisorClass positive;
  std::vector<int> support;
  RationalVector coefficients;
};

// Every subset S of candidate curves with a negative-definite Gram matrix is
// tried: solve P.C = 0 on S, and accept when the coefficients are positive
// and P meets all generators nonnegatively. Returns every accepted subset;
// uniqueness of the Zariski decomposition means there should be one.
inline std::vector<Decomposition> zariski_all(const okb::DivisorClass& d, const std::vector<okb::CurveClass>& curves,
                                              const std::vector<okb::CurveClass>& generators, int max_support) {
  std::vector<Decomposition> out;
  for_each_subset(static_cast<int>(curves.size()), max_support, [&](const std::vector<int>& s) {
    const auto k = static_cast<Eigen::Index>(s.size());
    RationalMatrix gram(k, k);
    RationalVector rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      rhs(i) = okb::intersect(d, curves[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])]);
      for (Eigen::Index j = 0; j < k; ++j)
        gram(i, j) = okb::intersect(curves[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])],
                                    curves[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])]);
    }
    if (k > 0 && !okb::is_negative_definite(gram)) return;
    const RationalVector x = k > 0 ? okb::solve_linear<Rational>(gram, rhs) : RationalVector(0);
    okb::DivisorClass p = d;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (!(x(i) > 0)) return;
      p -= x(i) * curves[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])].divisor_class();
    }
    for (const okb::CurveClass& g : generators)
      if (okb::intersect(p, g) < 0) return;
    out.push_back({p, s, x});
  });
  return out;
}

}  // namespace oracle
