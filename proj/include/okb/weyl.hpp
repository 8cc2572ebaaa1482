// The Weyl group W_n acting on the Picard lattice of X_n.
#pragma once

#include "okb/lattice.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace okb {

/// Simple reflection s_i. For i < n it swaps e_i and e_{i+1}; s_n is the
/// quadratic Cremona reflection through e_1, e_2, e_3 and needs n >= 3.
class Reflection {
 public:
  /// Throws std::invalid_argument for i outside 1..n, or i == n < 3.
  Reflection(int index, int n);

  int index() const { return index_; }
  int n() const { return n_; }
  bool is_cremona() const { return index_ == n_; }

  friend bool operator==(const Reflection&, const Reflection&) = default;

 private:
  int index_;
  int n_;
};

DivisorClass apply(const Reflection& s, const DivisorClass& c);

/// s_1, ..., s_{n-1}, and s_n when n >= 3.
std::vector<Reflection> simple_reflections(int n);

struct OrbitResult {
  DivisorClass seed;
  /// Canonically sorted.
  std::vector<DivisorClass> elements;
  /// Reflection indices, applied left to right to the seed.
  std::map<DivisorClass, std::vector<int>> words;
};

inline constexpr std::size_t kDefaultOrbitBound = 10000;

/// Breadth-first closure of seed under simple_reflections(n). Throws
/// MathError kOrbitBoundExceeded once more than max_size classes are found
/// (always the case for the infinite orbits on X_9).
OrbitResult orbit(const DivisorClass& seed, std::size_t max_size = kDefaultOrbitBound);

/// All classes of exceptional curves of the first kind on X_n, 1 <= n <= 8,
/// canonically sorted.
std::vector<CurveClass> exceptional_classes(int n);

/// Independent enumeration of the integral (d; m) with C^2 = -1, C.k = -1,
/// 0 <= d <= 6 and -1 <= m_i <= d.
std::vector<CurveClass> exceptional_classes_diophantine(int n);

/// Number of classes of each degree d.
std::map<long, std::size_t> degree_histogram(const std::vector<CurveClass>& classes);

struct CremonaReduction {
  DivisorClass reduced;
  std::vector<Reflection> word;
};

/// Sorts multiplicities descending with s_1..s_{n-1} and applies s_n while
/// d > 0 and d < m_1 + m_2 + m_3. Each s_n step lowers d, so this terminates.
CremonaReduction cremona_reduce(const DivisorClass& c);

}  // namespace okb
