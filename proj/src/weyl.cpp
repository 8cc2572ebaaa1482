#include "okb/weyl.hpp"

#include "okb/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace okb {

Reflection::Reflection(int index, int n) : index_(index), n_(n) {
  check_point_count(n);
  if (index < 1 || index > n) {
    throw std::invalid_argument("reflection s" + std::to_string(index) + " undefined on X_" + std::to_string(n));
  }
  if (index == n && n < 3) {
    throw std::invalid_argument("Cremona reflection undefined for n=" + std::to_string(n) + " < 3");
  }
}

DivisorClass apply(const Reflection& s, const DivisorClass& c) {
  if (c.n() != s.n()) throw std::invalid_argument("reflection and class live on different surfaces");
  RationalVector v = c.coeffs();
  if (!s.is_cremona()) {
    std::swap(v(s.index()), v(s.index() + 1));
    return DivisorClass(std::move(v));
  }
  // d' = 2d - m1 - m2 - m3, m_i' = d - m_j - m_k for {i, j, k} = {1, 2, 3}.
  const Rational& d = c.d();
  const Rational excess = c.m(1) + c.m(2) + c.m(3) - d;
  v(0) = d - excess;
  for (int i = 1; i <= 3; ++i) v(i) = c.m(i) - excess;
  return DivisorClass(std::move(v));
}

std::vector<Reflection> simple_reflections(int n) {
  std::vector<Reflection> out;
  for (int i = 1; i < n; ++i) out.emplace_back(i, n);
  if (n >= 3) out.emplace_back(n, n);
  return out;
}

OrbitResult orbit(const DivisorClass& seed, std::size_t max_size) {
  if (!seed.is_integral()) throw std::invalid_argument("orbit seed " + to_string(seed) + " is not integral");
  const auto gens = simple_reflections(seed.n());

  OrbitResult out{seed, {}, {}};
  out.words.emplace(seed, std::vector<int>{});
  std::deque<DivisorClass> frontier{seed};
  while (!frontier.empty()) {
    const DivisorClass current = std::move(frontier.front());
    frontier.pop_front();
    const std::vector<int> word = out.words.at(current);
    for (const Reflection& s : gens) {
      DivisorClass next = apply(s, current);
      if (out.words.contains(next)) continue;
      if (out.words.size() >= max_size) {
        throw MathError(MathErrorKind::kOrbitBoundExceeded,
                        "orbit of " + to_string(seed) + " exceeds bound " + std::to_string(max_size));
      }
      std::vector<int> next_word = word;
      next_word.push_back(s.index());
      out.words.emplace(next, std::move(next_word));
      frontier.push_back(std::move(next));
    }
  }
  out.elements.reserve(out.words.size());
  for (const auto& [cls, word] : out.words) out.elements.push_back(cls);
  return out;
}

std::vector<CurveClass> exceptional_classes(int n) {
  check_point_count(n, 1, 8);
  std::vector<CurveClass> out;
  if (n == 1) {
    out.emplace_back(DivisorClass::basis(1, 1));
  } else if (n == 2) {
    out.emplace_back(DivisorClass::basis(2, 1));
    out.emplace_back(DivisorClass::basis(2, 2));
    out.emplace_back(DivisorClass::from_ints({1, 1, 1}));
  } else {
    for (DivisorClass& c : orbit(DivisorClass::basis(n, n)).elements) out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_multiplicities(int n, long d, int pos, long sum_left, long squares_left, std::vector<long>& m,
                              std::vector<CurveClass>& out) {
  if (pos == n) {
    if (sum_left != 0 || squares_left != 0) return;
    std::vector<Rational> ms(m.begin(), m.end());
    out.emplace_back(DivisorClass(Rational(d), ms));
    return;
  }
  const long remaining = n - pos - 1;
  for (long v = -1; v <= d; ++v) {
    const long s = sum_left - v;
    const long q = squares_left - v * v;
    if (q < 0) {
      if (v > 0) break;
      continue;
    }
    if (s < -remaining || s > remaining * d) continue;
    m[static_cast<std::size_t>(pos)] = v;
    enumerate_multiplicities(n, d, pos + 1, s, q, m, out);
  }
}

}  // namespace

std::vector<CurveClass> exceptional_classes_diophantine(int n) {
  check_point_count(n, 1, 8);
  std::vector<CurveClass> out;
  std::vector<long> m(static_cast<std::size_t>(n));
  // C.k = -3d + sum m = -1 and C^2 = d^2 - sum m^2 = -1.
  for (long d = 0; d <= 6; ++d) enumerate_multiplicities(n, d, 0, 3 * d - 1, d * d + 1, m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<long, std::size_t> degree_histogram(const std::vector<CurveClass>& classes) {
  std::map<long, std::size_t> out;
  for (const CurveClass& c : classes) {
    if (!is_integer(c.d())) throw std::invalid_argument("non-integral degree");
    ++out[numerator(c.d()).convert_to<long>()];
  }
  return out;
}

CremonaReduction cremona_reduce(const DivisorClass& c) {
  if (!c.is_integral()) throw std::invalid_argument("cremona_reduce needs an integral class, got " + to_string(c));
  check_point_count(c.n(), 3, kMaxPoints);
  const int n = c.n();
  CremonaReduction out{c, {}};
  for (;;) {
    // Bubble sort descending; every swap is a transposition s_i.
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int i = 1; i < n; ++i) {
        if (out.reduced.m(i) < out.reduced.m(i + 1)) {
          Reflection s(i, n);
          out.reduced = apply(s, out.reduced);
          out.word.push_back(s);
          swapped = true;
        }
      }
    }
    const DivisorClass& r = out.reduced;
    if (!(r.d() > 0 && r.d() < r.m(1) + r.m(2) + r.m(3))) return out;
    Reflection cremona(n, n);
    out.reduced = apply(cremona, out.reduced);
    out.word.push_back(cremona);
  }
}

}  // namespace okb
