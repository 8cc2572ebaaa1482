#include "catch_amalgamated.hpp"

#include "okb/error.hpp"
#include "okb/verify.hpp"
#include "okb/weyl.hpp"

#include <algorithm>
#include <set>

using namespace okb;

namespace {

// Exceptional classes by a plain nested scan of all (d; m) boxes with
// d <= 6 and -1 <= m_i <= d, no pruning.
std::set<DivisorClass> scan_exceptional(int n) {
  std::set<DivisorClass> out;
  std::vector<long> m(static_cast<std::size_t>(n));
  for (long d = 0; d <= 6; ++d) {
    std::fill(m.begin(), m.end(), -1);
    for (;;) {
      long sum = 0, sq = 0;
      for (long x : m) {
        sum += x;
        sq += x * x;
      }
      if (d * d - sq == -1 && -3 * d + sum == -1) {
        std::vector<Rational> mr(m.begin(), m.end());
        out.insert(DivisorClass(Rational(d), mr));
      }
      std::size_t i = 0;
      while (i < m.size() && m[i] == d) m[i++] = -1;
      if (i == m.size()) break;
      ++m[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("reflections") {
  const DivisorClass conic_line = DivisorClass::from_ints({1, 1, 1, 0});
  CHECK(apply(Reflection(3, 3), conic_line) == DivisorClass::basis(3, 3));
  CHECK(apply(Reflection(1, 2), DivisorClass::basis(2, 1)) == DivisorClass::basis(2, 2));
  CHECK(apply(Reflection(3, 3), DivisorClass::basis(3, 0)) == DivisorClass::from_ints({2, 1, 1, 1}));
  CHECK(Reflection(4, 4).is_cremona());
  CHECK_FALSE(Reflection(2, 4).is_cremona());
  CHECK_THROWS_AS(Reflection(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Reflection(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Reflection(5, 4), std::invalid_argument);
  try {
    Reflection(2, 2);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("Cremona reflection undefined") != std::string::npos);
  }
  CHECK(simple_reflections(2).size() == 1);
  CHECK(simple_reflections(5).size() == 5);

  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const DivisorClass a = random_integral_class(rng, n, 8);
    const DivisorClass b = random_integral_class(rng, n, 8);
    for (const Reflection& s : simple_reflections(n)) {
      CHECK(apply(s, apply(s, a)) == a);
      CHECK(intersect(apply(s, a), apply(s, b)) == intersect(a, b));
      CHECK(apply(s, canonical_class(n)) == canonical_class(n));
    }
  }
}

TEST_CASE("orbits") {
  const OrbitResult e8 = orbit(DivisorClass::basis(8, 8));
  CHECK(e8.elements.size() == 240);
  CHECK(orbit(DivisorClass::basis(1, 1)).elements.size() == 1);

  const OrbitResult fibres = orbit(DivisorClass::from_ints({1, 1, 0, 0, 0, 0}));
  CHECK(std::binary_search(fibres.elements.begin(), fibres.elements.end(), DivisorClass::from_ints({2, 1, 1, 1, 1, 0})));
  for (const DivisorClass& c : fibres.elements) {
    CHECK(self_intersection(c) == 0);
    CHECK(expected_genus(c) == 0);
  }

  SECTION("words reproduce their elements") {
    for (const auto& [element, word] : e8.words) {
      DivisorClass c = e8.seed;
      for (int idx : word) c = apply(Reflection(idx, 8), c);
      CHECK(c == element);
    }
  }
  SECTION("n = 9 orbits are infinite") {
    try {
      orbit(DivisorClass::basis(9, 9), 500);
      FAIL("bounded orbit on X_9");
    } catch (const MathError& e) {
      CHECK(e.kind() == MathErrorKind::kOrbitBoundExceeded);
      CHECK(std::string(e.what()).find("500") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(orbit(DivisorClass(Rational(1), {make_rational(1, 2)})), std::invalid_argument);
}

TEST_CASE("exceptional classes agree with an unpruned scan") {
  static const std::size_t counts[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int n = 1; n <= 8; ++n) {
    const auto classes = exceptional_classes(n);
    CHECK(classes.size() == counts[n]);
    CHECK(std::is_sorted(classes.begin(), classes.end()));
    CHECK(exceptional_classes_diophantine(n) == classes);
    if (n <= 6) {
      const std::set<DivisorClass> scanned = scan_exceptional(n);
      CHECK(std::set<DivisorClass>(classes.begin(), classes.end()) == scanned);
    }
    for (const CurveClass& c : classes) {
      CHECK(self_intersection(c) == -1);
      CHECK(intersect(c, canonical_class(n)) == -1);
      CHECK(expected_genus(c) == 0);
    }
  }
  CHECK(degree_histogram(exceptional_classes(6)) == std::map<long, std::size_t>{{0, 6}, {1, 15}, {2, 6}});
  CHECK(degree_histogram(exceptional_classes(8)) ==
        std::map<long, std::size_t>{{0, 8}, {1, 28}, {2, 56}, {3, 56}, {4, 56}, {5, 28}, {6, 8}});
  CHECK(exceptional_classes_diophantine(1).size() == 1);
  CHECK(exceptional_classes_diophantine(7).size() == 56);
  CHECK_THROWS_AS(exceptional_classes(9), std::invalid_argument);
  CHECK_THROWS_AS(exceptional_classes(0), std::invalid_argument);
}

TEST_CASE("Cremona reduction") {
  const CremonaReduction r = cremona_reduce(DivisorClass::from_ints({1, 1, 1, 0}));
  CHECK(r.reduced == DivisorClass::basis(3, 3));
  REQUIRE(r.word.size() == 1);
  CHECK(r.word.front().index() == 3);

  const CremonaReduction fixed = cremona_reduce(DivisorClass::basis(3, 3));
  CHECK(fixed.reduced == DivisorClass::basis(3, 3));
  CHECK(fixed.word.empty());

  const CremonaReduction sextic = cremona_reduce(DivisorClass::from_ints({6, 3, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(sextic.reduced == DivisorClass::basis(8, 8));

  for (int n = 3; n <= 8; ++n) {
    for (const CurveClass& c : exceptional_classes(n)) {
      const CremonaReduction red = cremona_reduce(c);
      CHECK(red.reduced == DivisorClass::basis(n, n));
      DivisorClass replay = c;
      for (const Reflection& s : red.word) replay = apply(s, replay);
      CHECK(replay == red.reduced);
    }
  }
  CHECK_THROWS_AS(cremona_reduce(DivisorClass::basis(2, 1)), std::invalid_argument);
}
