#include "okb/verify.hpp"

#include "okb/cone_lp.hpp"
#include "okb/cones.hpp"
#include "okb/error.hpp"
#include "okb/linalg.hpp"
#include "okb/okounkov.hpp"
#include "okb/weyl.hpp"
#include "okb/zariski.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace okb {

Rational random_rational(Rng& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  const long p = num(rng);
  const long q = den(rng);
  return make_rational(p, q);
}

DivisorClass random_integral_class(Rng& rng, int n, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  RationalVector v(n + 1);
  for (int i = 0; i <= n; ++i) v(i) = Rational(entry(rng));
  return DivisorClass(v);
}

DivisorClass random_pseudoeffective_class(Rng& rng, int n) {
  const std::vector<CurveClass>& gens = ConeModel::get(n).generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<long> num(1, 12);
  std::uniform_int_distribution<long> den(1, 6);
  DivisorClass out(n);
  for (int k = count(rng); k > 0; --k) {
    DivisorClass g = gens[pick(rng)];
    const long p = num(rng);
    g *= make_rational(p, den(rng));
    out += g;
  }
  return out;
}

DivisorClass random_big_class(Rng& rng, int n) {
  DivisorClass out = random_pseudoeffective_class(rng, n);
  std::uniform_int_distribution<long> num(1, 6);
  std::uniform_int_distribution<long> den(1, 12);
  DivisorClass ample = -canonical_class(n);
  const long p = num(rng);
  ample *= make_rational(p, den(rng));
  out += ample;
  return out;
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = {"exactlin", "lattice", "weyl", "cones", "zariski", "okounkov"};
  return names;
}

namespace {

class Collector {
 public:
  explicit Collector(std::vector<CheckResult>& out) : out_(out) {}

  void expect(const std::string& id, bool ok, std::string expected = "true", std::string actual = "") {
    out_.push_back({id, ok, std::move(expected), actual.empty() ? (ok ? "true" : "false") : std::move(actual)});
  }

  void expect_eq(const std::string& id, const std::string& expected, const std::string& actual) {
    out_.push_back({id, expected == actual, expected, actual});
  }

  // Runs a group of checks; an exception escaping it is itself a failure.
  void guarded(const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out_.push_back({id, false, "no exception", e.what()});
    }
  }

 private:
  std::vector<CheckResult>& out_;
};

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string str(const RationalPolygon& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RationalPoint& v = p.vertices()[i];
    s += (i ? " (" : "(") + to_string(v.x) + "," + to_string(v.y) + ")";
  }
  return s + "]";
}

RationalMatrix random_matrix(Rng& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng, 9, 4);
  return m;
}

void suite_exactlin(Collector& c, Rng& rng) {
  c.guarded("exactlin.solve", [&] {
    int ok = 0, total = 0;
    for (int trial = 0; trial < 30; ++trial) {
      const RationalMatrix a = random_matrix(rng, 4, 4);
      const RationalMatrix b = random_matrix(rng, 4, 2);
      if (determinant(a) == 0) continue;
      ++total;
      if (a * solve_linear(a, b) == b) ++ok;
    }
    c.expect_eq("exactlin.solve.substitution", str(total), str(ok));
  });
  c.guarded("exactlin.negdef", [&] {
    int agree = 0;
    const int trials = 40;
    for (int trial = 0; trial < trials; ++trial) {
      const RationalMatrix r = random_matrix(rng, 3, 3);
      const RationalMatrix g = -(r * r.transpose()) + random_matrix(rng, 1, 1)(0, 0) * RationalMatrix::Identity(3, 3);
      bool minors = true;
      for (int k = 1; k <= 3; ++k) {
        const Rational det = determinant(RationalMatrix(g.topLeftCorner(k, k)));
        if ((k % 2 == 1 && det >= 0) || (k % 2 == 0 && det <= 0)) minors = false;
      }
      if (minors == is_negative_definite(g)) ++agree;
    }
    c.expect_eq("exactlin.negdef.minors", str(trials), str(agree));
  });
  c.guarded("exactlin.lp", [&] {
    int agree = 0;
    const int trials = 40;
    for (int trial = 0; trial < trials; ++trial) {
      const RationalMatrix gens = random_matrix(rng, 3, 5);
      const RationalVector x = random_matrix(rng, 3, 1).col(0);
      const auto comb = cone_combination(x, gens);
      bool ok = true;
      if (comb) {
        ok = (gens * *comb == x) && (comb->array() >= Rational(0)).all();
      } else {
        // Farkas: some y with y.g >= 0 for all generators and y.x < 0.
        LinearProgram dual;
        const int m = 3, k = 5;
        // y = u - v, slack s >= 0: g_j.(u - v) - s_j = 0, x.(u - v) + w = -1.
        dual.a = RationalMatrix::Zero(k + 1, 2 * m + k + 1);
        dual.b = RationalVector::Zero(k + 1);
        for (int j = 0; j < k; ++j) {
          for (int i = 0; i < m; ++i) {
            dual.a(j, i) = gens(i, j);
            dual.a(j, m + i) = -gens(i, j);
          }
          dual.a(j, 2 * m + j) = Rational(-1);
        }
        for (int i = 0; i < m; ++i) {
          dual.a(k, i) = x(i);
          dual.a(k, m + i) = -x(i);
        }
        dual.a(k, 2 * m + k) = Rational(1);
        dual.b(k) = Rational(-1);
        dual.c = RationalVector::Zero(2 * m + k + 1);
        ok = solve_lp(dual).status == LpStatus::kOptimal;
      }
      if (ok) ++agree;
    }
    c.expect_eq("exactlin.lp.certificate", str(trials), str(agree));
  });
  c.guarded("exactlin.exit", [&] {
    // n = 1 cone {e1, e0 - e1}, start e0 - e1/3, direction e0.
    const ConeModel& cone = ConeModel::get(1);
    const RationalVector start = DivisorClass(Rational(1), {make_rational(1, 3)}).coeffs();
    const RationalVector dir = DivisorClass::basis(1, 0).coeffs();
    const Rational t = cone_exit_threshold(start, dir, cone.generator_matrix());
    c.expect_eq("exactlin.exit.n1", "2/3", to_string(t));
    c.expect("exactlin.exit.consistent", cone_member(RationalVector(start - (t - make_rational(1, 100)) * dir),
                                                     cone.generator_matrix()) &&
                                             !cone_member(RationalVector(start - (t + make_rational(1, 100)) * dir),
                                                          cone.generator_matrix()));
  });
}

void suite_lattice(Collector& c, Rng& rng) {
  c.guarded("lattice", [&] {
    for (int n = 0; n <= kMaxPoints; ++n) {
      const DivisorClass k = canonical_class(n);
      c.expect_eq("lattice.K2.n" + str(n), str(9 - n), to_string(self_intersection(k)));
      for (int i = 1; i <= n; ++i) {
        const DivisorClass e = DivisorClass::basis(n, i);
        if (self_intersection(e) != -1 || intersect(k, e) != -1) c.expect("lattice.exceptional.e" + str(i), false);
      }
    }
    int ok = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
      const int n = static_cast<int>(rng() % (kMaxPoints + 1));
      const DivisorClass a = random_integral_class(rng, n, 7);
      const DivisorClass b = random_integral_class(rng, n, 7);
      const Rational s = random_rational(rng, 5, 3);
      DivisorClass sa = a;
      sa *= s;
      DivisorClass ab = a;
      ab += b;
      const bool sym = intersect(a, b) == intersect(b, a);
      const bool lin = intersect(ab, b) == intersect(a, b) + intersect(b, b) && intersect(sa, b) == s * intersect(a, b);
      const bool round = parse_divisor_class([&] {
                           std::string t = to_string(a.d());
                           for (int i = 1; i <= n; ++i) t += "," + to_string(a.m(i));
                           return t;
                         }()) == a;
      if (sym && lin && round) ++ok;
    }
    c.expect_eq("lattice.bilinear_roundtrip", str(trials), str(ok));
  });
}

void suite_weyl(Collector& c, Rng& rng) {
  static const std::size_t counts[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  c.guarded("weyl", [&] {
    for (int n = 1; n <= 8; ++n) {
      const auto classes = exceptional_classes(n);
      c.expect_eq("weyl.count.n" + str(n), str(counts[n]), str(classes.size()));
      bool all_exceptional = true;
      for (const CurveClass& e : classes) all_exceptional = all_exceptional && e.is_exceptional();
      c.expect("weyl.exceptional.n" + str(n), all_exceptional);
      if (n >= 3) {
        c.expect("weyl.oracle.n" + str(n), exceptional_classes_diophantine(n) == classes);
        const std::set<CurveClass> set(classes.begin(), classes.end());
        bool permutes = true;
        for (const Reflection& s : simple_reflections(n)) {
          std::set<CurveClass> image;
          for (const CurveClass& e : classes) image.insert(CurveClass(apply(s, e)));
          permutes = permutes && image == set;
        }
        c.expect("weyl.permutes.n" + str(n), permutes);
      }
    }
    std::string hist;
    for (const auto& [deg, count] : degree_histogram(exceptional_classes(8))) hist += str(count) + " ";
    c.expect_eq("weyl.histogram.n8", "8 28 56 56 56 28 8 ", hist);
    int ok = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 7);
      const DivisorClass a = random_integral_class(rng, n, 9);
      const DivisorClass b = random_integral_class(rng, n, 9);
      bool good = true;
      for (const Reflection& s : simple_reflections(n)) {
        good = good && intersect(apply(s, a), apply(s, b)) == intersect(a, b) &&
               apply(s, canonical_class(n)) == canonical_class(n) && apply(s, apply(s, a)) == a;
      }
      if (good) ++ok;
    }
    c.expect_eq("weyl.form_preserved", str(trials), str(ok));
    const CremonaReduction r = cremona_reduce(DivisorClass::from_ints({6, 3, 2, 2, 2, 2, 2, 2, 2}));
    c.expect_eq("weyl.cremona.sextic", "(0; 0,0,0,0,0,0,0,-1)", to_string(r.reduced));
  });
}

void suite_cones(Collector& c, Rng& rng) {
  static const char* table[] = {"", "1", "1/2", "1/2", "1/2", "2/5", "2/5", "3/8", "6/17", "1/3"};
  c.guarded("cones", [&] {
    for (int n = 1; n <= 9; ++n) c.expect_eq("cones.seshadri.n" + str(n), table[n], to_string(seshadri(n)));
    for (int n = 1; n <= 8; ++n) {
      const Rational eps = seshadri(n);
      const DivisorClass at = DivisorClass::uniform(n, Rational(1), eps);
      const DivisorClass past = DivisorClass::uniform(n, Rational(1), eps + make_rational(1, 1000));
      c.expect("cones.seshadri_nef.n" + str(n), is_nef(at) && !is_ample(at) && !is_nef(past));
    }
    int ok = 0;
    const int trials = 60;
    for (int trial = 0; trial < trials; ++trial) {
      const int n = static_cast<int>(rng() % 9);
      const DivisorClass d = random_integral_class(rng, n, 5);
      const bool chain = (!is_ample(d) || is_nef(d)) && (!is_nef(d) || is_pseudoeffective(d)) &&
                         (!is_ample(d) || is_big(d)) && (!is_big(d) || is_pseudoeffective(d));
      if (chain) ++ok;
    }
    c.expect_eq("cones.implications", str(trials), str(ok));
    c.expect_eq("cones.mu.n2", "2/3",
                to_string(mu_threshold(DivisorClass::uniform(2, Rational(1), make_rational(1, 3)),
                                       DivisorClass::basis(2, 0))));
    c.expect_eq("cones.mu.n8", "1/17",
                to_string(mu_threshold(DivisorClass::uniform(8, Rational(1), make_rational(1, 3)),
                                       DivisorClass::basis(8, 0))));
  });
}

std::string zariski_failure(const DivisorClass& d, const ZariskiDecomposition& z, Rng& rng) {
  if (!is_nef(z.positive)) return "positive part not nef";
  for (const NegativeComponent& nc : z.negative) {
    if (intersect(z.positive, nc.curve) != 0) return "not orthogonal";
    if (nc.coefficient <= 0) return "nonpositive coefficient";
  }
  if (!z.negative.empty() && !is_negative_definite(z.gram)) return "gram not negative definite";
  DivisorClass sum = z.positive;
  sum += z.negative_part();
  if (!(sum == d)) return "parts do not sum";
  std::vector<CurveClass> shuffled = ConeModel::get(d.n()).negative_curves();
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const ZariskiDecomposition again = zariski_decompose(d, shuffled);
  if (!(again.positive == z.positive) || again.negative != z.negative) return "order dependent";
  return "";
}

void suite_zariski(Collector& c, Rng& rng) {
  for (int n = 0; n <= 8; ++n) {
    c.guarded("zariski.n" + str(n), [&] {
      int ok = 0;
      const int trials = 15;
      std::string first;
      for (int trial = 0; trial < trials; ++trial) {
        const DivisorClass d = random_pseudoeffective_class(rng, n);
        const std::string why = zariski_failure(d, zariski_decompose(d), rng);
        if (why.empty()) ++ok;
        else if (first.empty()) first = to_string(d) + ": " + why;
      }
      c.expect("zariski.invariants.n" + str(n), ok == trials, str(trials), first.empty() ? str(ok) : first);
    });
  }
  c.guarded("zariski.examples", [&] {
    const ZariskiDecomposition z = zariski_decompose(DivisorClass(make_rational(1, 2), {make_rational(1, 3), make_rational(1, 3)}));
    c.expect_eq("zariski.example.n2", "(1/3; 1/6,1/6)", to_string(z.positive));
  });
}

void suite_okounkov(Collector& c, Rng& rng) {
  static const char* delta[] = {"1", "2/3", "2/3", "1/2", "1/3", "1/3", "1/5", "1/8", "1/17"};
  static const char* eps_prime[] = {"", "2/3", "1/3", "1/3", "1/3", "1/6", "1/6", "1/9", "1/18"};
  for (int n = 0; n <= 8; ++n) {
    c.guarded("okounkov.table.n" + str(n), [&] {
      const RationalPolygon body = okounkov_body(DivisorClass::uniform(n, Rational(1), make_rational(1, 3)));
      std::vector<RationalPoint> pts = {{Rational(0), Rational(0)}, {parse_rational(delta[n]), Rational(0)},
                                        {Rational(0), Rational(1)}};
      if (n > 0) pts.push_back({parse_rational(eps_prime[n]), 1 - parse_rational(eps_prime[n])});
      const RationalPolygon expected = RationalPolygon::hull(pts);
      c.expect_eq("okounkov.table.n" + str(n), str(expected), str(body));
    });
  }
  for (int n = 0; n <= 8; ++n) {
    c.guarded("okounkov.area.n" + str(n), [&] {
      int ok = 0;
      const int trials = 6;
      for (int trial = 0; trial < trials; ++trial) {
        const DivisorClass d = random_big_class(rng, n);
        if (okounkov_body(d).twice_area() == self_intersection(zariski_decompose(d).positive)) ++ok;
      }
      c.expect_eq("okounkov.area.n" + str(n), str(trials), str(ok));
    });
  }
  for (int n = 1; n <= 8; ++n) {
    c.guarded("okounkov.rescale.n" + str(n), [&] {
      const Rational top = seshadri(n);
      int ok = 0;
      const int trials = 3;
      for (int trial = 0; trial < trials; ++trial) {
        const long q = 2 + static_cast<long>(rng() % 20);
        Rational a = top * make_rational(1 + static_cast<long>(rng() % q), q + 1);
        Rational b = top * make_rational(1 + static_cast<long>(rng() % q), q + 1);
        if (a > b) std::swap(a, b);
        const RationalPolygon lhs = rescale(okounkov_body(DivisorClass::uniform(n, Rational(1), a)), b / a);
        if (lhs == okounkov_body(DivisorClass::uniform(n, Rational(1), b))) ++ok;
      }
      c.expect_eq("okounkov.rescale.n" + str(n), str(trials), str(ok));
    });
  }
  c.guarded("okounkov.dissection", [&] {
    const Dissection d = dissection();
    c.expect_eq("okounkov.dissection.size", "10", str(d.bodies.size()));
    bool nested = true;
    for (std::size_t i = 1; i < d.bodies.size(); ++i) nested = nested && d.bodies[i - 1].body.contains(d.bodies[i].body);
    c.expect("okounkov.dissection.nested", nested);
  });
  c.guarded("okounkov.nagata", [&] {
    const QuadraticPolygon strip = nagata_strip(10, Rational(4), Rational(1));
    bool found = false;
    for (const QuadraticPoint& p : strip.vertices()) {
      if (p.y == 0 && p.x != 0) found = (QuadraticNumber(4) - p.x) * (QuadraticNumber(4) - p.x) == QuadraticNumber(10);
    }
    c.expect("okounkov.nagata.n10", found && strip.conjectural());
  });
}

}  // namespace

VerificationReport verify(std::string_view suite, std::uint64_t seed) {
  using Runner = void (*)(Collector&, Rng&);
  static const std::vector<std::pair<std::string, Runner>> runners = {
      {"exactlin", suite_exactlin}, {"lattice", suite_lattice},   {"weyl", suite_weyl},
      {"cones", suite_cones},       {"zariski", suite_zariski},   {"okounkov", suite_okounkov}};
  const bool all = suite == "all";
  if (!all && std::none_of(runners.begin(), runners.end(), [&](const auto& r) { return r.first == suite; })) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  VerificationReport report{std::string(suite), seed, {}};
  Collector collector(report.checks);
  for (std::size_t i = 0; i < runners.size(); ++i) {
    const auto& [name, run] = runners[i];
    if (!all && name != suite) continue;
    // Each suite draws from its own stream so that running one alone
    // reproduces its part of the full report.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    run(collector, rng);
  }
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.passed) out << "  expected: " << c.expected << "  actual: " << c.actual;
    out << "\n";
  }
  out << "suite " << report.suite << " seed " << report.seed << ": " << report.checks.size() - report.failures()
      << "/" << report.checks.size() << " passed\n";
  return out.str();
}

}  // namespace okb
