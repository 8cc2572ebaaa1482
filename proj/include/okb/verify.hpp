// Seeded self-consistency suites over every module, plus the random class
// samplers they share with the test programs.
#pragma once

#include "okb/lattice.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

using Rng = std::mt19937_64;

/// Uniform rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, long num_bound, long den_bound);

/// Integral class with entries in [-bound, bound].
DivisorClass random_integral_class(Rng& rng, int n, long bound);

/// Nonnegative rational combination of one to four cone generators.
DivisorClass random_pseudoeffective_class(Rng& rng, int n);

/// Pseudo-effective class plus a positive multiple of an ample class.
DivisorClass random_big_class(Rng& rng, int n);

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  int exit_code() const { return passed() ? 0 : 1; }
};

const std::vector<std::string>& verification_suites();

/// Runs "exactlin", "lattice", "weyl", "cones", "zariski", "okounkov" or
/// "all". Unknown names throw std::invalid_argument.
VerificationReport verify(std::string_view suite, std::uint64_t seed);

std::string to_text(const VerificationReport& report);

}  // namespace okb
