// Command-line front end. Exit codes: 0 success, 1 mathematical failure
// (MathError), 2 usage error.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace okb {

enum class OutputFormat { kText, kJson, kSvg, kTikz };

enum class ConeTest { kNef, kBig, kAmple, kPsef };

struct CommandRequest {
  std::string subcommand;
  std::optional<long> n;
  std::optional<std::string> divisor;
  std::optional<std::string> d;
  std::optional<std::string> m;
  std::string eps = "1/3";
  std::optional<OutputFormat> format;
  double scale = 10.2;
  std::uint64_t seed = 0;
  std::string suite = "all";
  std::optional<ConeTest> test;
  bool histogram = false;
  bool oracle = false;
  std::optional<std::string> output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

/// Throws std::invalid_argument naming the offending token; `--help`
/// surfaces as a request with subcommand "help" carrying the help text
/// in `output`.
CommandRequest parse_command_line(const std::vector<std::string>& args);

int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_command_line followed by run, with errors mapped to exit codes.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace okb
