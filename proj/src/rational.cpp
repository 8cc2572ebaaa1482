#include "okb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace okb {

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational '" + std::string(token) + "'");
  };
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  if (!is_integer_token(num, true)) throw bad();
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(Integer(num_str));

  const std::string_view den = token.substr(slash + 1);
  if (!is_integer_token(den, false)) throw bad();
  const Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  return Rational(Integer(num_str), d);
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace okb
