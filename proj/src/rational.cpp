#include "lie4/rational.hpp"

#include <cctype>

namespace lie4 {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Integer d(den);
  if (d == 0) return std::nullopt;
  Rational r(Integer(num), d);
  if (negative) r = -r;
  return r;
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Rational result(1);
  for (unsigned i = 0; i < k; ++i) {
    result *= Integer(n - i);
    result /= Integer(i + 1);
  }
  return result;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool is_nonneg_integer(const Rational& r) {
  return is_integer(r) && numerator(r) >= 0;
}

}  // namespace lie4
