#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace lie4 {

// All scalar arithmetic in this project is exact. Coefficients stay small in
// the end results but intermediate binomial expansions overflow 64 bits, so
// numerators and denominators are arbitrary-precision integers.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with an optional leading minus sign. Anything else,
// including floating-point notation, yields nullopt.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Exact binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

bool is_integer(const Rational& r);
bool is_nonneg_integer(const Rational& r);

}  // namespace lie4
