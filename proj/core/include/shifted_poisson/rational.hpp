#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace shifted_poisson {

/// Exact arbitrary-precision rational number (GMP-backed, always canonicalized).
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p" or "p/q" with optional leading '-' on p. Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_to_string(const Rational& value);

/// |value|, for residual-magnitude ranking.
inline Rational rational_abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  auto check_integer = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t start = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start == part.size()) return false;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!check_integer(text, true))
        throw std::invalid_argument("malformed rational literal: " + text);
      return Rational(boost::multiprecision::mpz_int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!check_integer(num, true) || !check_integer(den, false))
      throw std::invalid_argument("malformed rational literal: " + text);
    boost::multiprecision::mpz_int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

inline std::string rational_to_string(const Rational& value) {
  std::string n = numerator(value).str();
  if (denominator(value) == 1) return n;
  return n + "/" + denominator(value).str();
}

}  // namespace shifted_poisson
