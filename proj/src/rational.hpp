#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and reduced
// rationals, backed by GMP. Canonical form everywhere: gcd(|num|, den) = 1,
// den >= 1. All comparisons are exact integer cross-multiplications.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "error.hpp"

namespace zm {

using Int = mpz_class;
using Rational = mpq_class;

// Reduced fraction n/d with positive denominator. d == 0 is invalid input.
inline Rational make_rational(const Int& n, const Int& d) {
  if (d == 0) fail(errc::invalid_argument, "rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long n, long d) { return make_rational(Int(n), Int(d)); }

// "p/q" with canonical reduced form, plain "p" when q == 1.
inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

// Accepts "p", "p/q", optional sign, surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) fail(errc::parse_error, "empty rational literal");
  std::string s(text.substr(b, e - b + 1));
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "malformed rational literal: '" + s + "'");
  }
}

} // namespace zm
