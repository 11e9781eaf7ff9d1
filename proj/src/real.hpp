#pragma once

// Binary floating point with configurable mantissa precision (MPFR), RAII
// value type. Round-to-nearest everywhere. Binary operations evaluate at the
// larger operand precision.

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "rational.hpp"

namespace zm {

inline constexpr mpfr_prec_t kDefaultPrec = 160;
inline constexpr mpfr_prec_t kMinPrec = 64;

class Real {
public:
  explicit Real(mpfr_prec_t prec = kDefaultPrec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(long v, mpfr_prec_t prec = kDefaultPrec);
  static Real of(std::uint64_t v, mpfr_prec_t prec = kDefaultPrec);
  static Real of(double v, mpfr_prec_t prec = kDefaultPrec);
  static Real of(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
  static Real of(const Int& z, mpfr_prec_t prec = kDefaultPrec);
  // Decimal string, correctly rounded at `prec`.
  static Real parse(const std::string& s, mpfr_prec_t prec = kDefaultPrec);

  static Real pi(mpfr_prec_t prec);
  static Real euler_gamma(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  Real abs() const;
  Real sqrt() const;
  Real log() const;
  Real exp() const;
  Real pow(long e) const;
  Real ldexp(long e) const;  // *2^e, exact
  Real gamma() const;        // Euler Gamma function
  Real round_away() const;   // nearest integer, halves away from zero

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Int to_int_round() const;  // nearest integer, halves away from zero
  // Decimal with `digits` significant digits (default 15).
  std::string str(int digits = 15) const;
  // Fixed-point with `places` digits after the point.
  std::string str_fixed(int places) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

private:
  mpfr_t v_;
};

} // namespace zm
