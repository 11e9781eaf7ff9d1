#include "real.hpp"

#include <algorithm>

namespace zm {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, std::max(prec, kMinPrec));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.prec());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.prec());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.prec());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(std::uint64_t v, mpfr_prec_t prec) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  Real r(prec);
  mpfr_set_ui(r.v_, static_cast<unsigned long>(v), MPFR_RNDN);
  return r;
}

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::of(const Int& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    fail(errc::parse_error, "malformed real literal: '" + s + "'");
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::euler_gamma(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }
} // namespace

Real Real::operator+(const Real& o) const {
  Real r(join(*this, o));
  mpfr_add(r.raw(), v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(join(*this, o));
  mpfr_sub(r.raw(), v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(join(*this, o));
  mpfr_mul(r.raw(), v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  Real r(join(*this, o));
  mpfr_div(r.raw(), v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r(prec());
  mpfr_sqrt(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real Real::log() const {
  Real r(prec());
  mpfr_log(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real Real::exp() const {
  Real r(prec());
  mpfr_exp(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real Real::pow(long e) const {
  Real r(prec());
  mpfr_pow_si(r.raw(), v_, e, MPFR_RNDN);
  return r;
}

Real Real::ldexp(long e) const {
  Real r(prec());
  mpfr_mul_2si(r.raw(), v_, e, MPFR_RNDN);
  return r;
}

Real Real::gamma() const {
  Real r(prec());
  mpfr_gamma(r.raw(), v_, MPFR_RNDN);
  return r;
}

Real Real::round_away() const {
  Real r(prec());
  mpfr_round(r.raw(), v_);
  return r;
}

Int Real::to_int_round() const {
  Real r = round_away();
  Int z;
  mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
  return z;
}

std::string Real::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string Real::str_fixed(int places) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", places, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

} // namespace zm
