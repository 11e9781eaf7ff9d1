#pragma once

// Main-term machinery for S_k(x): Laurent data of zeta at s = 1 (Stieltjes
// constants), Taylor data of the Dirichlet beta function at s = 1, truncated
// power-series arithmetic, residue extraction for the polynomials P_k, and
// the predictions x * P_k(ln x).
//
// The residue of Z^k(s) x^s / s at s = 1 equals, with u = s - 1 and t = ln x,
// the coefficient of u^{k-1} in (u zeta(1+u))^k * beta(1+u)^k * e^{ut}/(1+u),
// scaled by x. deg P_k = k - 1.

#include <cstdint>
#include <string>
#include <vector>

#include "real.hpp"

namespace zm::asymptotics {

inline constexpr mpfr_prec_t kConstPrec = 256;

// Fixed-order truncated power series with Real coefficients.
class Series {
public:
  Series(unsigned order, mpfr_prec_t prec);

  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  Real& operator[](unsigned i) { return c_[i]; }
  const Real& operator[](unsigned i) const { return c_[i]; }

  Series mul(const Series& o) const;  // truncated at min(order, o.order)
  Series add(const Series& o) const;

private:
  std::vector<Real> c_;
  mpfr_prec_t prec_;
};

// beta^(j)(1) = sum_{n>=0} (-1)^n (-ln(2n+1))^j / (2n+1), j <= 5, computed by
// Cohen-Rodriguez Villegas-Zagier alternating-series acceleration. `terms`
// = 0 picks enough terms for `prec` (64 at the 160-bit default); an explicit
// term count that cannot reach `prec` is an error.
Real beta_taylor(unsigned j, mpfr_prec_t prec = kDefaultPrec, unsigned terms = 0);

// u * zeta(1+u) = 1 + sum_{m>=0} (-1)^m gamma_m u^{m+1} / m!, order <= 6.
Series zeta_laurent(unsigned order, mpfr_prec_t prec = kDefaultPrec);

// Embedded high-precision literal gamma_m, m in 1..4 (gamma_0 is computed).
Real stieltjes_constant(unsigned m, mpfr_prec_t prec = kDefaultPrec);

// Coefficients of P_k ordered by power of ln x (index 0 = constant term),
// k in 2..6.
std::vector<Real> main_term_coeffs(unsigned k, mpfr_prec_t prec = kDefaultPrec);

// x * P_k(ln x), x >= 2.
Real predict(unsigned k, std::uint64_t x, mpfr_prec_t prec = kDefaultPrec);

// Closed forms l1 = pi^2/16 and l2 = pi^2 (2 gamma - 1)/16 + pi beta'(1)/2.
std::pair<Real, Real> l1_l2(mpfr_prec_t prec = kDefaultPrec);

// Audit dump of every embedded and computed constant.
std::string constants_json(unsigned digits = 30, mpfr_prec_t prec = kConstPrec);

} // namespace zm::asymptotics
