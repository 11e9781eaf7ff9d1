#pragma once

// Gaussian-integer arithmetic: norm, canonical first-quadrant representatives,
// rational-prime splitting, factorization, divisor enumeration and the
// k-dimensional divisor function, plus an independent brute-force counter.
//
// Canonical representative of a nonzero element: the unique associate with
// re >= 1 and im >= 0 (argument in [0, pi/2)).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace zm::gaussian {

struct GaussianInt {
  Int re, im;
  bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
};

GaussianInt parse_gaussian(std::string_view text);  // "a+bi", "a-bi", "a", "bi", "i", ...
std::string to_string(const GaussianInt& z);

Int norm(const GaussianInt& z);
GaussianInt conj(const GaussianInt& z);
GaussianInt mul(const GaussianInt& x, const GaussianInt& y);
bool is_zero(const GaussianInt& z);
bool is_unit(const GaussianInt& z);

// i^pow for pow in 0..3.
GaussianInt unit_value(int pow);

// Unique associate with re >= 1, im >= 0. Zero input is invalid.
GaussianInt canonical(const GaussianInt& z);
// True when `d` divides `z` exactly in Z[i].
bool divides(const GaussianInt& d, const GaussianInt& z);
// Exact quotient z/d; the caller guarantees divisibility.
GaussianInt div_exact(const GaussianInt& z, const GaussianInt& d);

enum class SplitClass { ramified, inert, split };

struct PrimeSplit {
  SplitClass kind;
  // ramified: first = 1+i. split: two non-associated canonical primes,
  // first = a+bi with a > b >= 1, second = b+ai. inert: none.
  GaussianInt first, second;
};

// Splits a rational prime p in Z[i]. Composite input is invalid.
PrimeSplit split_prime(const Int& p);

struct FactorEntry {
  GaussianInt prime;  // canonical
  unsigned exp;
};

struct Factorization {
  int unit_pow = 0;  // unit = i^unit_pow
  std::vector<FactorEntry> factors;  // pairwise non-associated, sorted by (norm, re)
};

// Canonical prime decomposition via factoring the norm over Z. Requires
// z != 0 and norm(z) < 2^128.
Factorization factor(const GaussianInt& z);
GaussianInt reconstruct(const Factorization& f);

// Number of ordered k-tuples of canonical divisors whose product is
// associated to z: product of binomial(e+k-1, k-1) over the factorization.
Int tau_k(const GaussianInt& z, unsigned k);

// All canonical divisors, sorted by (norm, re). Requires norm(z) <= 10^8.
std::vector<GaussianInt> divisors(const GaussianInt& z);

// Independent oracle: counts ordered k-tuples by exhaustive enumeration over
// trial-division divisors, no factorization involved. Requires
// norm(z) <= 10^4 and k <= 3.
Int tau_k_bruteforce(const GaussianInt& z, unsigned k);

bool is_gaussian_prime(const GaussianInt& z);

// Integer helpers shared with the sieve layer.
bool is_prime_u64(std::uint64_t n);
bool is_prime(const Int& n);
// Ascending (prime, exponent) factorization; trial division to 10^4, then
// Miller-Rabin plus Pollard-Brent rho. Fails with budget_exceeded when rho
// stalls (beyond the 2^128 desk-scale contract).
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

std::string to_json(const Factorization& f);

} // namespace zm::gaussian
