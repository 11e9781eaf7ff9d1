#pragma once

// Exact computation of S_k(x) = sum of the k-dimensional Gaussian divisor
// function over canonical elements of norm <= x, by three independent routes:
//   - linear sieve for b_1 plus iterated Dirichlet convolution (any k),
//   - Dirichlet hyperbola split for k = 2 (O(x^{3/4}) time, O(sqrt x) space),
//   - brute-force enumeration over the lattice (k = 2, small x).
// b_k(n) is the sum of tau_k over canonical elements of norm exactly n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zm::summatory {

struct CoefficientArray {
  unsigned k = 1;
  std::uint64_t x = 0;
  std::vector<std::uint32_t> values;  // values[n] for 1 <= n <= x; [0] unused

  std::uint32_t at(std::uint64_t n) const { return values[n]; }
};

inline constexpr std::uint64_t kDefaultEntryCap = 1ull << 31;

// b_1 by linear sieve over smallest prime factors:
//   b1(2^e) = 1; b1(p^e) = e+1 for p = 1 (mod 4); b1(p^e) = [e even] otherwise.
CoefficientArray sieve_b1(std::uint64_t x, std::uint64_t entry_cap = kDefaultEntryCap);

// b_k from b_1 by k-1 Dirichlet convolutions, 64-bit accumulation with a
// capacity check on narrowing.
CoefficientArray convolve_power(const CoefficientArray& b1, unsigned k);

// Exact S_k(x) through the sieve/convolution route.
std::uint64_t S_k_direct(unsigned k, std::uint64_t x,
                         std::uint64_t entry_cap = kDefaultEntryCap);

// Number of lattice points a >= 1, b >= 0 with a^2 + b^2 <= y, i.e. the
// partial sum of b_1. Integer-only O(sqrt y).
std::uint64_t B1_count(std::uint64_t y);

std::uint64_t isqrt_u64(std::uint64_t n);

// S_2(x) = 2 * sum_{m <= sqrt x} b1(m) B1(x/m) - B1(floor sqrt x)^2.
// Threads partition the m-range; the result is bit-identical for any count.
std::uint64_t S2_hyperbola(std::uint64_t x, int threads = 1);

// Enumerates canonical elements of norm <= x and sums tau_2 through the
// factorization path. Requires x <= 10^5.
std::uint64_t S2_bruteforce(std::uint64_t x);

// tau(a+bi) for a = 1..15 (columns), b = 0..15 (rows): grid[b][a-1].
std::vector<std::vector<std::uint32_t>> table2();

enum class Method { automatic, sieve, hyperbola, brute };
Method parse_method(std::string_view s);

std::uint64_t S_k(unsigned k, std::uint64_t x, Method method = Method::automatic,
                  int threads = 1, std::uint64_t entry_cap = kDefaultEntryCap);

} // namespace zm::summatory
