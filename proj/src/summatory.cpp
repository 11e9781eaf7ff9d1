#include "summatory.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "error.hpp"
#include "gaussian.hpp"

namespace zm::summatory {

namespace {

std::uint32_t b1_prime_power(std::uint32_t p, unsigned e) {
  if (p == 2) return 1;
  if (p % 4 == 1) return e + 1;
  return (e % 2 == 0) ? 1 : 0;
}

} // namespace

CoefficientArray sieve_b1(std::uint64_t x, std::uint64_t entry_cap) {
  if (x < 1) fail(errc::invalid_argument, "sieve limit must be >= 1");
  if (x > entry_cap) fail(errc::budget_exceeded, "sieve memory budget exceeded");
  const std::uint32_t n = static_cast<std::uint32_t>(x);
  CoefficientArray out;
  out.k = 1;
  out.x = x;
  out.values.assign(n + 1, 0);
  std::vector<std::uint32_t> lp(n + 1, 0);   // smallest prime factor
  std::vector<std::uint32_t> ppw(n + 1, 0);  // lp^e part of i
  std::vector<std::uint32_t> primes;
  auto& b1 = out.values;
  b1[1] = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (lp[i] == 0) {
      lp[i] = i;
      ppw[i] = i;
      primes.push_back(i);
      b1[i] = b1_prime_power(i, 1);
    }
    for (std::uint32_t p : primes) {
      if (p > lp[i] || static_cast<std::uint64_t>(p) * i > n) break;
      std::uint32_t ip = p * i;
      lp[ip] = p;
      if (p == lp[i]) {
        ppw[ip] = ppw[i] * p;
        std::uint32_t rest = ip / ppw[ip];
        unsigned e = 1;
        for (std::uint32_t q = ppw[i]; q >= p; q /= p) ++e;
        b1[ip] = b1[rest] * b1_prime_power(p, e);
      } else {
        ppw[ip] = p;
        b1[ip] = b1[i] * b1_prime_power(p, 1);
      }
    }
  }
  return out;
}

CoefficientArray convolve_power(const CoefficientArray& b1, unsigned k) {
  if (k < 2) fail(errc::invalid_argument, "convolve_power requires k >= 2");
  if (b1.k != 1) fail(errc::invalid_argument, "convolve_power starts from a b_1 array");
  const std::uint64_t x = b1.x;
  CoefficientArray cur = b1;
  std::vector<std::uint64_t> acc(x + 1);
  for (unsigned step = 2; step <= k; ++step) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint64_t d = 1; d <= x; ++d) {
      const std::uint64_t v = cur.values[d];
      if (v == 0) continue;
      for (std::uint64_t m = d, q = 1; m <= x; m += d, ++q)
        acc[m] += v * b1.values[q];
    }
    for (std::uint64_t nn = 1; nn <= x; ++nn) {
      if (acc[nn] > std::numeric_limits<std::uint32_t>::max())
        fail(errc::capacity, "b_k value exceeds 32-bit storage");
      cur.values[nn] = static_cast<std::uint32_t>(acc[nn]);
    }
    cur.k = step;
  }
  return cur;
}

std::uint64_t S_k_direct(unsigned k, std::uint64_t x, std::uint64_t entry_cap) {
  CoefficientArray arr = sieve_b1(x, entry_cap);
  if (k >= 2) arr = convolve_power(arr, k);
  std::uint64_t s = 0;
  for (std::uint64_t n = 1; n <= x; ++n) s += arr.values[n];
  return s;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  int bits = 64 - std::countl_zero(n);
  std::uint64_t r = 1ull << (bits / 2 + 1);
  while (true) {
    std::uint64_t next = (r + n / r) / 2;
    if (next >= r) break;
    r = next;
  }
  return r;
}

std::uint64_t B1_count(std::uint64_t y) {
  if (y == 0) return 0;
  std::uint64_t count = 0;
  std::uint64_t r = isqrt_u64(y - 1);
  for (std::uint64_t a = 1; a * a <= y; ++a) {
    std::uint64_t t = y - a * a;
    while (r * r > t) --r;  // r = isqrt(t); monotone in a
    count += r + 1;
  }
  return count;
}

std::uint64_t S2_hyperbola(std::uint64_t x, int threads) {
  if (x < 1) fail(errc::invalid_argument, "S2 limit must be >= 1");
  const std::uint64_t r = isqrt_u64(x);
  CoefficientArray b1 = sieve_b1(r);
  std::uint64_t b1_partial = 0;
  for (std::uint64_t m = 1; m <= r; ++m) b1_partial += b1.values[m];

  const unsigned nthreads =
      std::max(1u, std::min<unsigned>(threads <= 0 ? 1 : threads, 64));
  std::vector<std::uint64_t> partial(nthreads, 0);
  auto work = [&](unsigned t) {
    std::uint64_t sum = 0;
    for (std::uint64_t m = 1 + t; m <= r; m += nthreads) {
      const std::uint64_t v = b1.values[m];
      if (v) sum += v * B1_count(x / m);
    }
    partial[t] = sum;
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (std::uint64_t p : partial) total += p;
  return 2 * total - b1_partial * b1_partial;
}

std::uint64_t S2_bruteforce(std::uint64_t x) {
  if (x < 1) fail(errc::invalid_argument, "S2 limit must be >= 1");
  if (x > 100000) fail(errc::budget_exceeded, "brute force limited to x <= 10^5");
  std::uint64_t total = 0;
  for (std::uint64_t a = 1; a * a <= x; ++a) {
    for (std::uint64_t b = 0; a * a + b * b <= x; ++b) {
      gaussian::GaussianInt z{Int(static_cast<unsigned long>(a)),
                              Int(static_cast<unsigned long>(b))};
      total += gaussian::tau_k(z, 2).get_ui();
    }
  }
  return total;
}

std::vector<std::vector<std::uint32_t>> table2() {
  std::vector<std::vector<std::uint32_t>> grid(16, std::vector<std::uint32_t>(15, 0));
  for (int b = 0; b <= 15; ++b)
    for (int a = 1; a <= 15; ++a) {
      gaussian::GaussianInt z{Int(a), Int(b)};
      grid[b][a - 1] = static_cast<std::uint32_t>(gaussian::tau_k(z, 2).get_ui());
    }
  return grid;
}

Method parse_method(std::string_view s) {
  if (s == "auto") return Method::automatic;
  if (s == "sieve") return Method::sieve;
  if (s == "hyperbola") return Method::hyperbola;
  if (s == "brute") return Method::brute;
  fail(errc::parse_error, "unknown method '" + std::string(s) + "'");
}

std::uint64_t S_k(unsigned k, std::uint64_t x, Method method, int threads,
                  std::uint64_t entry_cap) {
  if (k < 1) fail(errc::invalid_argument, "k must be >= 1");
  if (x < 1) fail(errc::invalid_argument, "x must be >= 1");
  switch (method) {
    case Method::automatic:
      if (k == 2) return S2_hyperbola(x, threads);
      return S_k_direct(k, x, entry_cap);
    case Method::sieve:
      return S_k_direct(k, x, entry_cap);
    case Method::hyperbola:
      if (k != 2) fail(errc::invalid_argument, "hyperbola method is k = 2 only");
      return S2_hyperbola(x, threads);
    case Method::brute:
      if (k != 2) fail(errc::invalid_argument, "brute method is k = 2 only");
      return S2_bruteforce(x);
  }
  fail(errc::internal, "unreachable");
}

} // namespace zm::summatory
