#include "gaussian.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

namespace zm::gaussian {

// ---------------------------------------------------------------------------
// Elementary arithmetic

Int norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

GaussianInt conj(const GaussianInt& z) { return GaussianInt{z.re, -z.im}; }

GaussianInt mul(const GaussianInt& x, const GaussianInt& y) {
  return GaussianInt{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

bool is_zero(const GaussianInt& z) { return z.re == 0 && z.im == 0; }

bool is_unit(const GaussianInt& z) { return norm(z) == 1; }

GaussianInt unit_value(int pow) {
  switch (((pow % 4) + 4) % 4) {
    case 0: return GaussianInt{Int(1), Int(0)};
    case 1: return GaussianInt{Int(0), Int(1)};
    case 2: return GaussianInt{Int(-1), Int(0)};
    default: return GaussianInt{Int(0), Int(-1)};
  }
}

GaussianInt canonical(const GaussianInt& z) {
  if (is_zero(z)) fail(errc::invalid_argument, "zero has no canonical representative");
  GaussianInt r = z;
  for (int t = 0; t < 4; ++t) {
    if (r.re >= 1 && r.im >= 0) return r;
    r = GaussianInt{-r.im, r.re};  // multiply by i
  }
  fail(errc::internal, "canonical rotation failed");
}

bool divides(const GaussianInt& d, const GaussianInt& z) {
  if (is_zero(d)) return is_zero(z);
  Int nd = norm(d);
  GaussianInt t = mul(z, conj(d));
  return t.re % nd == 0 && t.im % nd == 0;
}

GaussianInt div_exact(const GaussianInt& z, const GaussianInt& d) {
  Int nd = norm(d);
  if (nd == 0) fail(errc::invalid_argument, "division by zero");
  GaussianInt t = mul(z, conj(d));
  if (t.re % nd != 0 || t.im % nd != 0)
    fail(errc::internal, "div_exact on non-divisor");
  return GaussianInt{t.re / nd, t.im / nd};
}

// ---------------------------------------------------------------------------
// Parsing and formatting: "a+bi" with either part optional

namespace {

Int parse_int_part(std::string_view s) {
  if (s.empty()) fail(errc::parse_error, "empty integer literal");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) fail(errc::parse_error, "sign without digits");
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      fail(errc::parse_error, "malformed integer literal: '" + std::string(s) + "'");
  Int v(std::string(s.substr(i)));
  if (s[0] == '-') v = -v;
  return v;
}

// Coefficient of i: "", "+", "-" mean 1, 1, -1.
Int parse_imag_coeff(std::string_view s) {
  if (s.empty() || s == "+") return Int(1);
  if (s == "-") return Int(-1);
  return parse_int_part(s);
}

} // namespace

GaussianInt parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(errc::parse_error, "empty Gaussian integer literal");
  if (s.back() != 'i') return GaussianInt{parse_int_part(s), Int(0)};
  std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading: before it the real part,
  // from it the imaginary coefficient.
  size_t split = std::string::npos;
  for (size_t j = body.size(); j-- > 1;) {
    if (body[j] == '+' || body[j] == '-') { split = j; break; }
  }
  if (split == std::string::npos) return GaussianInt{Int(0), parse_imag_coeff(body)};
  return GaussianInt{parse_int_part(body.substr(0, split)),
                     parse_imag_coeff(body.substr(split))};
}

std::string to_string(const GaussianInt& z) {
  if (z.im == 0) return z.re.get_str();
  std::string im;
  if (z.im == 1) im = "i";
  else if (z.im == -1) im = "-i";
  else im = z.im.get_str() + "i";
  if (z.re == 0) return im;
  return z.re.get_str() + (z.im > 0 ? "+" : "") + im;
}

// ---------------------------------------------------------------------------
// Integer primality and factoring

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) { std::uint64_t t = a % b; a = b; b = t; }
  return a;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Deterministic witness set for n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64)
    return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

constexpr std::uint64_t kTrialLimit = 10000;
constexpr std::uint64_t kRhoStepBudget = 1ULL << 28;

std::uint64_t pollard_brent_u64(std::uint64_t n, std::uint64_t& steps) {
  if ((n & 1) == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    const std::uint64_t m = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        steps += lim;
        if (steps > kRhoStepBudget) fail(errc::budget_exceeded, "integer factoring budget exceeded");
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod_u64(ys, ys, n) + c) % n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
        if (++steps > kRhoStepBudget) fail(errc::budget_exceeded, "integer factoring budget exceeded");
      }
    }
    if (g != n) return g;
  }
}

Int pollard_brent_mpz(const Int& n, std::uint64_t& steps) {
  if (n % 2 == 0) return Int(2);
  for (unsigned long c = 1;; ++c) {
    Int y = 2, q = 1, g = 1, x, ys;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        steps += lim;
        if (steps > kRhoStepBudget) fail(errc::budget_exceeded, "integer factoring budget exceeded");
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (++steps > kRhoStepBudget) fail(errc::budget_exceeded, "integer factoring budget exceeded");
      }
    }
    if (g != n) return g;
  }
}

void factor_rec(const Int& n, std::vector<Int>& out, std::uint64_t& steps) {
  if (n == 1) return;
  if (is_prime(n)) { out.push_back(n); return; }
  Int d;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
    d = Int(static_cast<unsigned long>(pollard_brent_u64(n.get_ui(), steps)));
  } else {
    d = pollard_brent_mpz(n, steps);
  }
  factor_rec(d, out, steps);
  factor_rec(n / d, out, steps);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n) {
  if (n < 1) fail(errc::invalid_argument, "factor_integer requires n >= 1");
  std::vector<Int> primes;
  Int m = n;
  std::uint64_t steps = 0;
  for (std::uint64_t d = 2; d <= kTrialLimit && mpz_cmp_ui(m.get_mpz_t(), d * d) >= 0;
       d == 2 ? d = 3 : d += 2) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      primes.emplace_back(static_cast<unsigned long>(d));
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
    }
  }
  factor_rec(m, primes, steps);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, unsigned>> out;
  for (const Int& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prime splitting

PrimeSplit split_prime(const Int& p) {
  if (!is_prime(p)) fail(errc::invalid_argument, "split_prime requires a prime");
  if (p == 2) return PrimeSplit{SplitClass::ramified, GaussianInt{Int(1), Int(1)}, {}};
  if (p % 4 == 3) return PrimeSplit{SplitClass::inert, {}, {}};
  // p = 1 (mod 4): square root of -1 via x = n^((p-1)/4) for random n, then
  // Euclidean descent (Cornacchia) to a*a + b*b = p.
  gmp_randstate_t rs;
  gmp_randinit_mt(rs);
  gmp_randseed_ui(rs, 0x5eedu);  // fixed seed: deterministic output
  Int e = (p - 1) / 4;
  Int x;
  while (true) {
    Int nr;
    mpz_urandomm(nr.get_mpz_t(), rs, Int(p - 3).get_mpz_t());
    nr += 2;  // in [2, p-2]
    mpz_powm(x.get_mpz_t(), nr.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((x * x) % p == p - 1) break;
  }
  gmp_randclear(rs);
  Int a = p, b = x;
  while (b * b > p) {
    Int t = a % b;
    a = b;
    b = t;
  }
  Int s;
  mpz_sqrt(s.get_mpz_t(), Int(p - b * b).get_mpz_t());
  if (b * b + s * s != p) fail(errc::internal, "Cornacchia descent failed");
  Int hi = std::max(b, s), lo = std::min(b, s);
  return PrimeSplit{SplitClass::split, GaussianInt{hi, lo}, GaussianInt{lo, hi}};
}

// ---------------------------------------------------------------------------
// Factorization in Z[i]

namespace {

bool factor_order(const FactorEntry& x, const FactorEntry& y) {
  Int nx = norm(x.prime), ny = norm(y.prime);
  if (nx != ny) return nx < ny;
  return x.prime.re > y.prime.re;  // split conjugates: re > im first
}

} // namespace

Factorization factor(const GaussianInt& z) {
  if (is_zero(z)) fail(errc::invalid_argument, "cannot factor zero");
  Int N = norm(z);
  if (mpz_sizeinbase(N.get_mpz_t(), 2) > 128)
    fail(errc::budget_exceeded, "norm exceeds the 2^128 factoring budget");
  Factorization f;
  GaussianInt rest = z;
  for (const auto& [p, eN] : factor_integer(N)) {
    PrimeSplit sp = split_prime(p);
    switch (sp.kind) {
      case SplitClass::ramified: {
        for (unsigned i = 0; i < eN; ++i) rest = div_exact(rest, sp.first);
        f.factors.push_back({sp.first, eN});
        break;
      }
      case SplitClass::inert: {
        if (eN % 2 != 0) fail(errc::internal, "odd inert exponent in a norm");
        GaussianInt g{p, Int(0)};
        for (unsigned i = 0; i < eN / 2; ++i) rest = div_exact(rest, g);
        f.factors.push_back({g, eN / 2});
        break;
      }
      case SplitClass::split: {
        unsigned e1 = 0;
        while (e1 < eN && divides(sp.first, rest)) {
          rest = div_exact(rest, sp.first);
          ++e1;
        }
        unsigned e2 = eN - e1;
        for (unsigned i = 0; i < e2; ++i) rest = div_exact(rest, sp.second);
        if (e1 > 0) f.factors.push_back({sp.first, e1});
        if (e2 > 0) f.factors.push_back({sp.second, e2});
        break;
      }
    }
  }
  if (!is_unit(rest)) fail(errc::internal, "factor left a non-unit cofactor");
  for (int pow = 0; pow < 4; ++pow) {
    if (rest == unit_value(pow)) { f.unit_pow = pow; break; }
  }
  std::sort(f.factors.begin(), f.factors.end(), factor_order);
  return f;
}

GaussianInt reconstruct(const Factorization& f) {
  GaussianInt r = unit_value(f.unit_pow);
  for (const auto& [prime, exp] : f.factors)
    for (unsigned i = 0; i < exp; ++i) r = mul(r, prime);
  return r;
}

Int tau_k(const GaussianInt& z, unsigned k) {
  if (k < 2) fail(errc::out_of_domain, "tau_k requires k >= 2");
  Factorization f = factor(z);
  Int t = 1;
  Int b;
  for (const auto& [prime, exp] : f.factors) {
    mpz_bin_uiui(b.get_mpz_t(), exp + k - 1, k - 1);
    t *= b;
  }
  return t;
}

std::vector<GaussianInt> divisors(const GaussianInt& z) {
  if (is_zero(z)) fail(errc::invalid_argument, "zero has no divisors list");
  if (norm(z) > 100000000) fail(errc::budget_exceeded, "divisors limited to norm <= 10^8");
  Factorization f = factor(z);
  std::vector<GaussianInt> out{GaussianInt{Int(1), Int(0)}};
  for (const auto& [prime, exp] : f.factors) {
    std::vector<GaussianInt> next;
    next.reserve(out.size() * (exp + 1));
    for (const GaussianInt& d : out) {
      GaussianInt cur = d;
      next.push_back(cur);
      for (unsigned i = 1; i <= exp; ++i) {
        cur = mul(cur, prime);
        next.push_back(canonical(cur));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const GaussianInt& x, const GaussianInt& y) {
    Int nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    return x.re > y.re;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle (no factorization: trial division only)

namespace {

std::vector<GaussianInt> divisors_by_trial(const GaussianInt& z) {
  std::vector<GaussianInt> out;
  Int N = norm(z);
  Int amax;
  mpz_sqrt(amax.get_mpz_t(), N.get_mpz_t());
  for (Int a = 1; a <= amax; ++a) {
    Int rem = N - a * a;
    Int bmax;
    mpz_sqrt(bmax.get_mpz_t(), rem.get_mpz_t());
    for (Int b = 0; b <= bmax; ++b) {
      GaussianInt d{a, b};
      Int nd = norm(d);
      if (nd == 0 || N % nd != 0) continue;
      if (divides(d, z)) out.push_back(d);
    }
  }
  return out;
}

Int count_tuples(const GaussianInt& z, unsigned k) {
  if (k == 1) return Int(1);
  Int total = 0;
  for (const GaussianInt& d : divisors_by_trial(z))
    total += count_tuples(canonical(div_exact(z, d)), k - 1);
  return total;
}

} // namespace

Int tau_k_bruteforce(const GaussianInt& z, unsigned k) {
  if (is_zero(z)) fail(errc::invalid_argument, "zero is outside the divisor domain");
  if (k < 2 || k > 3) fail(errc::unsupported, "brute-force oracle supports k in {2, 3}");
  if (norm(z) > 10000) fail(errc::unsupported, "brute-force oracle limited to norm <= 10^4");
  return count_tuples(canonical(z), k);
}

bool is_gaussian_prime(const GaussianInt& z) {
  if (is_zero(z) || is_unit(z)) return false;
  Int N = norm(z);
  if (is_prime(N)) return true;
  // Inert case: associate of a rational prime p = 3 (mod 4).
  GaussianInt c = canonical(z);
  return c.im == 0 && c.re % 4 == 3 && is_prime(c.re);
}

std::string to_json(const Factorization& f) {
  nlohmann::json j;
  j["unit"] = to_string(unit_value(f.unit_pow));
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [prime, exp] : f.factors)
    arr.push_back({{"prime", to_string(prime)}, {"exp", exp}});
  j["factors"] = arr;
  return j.dump();
}

} // namespace zm::gaussian
