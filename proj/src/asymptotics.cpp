#include "asymptotics.hpp"

#include <algorithm>

#include <json.hpp>

#include "error.hpp"

namespace zm::asymptotics {

Series::Series(unsigned order, mpfr_prec_t prec) : prec_(prec) {
  if (order == 0) fail(errc::invalid_argument, "series order must be >= 1");
  c_.reserve(order);
  for (unsigned i = 0; i < order; ++i) c_.emplace_back(prec);
}

Series Series::mul(const Series& o) const {
  unsigned ord = std::min(order(), o.order());
  Series r(ord, prec_);
  for (unsigned i = 0; i < ord; ++i)
    for (unsigned j = 0; i + j < ord; ++j) r[i + j] += c_[i] * o.c_[j];
  return r;
}

Series Series::add(const Series& o) const {
  unsigned ord = std::min(order(), o.order());
  Series r(ord, prec_);
  for (unsigned i = 0; i < ord; ++i) r[i] = c_[i] + o.c_[i];
  return r;
}

// ---------------------------------------------------------------------------
// Dirichlet beta derivatives at s = 1

namespace {

// Terms needed for `prec` correct bits: the CVZ scheme gains
// ln(3 + sqrt 8) / ln 2 = 2.543 bits per term.
unsigned cvz_terms_for(mpfr_prec_t prec) {
  return std::max<unsigned>(64, static_cast<unsigned>(prec / 2.54) + 16);
}

} // namespace

Real beta_taylor(unsigned j, mpfr_prec_t prec, unsigned terms) {
  if (j > 5) fail(errc::unsupported, "beta derivatives supported for j <= 5");
  unsigned need = cvz_terms_for(prec);
  if (terms == 0) {
    terms = need;
  } else if (terms < need) {
    fail(errc::unsupported, "requested precision unattainable with " +
                                std::to_string(terms) + " acceleration terms");
  }
  const mpfr_prec_t work = prec + 64;
  // d = ((3+sqrt 8)^n + (3+sqrt 8)^-n) / 2
  Real sq8 = Real::of(8L, work).sqrt();
  Real base = Real::of(3L, work) + sq8;
  Real dpow = base.pow(static_cast<long>(terms));
  Real d = (dpow + Real::of(1L, work) / dpow).ldexp(-1);
  Real b = -Real::of(1L, work);
  Real c = -d;
  Real s = Real::of(0L, work);
  for (unsigned k = 0; k < terms; ++k) {
    c = b - c;
    // a_k = (-ln(2k+1))^j / (2k+1); a_0 is 1 for j = 0, else 0.
    if (k == 0) {
      if (j == 0) s += c;
    } else {
      Real m = Real::of(static_cast<std::uint64_t>(2 * k + 1), work);
      Real term = (j == 0) ? Real::of(1L, work) : (-m.log()).pow(static_cast<long>(j));
      s += c * (term / m);
    }
    // b_{k+1} = b_k (k+n)(k-n) / ((k+1/2)(k+1))
    Real kk = Real::of(static_cast<std::uint64_t>(k), work);
    Real n = Real::of(static_cast<std::uint64_t>(terms), work);
    Real num = (kk + n) * (kk - n);
    Real den = (kk + Real::of(1L, work).ldexp(-1)) * (kk + Real::of(1L, work));
    b = b * (num / den);
  }
  Real out(prec);
  mpfr_set(out.raw(), (s / d).raw(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------------------
// Stieltjes constants (gamma_0 is the Euler-Mascheroni constant, computed;
// gamma_1..gamma_4 are standard reference values, cross-validated in tests by
// an Euler-Maclaurin oracle for the defining limit).

namespace {

constexpr const char* kStieltjes[4] = {
    "-0.0728158454836767248605863758749013191377363383343395",
    "-0.0096903631928723184845303860352125293590658061013408",
    "0.0020538344203033458661600465427533842857158044454106",
    "0.0023253700654673000574681701775260680009044694137849",
};

} // namespace

Real stieltjes_constant(unsigned m, mpfr_prec_t prec) {
  if (m == 0) return Real::euler_gamma(prec);
  if (m > 4) fail(errc::unsupported, "Stieltjes constants stored for m <= 4");
  return Real::parse(kStieltjes[m - 1], prec);
}

Series zeta_laurent(unsigned order, mpfr_prec_t prec) {
  if (order > 6) fail(errc::unsupported, "zeta Laurent data stored to order 6");
  Series s(order, prec);
  s[0] = Real::of(1L, prec);
  // coefficient of u^{m+1} is (-1)^m gamma_m / m!
  Int fact = 1;
  for (unsigned m = 0; m + 1 < order; ++m) {
    if (m > 0) fact *= m;
    Real g = stieltjes_constant(m, prec) / Real::of(fact, prec);
    s[m + 1] = (m % 2 == 0) ? g : -g;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Residue extraction

std::vector<Real> main_term_coeffs(unsigned k, mpfr_prec_t prec) {
  if (k < 2 || k > 6) fail(errc::unsupported, "main terms supported for k in 2..6");
  const unsigned order = 6;
  const mpfr_prec_t work = prec + 64;
  Series zs = zeta_laurent(order, work);
  Series bs(order, work);
  Int fact = 1;
  for (unsigned j = 0; j < order; ++j) {
    if (j > 0) fact *= j;
    bs[j] = beta_taylor(j, work) / Real::of(fact, work);
  }
  Series inv(order, work);  // 1/(1+u)
  for (unsigned m = 0; m < order; ++m)
    inv[m] = Real::of(m % 2 == 0 ? 1L : -1L, work);
  Series F = inv;
  for (unsigned i = 0; i < k; ++i) F = F.mul(zs);
  for (unsigned i = 0; i < k; ++i) F = F.mul(bs);
  // [u^{k-1}] F(u) e^{ut} assembled per power of t: c_i = F[k-1-i] / i!
  std::vector<Real> coeffs;
  coeffs.reserve(k);
  Int ifact = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (i > 0) ifact *= i;
    Real c = F[k - 1 - i] / Real::of(ifact, work);
    Real out(prec);
    mpfr_set(out.raw(), c.raw(), MPFR_RNDN);
    coeffs.push_back(std::move(out));
  }
  return coeffs;
}

Real predict(unsigned k, std::uint64_t x, mpfr_prec_t prec) {
  if (x < 2) fail(errc::invalid_argument, "prediction requires x >= 2");
  const mpfr_prec_t work = prec + 32;
  std::vector<Real> p = main_term_coeffs(k, work);
  Real t = Real::of(x, work).log();
  Real acc = Real::of(0L, work);
  for (unsigned i = p.size(); i-- > 0;) acc = acc * t + p[i];
  Real out(prec);
  mpfr_set(out.raw(), (acc * Real::of(x, work)).raw(), MPFR_RNDN);
  return out;
}

std::pair<Real, Real> l1_l2(mpfr_prec_t prec) {
  const mpfr_prec_t work = prec + 32;
  Real pi = Real::pi(work);
  Real l1 = pi * pi / Real::of(16L, work);
  Real g = Real::euler_gamma(work);
  Real two_g_minus_1 = g.ldexp(1) - Real::of(1L, work);
  Real l2 = l1 * two_g_minus_1 + pi * beta_taylor(1, work) / Real::of(2L, work);
  Real o1(prec), o2(prec);
  mpfr_set(o1.raw(), l1.raw(), MPFR_RNDN);
  mpfr_set(o2.raw(), l2.raw(), MPFR_RNDN);
  return {std::move(o1), std::move(o2)};
}

std::string constants_json(unsigned digits, mpfr_prec_t prec) {
  nlohmann::json j;
  j["precision_bits"] = static_cast<std::int64_t>(prec);
  j["euler_gamma"] = Real::euler_gamma(prec).str(digits);
  j["pi"] = Real::pi(prec).str(digits);
  nlohmann::json st = nlohmann::json::array();
  for (unsigned m = 1; m <= 4; ++m) st.push_back(stieltjes_constant(m, prec).str(digits));
  j["stieltjes"] = st;
  nlohmann::json bt = nlohmann::json::array();
  for (unsigned d = 0; d <= 5; ++d) bt.push_back(beta_taylor(d, prec).str(digits));
  j["beta_taylor"] = bt;
  auto [l1, l2] = l1_l2(prec);
  j["l1"] = l1.str(digits);
  j["l2"] = l2.str(digits);
  return j.dump(2);
}

} // namespace zm::asymptotics
