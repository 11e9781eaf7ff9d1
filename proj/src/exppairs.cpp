#include "exppairs.hpp"

#include <algorithm>
#include <cctype>

namespace zm::exppairs {

namespace {
const Rational kHalf = make_rational(1, 2);
} // namespace

bool in_domain(const Pair& p) {
  return p.k >= 0 && p.k <= kHalf && p.l >= kHalf && p.l <= 1;
}

Pair checked_pair(Rational k, Rational l) {
  Pair p{std::move(k), std::move(l)};
  if (!in_domain(p))
    fail(errc::invalid_argument, "not an exponent pair: (" + zm::to_string(p.k) + ", " +
                                     zm::to_string(p.l) + ")");
  return p;
}

Pair apply_A(const Pair& p) {
  Rational den = 2 * p.k + 2;  // >= 2, never zero
  return Pair{p.k / den, (p.k + p.l + 1) / den};
}

Pair apply_B(const Pair& p) { return Pair{p.l - kHalf, p.k + kHalf}; }

Pair apply(Process s, const Pair& p) { return s == Process::A ? apply_A(p) : apply_B(p); }

void apply_real(Process s, Real& k, Real& l) {
  const mpfr_prec_t prec = k.prec();
  if (s == Process::A) {
    Real den = k.ldexp(1) + Real::of(2L, prec);
    Real nk = k / den;
    Real nl = (k + l + Real::of(1L, prec)) / den;
    k = std::move(nk);
    l = std::move(nl);
  } else {
    Real half = Real::of(1L, prec).ldexp(-1);
    Real nk = l - half;
    Real nl = k + half;
    k = std::move(nk);
    l = std::move(nl);
  }
}

// ---------------------------------------------------------------------------
// Word grammar

namespace {

// Words are stored expanded; Table-scale inputs are ~120 symbols.
constexpr size_t kMaxExpandedLength = 1u << 20;

struct Parser {
  std::string text;  // whitespace stripped, positions refer to this
  size_t pos = 0;

  [[noreturn]] void err(const std::string& what) const {
    fail(errc::parse_error, what + " at position " + std::to_string(pos));
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  // Parses a sequence of terms until ')' or end. `top` marks the outermost
  // level, where a trailing "^oo" captures the periodic tail.
  Word parse_seq(bool top) {
    Word out;
    while (!done()) {
      char c = peek();
      if (c == ')') {
        if (top) err("unmatched ')'");
        break;
      }
      std::vector<Process> unit;
      if (c == 'A' || c == 'B') {
        unit.push_back(c == 'A' ? Process::A : Process::B);
        ++pos;
      } else if (c == '(') {
        ++pos;
        Word inner = parse_seq(false);
        if (inner.has_tail()) err("'^oo' must be the rightmost term");
        if (done() || peek() != ')') err("expected ')'");
        ++pos;
        unit = std::move(inner.finite);
      } else {
        err(std::string("unexpected character '") + c + "'");
      }
      if (!done() && peek() == '^') {
        ++pos;
        if (text.compare(pos, 2, "oo") == 0) {
          pos += 2;
          if (!done() && !(peek() == ')' && !top)) err("'^oo' must be the rightmost term");
          if (std::none_of(unit.begin(), unit.end(),
                           [](Process s) { return s == Process::A; }))
            err("periodic tail must contain at least one A");
          out.tail = std::move(unit);
          return out;
        }
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) err("expected exponent");
        unsigned long e = std::stoul(text.substr(start, pos - start));
        if (e == 0) err("exponent must be positive");
        if (unit.size() * e + out.finite.size() > kMaxExpandedLength)
          err("expanded word too long");
        std::vector<Process> repeated;
        repeated.reserve(unit.size() * e);
        for (unsigned long i = 0; i < e; ++i)
          repeated.insert(repeated.end(), unit.begin(), unit.end());
        unit = std::move(repeated);
      }
      out.finite.insert(out.finite.end(), unit.begin(), unit.end());
    }
    return out;
  }
};

} // namespace

Word parse_word(std::string_view text) {
  Parser p;
  p.text.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) p.text.push_back(c);
  Word w = p.parse_seq(true);
  if (!p.done()) p.err("trailing input");
  return w;
}

std::string to_string(const Word& w) {
  std::string s;
  for (Process c : w.finite) s.push_back(c == Process::A ? 'A' : 'B');
  if (w.has_tail()) {
    s.push_back('(');
    for (Process c : w.tail) s.push_back(c == Process::A ? 'A' : 'B');
    s += ")^oo";
  }
  return s;
}

Pair parse_pair(std::string_view text) {
  size_t comma = text.find(',');
  if (comma == std::string_view::npos)
    fail(errc::parse_error, "expected 'k,l' pair literal");
  return checked_pair(parse_rational(text.substr(0, comma)),
                      parse_rational(text.substr(comma + 1)));
}

std::string to_string(const Pair& p) { return zm::to_string(p.k) + "," + zm::to_string(p.l); }

Pair eval_word(const Word& w, const Pair& base) {
  if (w.has_tail())
    fail(errc::invalid_argument, "word has a periodic tail; use fixed_point");
  Pair p = base;
  for (auto it = w.finite.rbegin(); it != w.finite.rend(); ++it) p = apply(*it, p);
  return p;
}

// ---------------------------------------------------------------------------
// Projective matrices

Mat3 process_matrix(Process s) {
  Mat3 r;
  if (s == Process::A) {
    const long a[3][3] = {{1, 0, 0}, {1, 1, 1}, {2, 0, 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a[i][j];
  } else {
    const long b[3][3] = {{0, 2, -1}, {2, 0, 1}, {0, 0, 2}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = b[i][j];
  }
  return r;
}

namespace {

Mat3 mat_mul(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int acc = 0;
      for (int t = 0; t < 3; ++t) acc += x.m[i][t] * y.m[t][j];
      r.m[i][j] = std::move(acc);
    }
  return r;
}

Mat3 identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? 1 : 0;
  return r;
}

} // namespace

Mat3 word_matrix(const Word& w) {
  if (w.has_tail())
    fail(errc::invalid_argument, "word has a periodic tail; no finite matrix");
  // Leftmost symbol applied last means the leftmost matrix sits on the left
  // of the product.
  Mat3 r = identity();
  for (Process s : w.finite) r = mat_mul(r, process_matrix(s));
  return r;
}

Pair apply_matrix(const Mat3& m, const Pair& p) {
  Rational hom[3];
  for (int i = 0; i < 3; ++i)
    hom[i] = m.m[i][0] * p.k + m.m[i][1] * p.l + Rational(m.m[i][2]);
  if (hom[2] == 0) fail(errc::internal, "projective image at infinity");
  return Pair{hom[0] / hom[2], hom[1] / hom[2]};
}

// ---------------------------------------------------------------------------
// Periodic words

FixedPoint fixed_point(const Word& w, mpfr_prec_t prec) {
  if (!w.has_tail())
    fail(errc::invalid_argument, "word has no periodic tail; use eval_word");
  const mpfr_prec_t work = prec + 32;
  Real k = Real::of(1L, work).ldexp(-1);
  Real l = k;
  Real tol = Real::of(1L, work).ldexp(-(static_cast<long>(prec) - 16));
  constexpr std::uint64_t kMaxIter = 100000;
  std::uint64_t it = 0;
  while (true) {
    Real pk = k, pl = l;
    for (auto s = w.tail.rbegin(); s != w.tail.rend(); ++s) apply_real(*s, k, l);
    ++it;
    Real dk = (k - pk).abs();
    Real dl = (l - pl).abs();
    if (dk < tol && dl < tol) break;
    if (it >= kMaxIter)
      fail(errc::budget_exceeded,
           "fixed-point iteration did not converge after 100000 rounds; last delta (" +
               dk.str(6) + ", " + dl.str(6) + ") at (" + k.str(20) + ", " + l.str(20) + ")");
  }
  for (auto s = w.finite.rbegin(); s != w.finite.rend(); ++s) apply_real(*s, k, l);
  FixedPoint r{Real(prec), Real(prec), it};
  mpfr_set(r.k.raw(), k.raw(), MPFR_RNDN);
  mpfr_set(r.l.raw(), l.raw(), MPFR_RNDN);
  return r;
}

} // namespace zm::exppairs
