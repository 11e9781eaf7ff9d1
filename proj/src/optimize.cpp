#include "optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <unordered_set>

#include <json.hpp>

namespace zm::optimize {

using exppairs::Pair;
using exppairs::Process;
using exppairs::Word;

// ---------------------------------------------------------------------------
// Objectives

Objective objective_lk() {
  Objective o;
  o.a = 0; o.b = 1; o.c = 0;
  o.d = 1; o.e = 0; o.f = 0;
  return o;
}

Objective objective_one_plus_lk() {
  Objective o;
  o.a = 1; o.b = 1; o.c = 0;
  o.d = 1; o.e = 0; o.f = 0;
  return o;
}

Objective objective_c() {
  Objective o;
  o.a = 4; o.b = 4; o.c = 2;
  o.d = 1; o.e = 0; o.f = 0;
  o.constraints.push_back({Rational(-1), make_rational(-16, 13), Rational(1)});
  return o;
}

Objective objective_E(const Rational& A) {
  Objective o = objective_lk();
  o.constraints.push_back({Rational(4) - A, Rational(4), Rational(2)});
  return o;
}

Objective parse_objective(std::string_view text) {
  if (text == "lk") return objective_lk();
  if (text == "mlk") return objective_one_plus_lk();
  if (text == "cobj") return objective_c();
  std::vector<std::string_view> groups;
  size_t start = 0;
  while (true) {
    size_t semi = text.find(';', start);
    groups.push_back(text.substr(start, semi == std::string_view::npos ? semi : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  auto split = [](std::string_view s) {
    std::vector<Rational> out;
    size_t b = 0;
    while (true) {
      size_t comma = s.find(',', b);
      out.push_back(parse_rational(s.substr(b, comma == std::string_view::npos ? comma : comma - b)));
      if (comma == std::string_view::npos) break;
      b = comma + 1;
    }
    return out;
  };
  auto coeffs = split(groups[0]);
  if (coeffs.size() != 6)
    fail(errc::parse_error, "objective needs six rationals a,b,c,d,e,f");
  Objective o;
  o.a = coeffs[0]; o.b = coeffs[1]; o.c = coeffs[2];
  o.d = coeffs[3]; o.e = coeffs[4]; o.f = coeffs[5];
  if (o.d == 0 && o.e == 0 && o.f == 0)
    fail(errc::invalid_argument, "objective denominator is identically zero");
  for (size_t i = 1; i < groups.size(); ++i) {
    auto c = split(groups[i]);
    if (c.size() != 3) fail(errc::parse_error, "constraint needs three rationals g,h,i");
    o.constraints.push_back({c[0], c[1], c[2]});
  }
  return o;
}

std::string to_string(const Objective& obj) {
  std::string s = zm::to_string(obj.a) + "," + zm::to_string(obj.b) + "," + zm::to_string(obj.c) +
                  "," + zm::to_string(obj.d) + "," + zm::to_string(obj.e) + "," +
                  zm::to_string(obj.f);
  for (const auto& c : obj.constraints)
    s += ";" + zm::to_string(c.g) + "," + zm::to_string(c.h) + "," + zm::to_string(c.i);
  return s;
}

bool satisfies_constraints(const Objective& obj, const Pair& p) {
  for (const auto& c : obj.constraints)
    if (c.g * p.k + c.h * p.l + c.i < 0) return false;
  return true;
}

std::optional<Rational> eval_ratio(const Objective& obj, const Pair& p) {
  Rational den = obj.d * p.k + obj.e * p.l + obj.f;
  if (den <= 0) return std::nullopt;
  return (obj.a * p.k + obj.b * p.l + obj.c) / den;
}

std::optional<Rational> eval_objective(const Objective& obj, const Pair& p) {
  if (!satisfies_constraints(obj, p)) return std::nullopt;
  return eval_ratio(obj, p);
}

// ---------------------------------------------------------------------------
// Search

const std::vector<Pair>& search_bases() {
  static const std::vector<Pair> bases = {
      Pair{Rational(0), Rational(1)},
      Pair{make_rational(13, 84), make_rational(55, 84)},
  };
  return bases;
}

namespace {

struct PairKey {
  std::uint64_t a, b;
  bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};

struct PairKeyHash {
  size_t operator()(const PairKey& k) const {
    return k.a ^ (k.b * 0x9e3779b97f4a7c15ULL);
  }
};

void mix_mpz(std::uint64_t& h, const mpz_class& z) {
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  };
  const mpz_srcptr p = z.get_mpz_t();
  mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(mpz_sgn(p))));
  size_t n = mpz_size(p);
  mix(n);
  for (size_t i = 0; i < n; ++i) mix(mpz_getlimbn(p, i));
}

// The search works in homogeneous integer coordinates (K, L, W), W > 0,
// k = K/W, l = L/W, gcd-reduced once per node. The A/B maps and all value
// comparisons are then plain integer multiplications; no rational
// canonicalization on the hot path.
struct Hom {
  Int K, L, W;

  void reduce() {
    Int g;
    mpz_gcd(g.get_mpz_t(), K.get_mpz_t(), L.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), W.get_mpz_t());
    if (g > 1) {
      mpz_divexact(K.get_mpz_t(), K.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(L.get_mpz_t(), L.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(W.get_mpz_t(), W.get_mpz_t(), g.get_mpz_t());
    }
  }

  Pair to_pair() const {
    return Pair{make_rational(K, W), make_rational(L, W)};
  }
};

Hom hom_of(const Pair& p) {
  Int w = p.k.get_den() / gcd(Int(p.k.get_den()), Int(p.l.get_den())) * p.l.get_den();
  Hom h{p.k.get_num() * (w / p.k.get_den()), p.l.get_num() * (w / p.l.get_den()), w};
  h.reduce();
  return h;
}

Hom apply_A_hom(const Hom& s) {
  Hom r{s.K, s.K + s.L + s.W, 2 * (s.K + s.W)};
  r.reduce();
  return r;
}

Hom apply_B_hom(const Hom& s) {
  Hom r{2 * s.L - s.W, 2 * s.K + s.W, 2 * s.W};
  r.reduce();
  return r;
}

// Fingerprint of the reduced triple; a collision drops one state, which the
// search tolerates.
PairKey fingerprint(const Hom& s) {
  std::uint64_t h1 = 0xcbf29ce484222325ULL, h2 = 0x84222325cbf29ce4ULL;
  mix_mpz(h1, s.K);
  mix_mpz(h1, s.L);
  mix_mpz(h1, s.W);
  h2 ^= h1 * 0x2545f4914f6cdd1dULL;
  mix_mpz(h2, s.L);
  mix_mpz(h2, s.K);
  return PairKey{h1, h2};
}

// Objective with denominators cleared: integer rows act on (K, L, W).
struct IntObjective {
  Int a, b, c, d, e, f;
  std::vector<std::array<Int, 3>> constraints;

  static Int scale_row(const Rational& x, const Rational& y, const Rational& z) {
    Int m = lcm(Int(x.get_den()), Int(y.get_den()));
    return lcm(m, Int(z.get_den()));
  }

  explicit IntObjective(const Objective& o) {
    Int mn = scale_row(o.a, o.b, o.c);
    a = o.a.get_num() * (mn / o.a.get_den());
    b = o.b.get_num() * (mn / o.b.get_den());
    c = o.c.get_num() * (mn / o.c.get_den());
    Int md = scale_row(o.d, o.e, o.f);
    d = o.d.get_num() * (md / o.d.get_den());
    e = o.e.get_num() * (md / o.e.get_den());
    f = o.f.get_num() * (md / o.f.get_den());
    for (const auto& con : o.constraints) {
      Int mc = scale_row(con.g, con.h, con.i);
      constraints.push_back({con.g.get_num() * (mc / con.g.get_den()),
                             con.h.get_num() * (mc / con.h.get_den()),
                             con.i.get_num() * (mc / con.i.get_den())});
    }
  }

  bool feasible(const Hom& s) const {
    for (const auto& r : constraints)
      if (r[0] * s.K + r[1] * s.L + r[2] * s.W < 0) return false;
    return true;
  }

  // Ratio as an integer fraction with positive denominator; false when the
  // denominator is <= 0 (+infinity).
  bool ratio(const Hom& s, Int& num, Int& den) const {
    den = d * s.K + e * s.L + f * s.W;
    if (den <= 0) return false;
    num = a * s.K + b * s.L + c * s.W;
    return true;
  }
};

struct Score {
  bool finite = false;
  Int num, den;  // den > 0 when finite

  // cross-multiplied comparison; infinite sorts last
  bool less_than(const Score& o) const {
    if (finite != o.finite) return finite;
    if (!finite) return false;
    return num * o.den < o.num * den;
  }
  void min_with(Int&& n, Int&& d) {
    if (!finite || n * den < num * d) {
      num = std::move(n);
      den = std::move(d);
      finite = true;
    }
  }
};

struct Node {
  Hom state;
  Score ratio;  // bare objective value
  Score score;  // ordering key: best value over B-completions
  std::string word;
  unsigned char base_idx;
  bool last_is_B;
};

// min over {p} and {B A^j p : j < lookahead, BB avoided} of the bare ratio.
Score completion_score(const IntObjective& obj, const Hom& s, bool last_is_B,
                       unsigned lookahead) {
  Score best;
  Int n, d;
  if (obj.ratio(s, n, d)) best.min_with(std::move(n), std::move(d));
  Hom q = s;
  for (unsigned j = 0; j < lookahead; ++j) {
    if (j > 0) q = apply_A_hom(q);
    if (j == 0 && last_is_B) continue;
    Hom bq = apply_B_hom(q);
    if (obj.ratio(bq, n, d)) best.min_with(std::move(n), std::move(d));
  }
  return best;
}

// (score, word, base); total order over distinct nodes.
bool node_less(const Node& x, const Node& y) {
  if (x.score.less_than(y.score)) return true;
  if (y.score.less_than(x.score)) return false;
  if (x.word != y.word) return x.word < y.word;
  return x.base_idx < y.base_idx;
}

} // namespace

SearchResult search(const Objective& obj, const SearchParams& params) {
  if (params.budget < 1) fail(errc::invalid_argument, "search budget must be >= 1");
  const size_t width = params.width > 0
                           ? static_cast<size_t>(params.width)
                           : std::max<std::uint64_t>(16, params.budget / 50);
  const IntObjective iobj(obj);

  std::unordered_set<PairKey, PairKeyHash> seen;
  seen.reserve(std::min<std::uint64_t>(params.budget * 2, 1u << 22));

  struct Best {
    Score value;
    Hom state;
    std::string word;
    unsigned char base_idx = 0;
  };
  std::optional<Best> best;
  std::uint64_t expanded = 0;

  auto consider = [&](const Node& n) {
    if (!n.ratio.finite || !iobj.feasible(n.state)) return;
    bool better = !best || n.ratio.less_than(best->value) ||
                  (!best->value.less_than(n.ratio) && n.word < best->word);
    if (better) best = Best{n.ratio, n.state, n.word, n.base_idx};
  };

  std::vector<Node> frontier;
  {
    const auto& bases = search_bases();
    for (size_t i = 0; i < bases.size(); ++i) {
      Node n;
      n.state = hom_of(bases[i]);
      Int num, den;
      if (iobj.ratio(n.state, num, den)) {
        n.ratio.finite = true;
        n.ratio.num = num;
        n.ratio.den = den;
      }
      n.score = completion_score(iobj, n.state, false, params.lookahead);
      n.base_idx = static_cast<unsigned char>(i);
      n.last_is_B = false;
      seen.insert(fingerprint(n.state));
      consider(n);
      frontier.push_back(std::move(n));
    }
  }

  for (unsigned depth = 0; depth < params.depth_limit && expanded < params.budget; ++depth) {
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    for (const Node& n : frontier) {
      if (expanded >= params.budget) break;
      ++expanded;
      auto push_child = [&](Process s) {
        Node c;
        c.state = (s == Process::A) ? apply_A_hom(n.state) : apply_B_hom(n.state);
        if (!seen.insert(fingerprint(c.state)).second) return;
        c.word = (s == Process::A ? "A" : "B") + n.word;
        c.base_idx = n.base_idx;
        c.last_is_B = (s == Process::B);
        Int num, den;
        if (iobj.ratio(c.state, num, den)) {
          c.ratio.finite = true;
          c.ratio.num = std::move(num);
          c.ratio.den = std::move(den);
        }
        c.score = completion_score(iobj, c.state, c.last_is_B, params.lookahead);
        consider(c);
        next.push_back(std::move(c));
      };
      push_child(Process::A);
      if (!n.last_is_B) push_child(Process::B);
    }
    if (next.empty()) break;
    if (next.size() > width) {
      std::nth_element(next.begin(), next.begin() + width, next.end(), node_less);
      next.resize(width);
    }
    std::sort(next.begin(), next.end(), node_less);
    frontier = std::move(next);
  }

  if (!best)
    fail(errc::no_feasible_point,
         "no feasible exponent pair within budget " + std::to_string(params.budget));
  SearchResult r{best->state.to_pair(), best->word, search_bases()[best->base_idx],
                 make_rational(best->value.num, best->value.den), expanded};
  return r;
}

// ---------------------------------------------------------------------------
// Constants C and the Table 1 witness words

const exppairs::Pair& bourgain_pair() {
  static const Pair p{make_rational(13, 84), make_rational(55, 84)};
  return p;
}

const Word& c_witness_word() {
  static const Word w = exppairs::parse_word("BA(A(BAA)^2)^2A^2(BA)^2ABA");
  return w;
}

const Rational& exact_C() {
  static const Rational c = [] {
    Rational expect = make_rational(16645467, 972266);
    Pair p = exppairs::eval_word(c_witness_word(), bourgain_pair());
    Rational got = (4 * p.k + 4 * p.l + 2) / p.k;
    if (got != expect) fail(errc::internal, "C witness word does not reproduce C");
    return expect;
  }();
  return c;
}

const std::vector<KnownWitness>& table1_witnesses() {
  static const std::vector<KnownWitness> rows = {
      {14, "BAA^2BA(BAA)^5((BA)^2A)^2A(BA)^3A^3(ABA)^2", "1/6,2/3",
       "1117297289/491431296"},
      {15, "(BAA^2)^2(BA)^2A^4(BA)^4ABA(A(BA)^3A)^2(BA)^5A", "1/6,2/3",
       "61902400787/25629743097"},
      {16, "BAA((BA)^2ABAA(BA)^2A^2(BA)^4)^oo", "", ""},
      {17, "(BAA)^3A^2", "13/84,55/84", "7321/2708"},
  };
  return rows;
}

// ---------------------------------------------------------------------------
// Convex-hull envelope for const_D
//
// The set of exponent pairs is convex (geometric interpolation of the two
// exponential-sum bounds), so E(A) = inf l/k under (4-A)k+4l+2 >= 0 ranges
// over the hull of the word closure, not just over word pairs themselves.
// f(D) = (M(D)-8/21)/D is flat to ~1e-6 near its minimum; the chord structure
// of the hull is what pins the minimizer. The exhaustive word closure to a
// modest depth settles the relevant hull edges (stable from depth 12 on).

namespace {

struct HullPoint {
  double k, l;
};

double hull_cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
  return (a.k - o.k) * (b.l - o.l) - (a.l - o.l) * (b.k - o.k);
}

const std::vector<HullPoint>& word_closure_hull() {
  static const std::vector<HullPoint> hull = [] {
    constexpr int kDepth = 16;
    std::vector<HullPoint> cloud;
    struct S {
      double k, l;
      bool last_is_B;
    };
    std::vector<S> frontier;
    for (const Pair& b : search_bases())
      frontier.push_back({b.k.get_d(), b.l.get_d(), false});
    for (const S& s : frontier) cloud.push_back({s.k, s.l});
    for (int d = 0; d < kDepth; ++d) {
      std::vector<S> next;
      next.reserve(frontier.size() * 2);
      for (const S& s : frontier) {
        double den = 2 * s.k + 2;
        next.push_back({s.k / den, (s.k + s.l + 1) / den, false});
        if (!s.last_is_B) next.push_back({s.l - 0.5, s.k + 0.5, true});
      }
      for (const S& s : next) cloud.push_back({s.k, s.l});
      frontier = std::move(next);
    }
    std::sort(cloud.begin(), cloud.end(), [](const HullPoint& x, const HullPoint& y) {
      if (x.k != y.k) return x.k < y.k;
      return x.l < y.l;
    });
    std::vector<HullPoint> lower;
    for (const HullPoint& p : cloud) {
      while (lower.size() >= 2 &&
             hull_cross(lower[lower.size() - 2], lower.back(), p) <= 0)
        lower.pop_back();
      lower.push_back(p);
    }
    return lower;
  }();
  return hull;
}

} // namespace

double E_hull(double A) {
  const auto& hull = word_closure_hull();
  double best = std::numeric_limits<double>::infinity();
  auto margin = [&](const HullPoint& p) { return (4 - A) * p.k + 4 * p.l + 2; };
  for (const HullPoint& p : hull)
    if (p.k > 1e-12 && margin(p) >= 0) best = std::min(best, p.l / p.k);
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    const HullPoint &p = hull[i], &q = hull[i + 1];
    double fp = margin(p), fq = margin(q);
    if ((fp < 0) == (fq < 0)) continue;
    double t = fp / (fp - fq);
    double k = p.k + t * (q.k - p.k), l = p.l + t * (q.l - p.l);
    if (k > 1e-12) best = std::min(best, l / k);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Moments engine

Moments::Moments(SearchParams params, mpfr_prec_t prec) : params_(params), prec_(prec) {}

Estimate Moments::E(const Rational& A) {
  if (A <= 12) fail(errc::out_of_domain, "E(A) requires A > 12");
  return E_impl(A);
}

Estimate Moments::E_impl(const Rational& A) {
  auto it = e_memo_.find(A);
  if (it != e_memo_.end()) return it->second;
  SearchResult r = search(objective_E(A), params_);
  Estimate e{r.value, Real::of(r.value, prec_), std::move(r)};
  e_memo_.emplace(A, e);
  return e;
}

Estimate Moments::E_with_witness(const Rational& A, const Word& w, const Pair& base) {
  if (A <= 12) fail(errc::out_of_domain, "E(A) requires A > 12");
  Objective obj = objective_E(A);
  if (!w.has_tail()) {
    Pair p = exppairs::eval_word(w, base);
    auto v = eval_objective(obj, p);
    if (!v) fail(errc::invalid_argument, "witness pair is infeasible for E(A)");
    SearchResult r{p, exppairs::to_string(w), base, *v, 0};
    return Estimate{*v, Real::of(*v, prec_), std::move(r)};
  }
  // Periodic witness: the attracting pair may sit exactly on the constraint
  // boundary, so the feasibility check gets a 2^-(prec/2) tolerance.
  exppairs::FixedPoint fp = exppairs::fixed_point(w, prec_);
  Real cons = Real::of(obj.constraints[0].g, prec_) * fp.k +
              Real::of(obj.constraints[0].h, prec_) * fp.l +
              Real::of(obj.constraints[0].i, prec_);
  Real tol = Real::of(1L, prec_).ldexp(-static_cast<long>(prec_ / 2));
  if (cons < -tol) fail(errc::invalid_argument, "periodic witness is infeasible for E(A)");
  return Estimate{std::nullopt, fp.l / fp.k, std::nullopt};
}

Estimate Moments::M(const Rational& A) {
  if (A < 4) fail(errc::out_of_domain, "M(A) requires A >= 4");
  if (A <= 12) {
    Rational v = 1 + (A - 4) / 8;
    return Estimate{v, Real::of(v, prec_), std::nullopt};
  }
  if (A > exact_C()) {
    Rational v = 1 + make_rational(13, 84) * (A - 6);
    return Estimate{v, Real::of(v, prec_), std::nullopt};
  }
  Estimate e = E_impl(A);
  Rational lower = make_rational(13, 84) * (A - 6);
  Rational v = 1 + std::max(lower, *e.exact);
  return Estimate{v, Real::of(v, prec_), std::move(e.witness)};
}

Estimate Moments::M_with_witness(const Rational& A, const Word& w, const Pair& base) {
  if (A < 4) fail(errc::out_of_domain, "M(A) requires A >= 4");
  if (A <= 12 || A > exact_C()) return M(A);
  Estimate e = E_with_witness(A, w, base);
  Rational lower = make_rational(13, 84) * (A - 6);
  if (e.exact) {
    Rational v = 1 + std::max(lower, *e.exact);
    return Estimate{v, Real::of(v, prec_), std::move(e.witness)};
  }
  Real lo = Real::of(lower, prec_);
  Real v = (lo > e.approx ? lo : e.approx) + Real::of(1L, prec_);
  return Estimate{std::nullopt, std::move(v), std::nullopt};
}

Estimate Moments::const_C() {
  SearchResult r = search(objective_c(), params_);
  return Estimate{exact_C(), Real::of(exact_C(), prec_), std::move(r)};
}

DResult Moments::const_D(double tol) {
  if (tol <= 0) fail(errc::invalid_argument, "const_D tolerance must be positive");
  if (d_result_ && d_tol_ <= tol) return *d_result_;
  const double C = exact_C().get_d();
  auto f = [&](double D) {
    double E = E_hull(D);
    double M = 1.0 + std::max(13.0 * (D - 6.0) / 84.0, E);
    return (M - 8.0 / 21.0) / D;
  };
  // 0.01-step grid over (12, C], then ternary refinement around the best cell.
  double bestD = C, bestF = f(C);
  for (double D = 12.01; D < C; D += 0.01) {
    double v = f(D);
    if (v < bestF) { bestF = v; bestD = D; }
  }
  double lo = std::max(12.0 + 1e-9, bestD - 0.01);
  double hi = std::min(C, bestD + 0.01);
  while (hi - lo > tol) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2)) hi = m2; else lo = m1;
  }
  double D = (lo + hi) / 2.0;
  double fmin = f(D);
  if (fmin > bestF) { D = bestD; fmin = bestF; }
  DResult r{Real::of(D, prec_), Real::of(13.0 / 84.0 + fmin, prec_), Real::of(fmin, prec_)};
  d_result_ = r;
  d_tol_ = tol;
  return r;
}

Estimate Moments::I(const Rational& A) {
  if (A == 2) return Estimate{Rational(1), Real::of(1L, prec_), std::nullopt};
  if (A == 3) {
    Rational v = make_rational(5, 4);
    return Estimate{v, Real::of(v, prec_), std::nullopt};
  }
  if (A < 4) fail(errc::out_of_domain, "I(A) requires A in {2,3} or A >= 4");
  DResult d = const_D();
  Real Ar = Real::of(A, prec_);
  if (Ar < d.D) {
    Real v = d.slope * Ar + Real::of(make_rational(8, 21), prec_);
    return Estimate{std::nullopt, std::move(v), std::nullopt};
  }
  Estimate m = M(A);
  Rational lin = make_rational(13, 84) * A;
  if (m.exact) {
    Rational v = lin + *m.exact;
    return Estimate{v, Real::of(v, prec_), std::move(m.witness)};
  }
  Real v = Real::of(lin, prec_) + m.approx;
  return Estimate{std::nullopt, std::move(v), std::nullopt};
}

Estimate Moments::error_exponent(unsigned k) {
  if (k < 2) fail(errc::out_of_domain, "error exponent requires k >= 2");
  Estimate i = I(Rational(static_cast<long>(k)));
  if (i.exact) {
    Rational v = 1 - Rational(1) / (2 * *i.exact);
    return Estimate{v, Real::of(v, prec_), std::nullopt};
  }
  Real one = Real::of(1L, prec_);
  Real v = one - one / i.approx.ldexp(1);
  return Estimate{std::nullopt, std::move(v), std::nullopt};
}

Rational Moments::thin_exponent(unsigned k) {
  if (k < 2) fail(errc::out_of_domain, "thin exponent requires k >= 2");
  return make_rational(static_cast<long>(k), static_cast<long>(k) + 1);
}

// ---------------------------------------------------------------------------
// JSON

std::string to_json(const SearchResult& r) {
  nlohmann::json j;
  j["value"] = zm::to_string(r.value);
  j["word"] = r.word;
  j["base"] = exppairs::to_string(r.base);
  j["nodes"] = r.nodes_expanded;
  return j.dump();
}

std::string to_json(const Estimate& e, int digits) {
  nlohmann::json j;
  j["value"] = e.exact ? nlohmann::json(zm::to_string(*e.exact)) : nlohmann::json(nullptr);
  j["approx"] = e.approx.str(digits);
  if (e.witness) {
    j["word"] = e.witness->word;
    j["base"] = exppairs::to_string(e.witness->base);
    j["nodes"] = e.witness->nodes_expanded;
  }
  return j.dump();
}

} // namespace zm::optimize
