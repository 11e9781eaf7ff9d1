#pragma once

// Minimization of linear-fractional objectives over the exponent-pair set
// under half-plane constraints, and the moment quantities built on top of it:
// E(A), M(A), the constants C and D, I(A), and error exponents.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exppairs.hpp"
#include "rational.hpp"
#include "real.hpp"

namespace zm::optimize {

// g*k + h*l + i >= 0
struct Constraint {
  Rational g, h, i;
};

// (a*k + b*l + c) / (d*k + e*l + f), subject to every constraint.
struct Objective {
  Rational a, b, c, d, e, f;
  std::vector<Constraint> constraints;
};

Objective objective_lk();                       // l/k
Objective objective_one_plus_lk();              // (k+l)/k
Objective objective_c();                        // (4k+4l+2)/k with the C constraint
Objective objective_E(const Rational& A);       // l/k with (4-A)k+4l+2 >= 0

// Compact textual form: "lk" | "mlk" | "cobj" | "a,b,c,d,e,f[;g,h,i]...".
Objective parse_objective(std::string_view text);
std::string to_string(const Objective& obj);

// Exact objective value; nullopt encodes +infinity (denominator <= 0 or some
// constraint violated).
std::optional<Rational> eval_objective(const Objective& obj, const exppairs::Pair& p);
// Value ignoring constraints (still nullopt when the denominator is <= 0).
std::optional<Rational> eval_ratio(const Objective& obj, const exppairs::Pair& p);
bool satisfies_constraints(const Objective& obj, const exppairs::Pair& p);

struct SearchParams {
  std::uint64_t budget = 1'000'000;  // node expansions
  unsigned depth_limit = 200;
  // Beam ordering looks ahead through B-completions B A^j (j < lookahead),
  // which sees past the value inflation of A-runs. 0 orders by the bare
  // objective value.
  unsigned lookahead = 2;
  // Beam width; 0 derives budget/50, which favors frontier diversity over
  // raw depth (the reference optima sit at depth <= ~50).
  std::uint64_t width = 0;
};

struct SearchResult {
  exppairs::Pair pair;
  std::string word;       // canonical word mapping base -> pair
  exppairs::Pair base;
  Rational value;
  std::uint64_t nodes_expanded = 0;
};

// Deterministic beam search over canonical words (no BB factor) from the base
// pairs (0,1) and (13/84,55/84). Levels are expanded breadth-first; at each
// depth the `width` best states by unconstrained objective value survive,
// compared exactly with (value, word) tie-breaks. Every generated feasible
// state competes for the reported minimum. Throws no_feasible_point if the
// budget ends with no feasible state seen.
SearchResult search(const Objective& obj, const SearchParams& params);

const std::vector<exppairs::Pair>& search_bases();

// Estimate of a moment quantity: always a real value, exact rational when one
// is available, search witness when one was used.
struct Estimate {
  std::optional<Rational> exact;
  Real approx;
  std::optional<SearchResult> witness;
};

// The exact constant C = 16645467/972266 with its witness word; verified on
// first use by evaluating the word.
const Rational& exact_C();
const exppairs::Word& c_witness_word();
const exppairs::Pair& bourgain_pair();  // (13/84, 55/84)

// Known witness words for the reference moment values at A = 14..17. The
// A = 16 witness is periodic (empty base). A = 13 has no usable closed word;
// its value is located by search.
struct KnownWitness {
  unsigned A;
  const char* word;
  const char* base;     // "k,l" or empty for periodic words
  const char* exact_M;  // "p/q" or empty when the value is irrational
};
const std::vector<KnownWitness>& table1_witnesses();

struct DResult {
  Real D;
  Real slope;   // 13/84 + f(D)
  Real f_min;   // (M(D) - 8/21)/D at the minimizer
};

// E(A) evaluated over the convex hull of the word closure (the exponent-pair
// set is convex, so chords between word pairs are admissible); this is what
// the flat minimization in const_D needs. Double precision.
double E_hull(double A);

// Moment-quantity engine. Owns the search caches; all methods are
// deterministic for fixed parameters.
class Moments {
public:
  explicit Moments(SearchParams params = {}, mpfr_prec_t prec = kDefaultPrec);

  // E(A) = inf l/k over pairs with (4-A)k+4l+2 >= 0; requires A > 12.
  Estimate E(const Rational& A);
  // M(A) per the three-case formula; requires A >= 4. When a witness word is
  // supplied its exact evaluation replaces the searched E(A).
  Estimate M(const Rational& A);
  Estimate M_with_witness(const Rational& A, const exppairs::Word& w,
                          const exppairs::Pair& base);
  Estimate E_with_witness(const Rational& A, const exppairs::Word& w,
                          const exppairs::Pair& base);
  // C as an exact constant plus a fresh search witness.
  Estimate const_C();
  // Minimizes f(D) = (M(D) - 8/21)/D over (12, C] by 0.01-grid scan plus
  // ternary refinement to `tol`.
  DResult const_D(double tol = 1e-6);
  // I(A) for A in {2, 3} or A >= 4.
  Estimate I(const Rational& A);
  // 1 - 1/(2 I(k)), exact for k in {2, 3}.
  Estimate error_exponent(unsigned k);
  // Baseline comparison exponent 1 - 1/(k+1).
  static Rational thin_exponent(unsigned k);

  const SearchParams& params() const { return params_; }
  mpfr_prec_t prec() const { return prec_; }

private:
  Estimate E_impl(const Rational& A);

  SearchParams params_;
  mpfr_prec_t prec_;
  std::map<Rational, Estimate> e_memo_;
  std::optional<DResult> d_result_;
  double d_tol_ = 0;
};

std::string to_json(const SearchResult& r);
std::string to_json(const Estimate& e, int digits);

} // namespace zm::optimize
