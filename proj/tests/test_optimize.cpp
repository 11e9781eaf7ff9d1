#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "optimize.hpp"

using namespace zm;
using namespace zm::optimize;
using zm::exppairs::Pair;
using zm::exppairs::eval_word;
using zm::exppairs::parse_pair;
using zm::exppairs::parse_word;

namespace {

// Small budgets keep the unit suite fast; the acceptance suite runs the
// full-budget searches.
const SearchParams quick{60000, 200, 2, 0};

Rational rat(long n, long d = 1) { return make_rational(n, d); }

} // namespace

TEST_CASE("objective evaluation") {
  Objective lk = objective_lk();
  CHECK(*eval_objective(lk, parse_pair("1/6,2/3")) == rat(4));
  CHECK_FALSE(eval_objective(lk, parse_pair("0,1")).has_value());  // k = 0

  Pair p = eval_word(parse_word("BA(A(BAA)^2)^2A^2(BA)^2ABA"),
                     parse_pair("13/84,55/84"));
  CHECK(*eval_objective(objective_c(), p) == rat(16645467, 972266));

  Objective constrained = objective_E(rat(17));
  CHECK_FALSE(eval_objective(constrained, parse_pair("1/2,1/2")).has_value());
  CHECK(eval_ratio(constrained, parse_pair("1/2,1/2")).has_value());
}

TEST_CASE("objective parsing") {
  Objective o = parse_objective("0,1,0,1,0,0;-13,4,2");
  CHECK(o.b == 1);
  CHECK(o.constraints.size() == 1);
  CHECK(*eval_objective(o, parse_pair("1/6,2/3")) == rat(4));
  CHECK(to_string(o) == "0,1,0,1,0,0;-13,4,2");
  CHECK_THROWS_AS(parse_objective("1,2,3"), Error);
  CHECK_THROWS_AS(parse_objective("1,2,3,0,0,0"), Error);
  CHECK(*eval_objective(parse_objective("lk"), parse_pair("1/6,2/3")) == rat(4));
  CHECK(*eval_objective(parse_objective("mlk"), parse_pair("1/6,2/3")) == rat(5));
}

TEST_CASE("search finds the two-step optimum for l/k under k >= 0") {
  Objective o = objective_lk();
  o.constraints.push_back({rat(1), rat(0), rat(0)});  // k >= 0
  SearchResult r = search(o, SearchParams{10000, 200, 2, 0});
  CHECK(r.value <= rat(4));  // (1/6,2/3) = AB(0,1) reaches l/k = 4 in two steps
  CHECK(*eval_objective(o, r.pair) == r.value);
  CHECK(eval_word(parse_word(r.word), r.base) == r.pair);
}

TEST_CASE("search results are feasible and word-consistent") {
  for (long A : {13, 15, 17}) {
    SearchResult r = search(objective_E(rat(A)), quick);
    CHECK(satisfies_constraints(objective_E(rat(A)), r.pair));
    CHECK(*eval_objective(objective_E(rat(A)), r.pair) == r.value);
    CHECK(eval_word(parse_word(r.word), r.base) == r.pair);
    CHECK(r.nodes_expanded <= quick.budget);
  }
}

TEST_CASE("search is deterministic") {
  SearchResult a = search(objective_E(rat(14)), quick);
  SearchResult b = search(objective_E(rat(14)), quick);
  CHECK(a.value == b.value);
  CHECK(a.word == b.word);
  CHECK(a.nodes_expanded == b.nodes_expanded);
}

TEST_CASE("search is monotone in budget") {
  Objective o = objective_E(rat(15));
  Rational v1 = search(o, SearchParams{20000, 200, 2, 0}).value;
  Rational v2 = search(o, SearchParams{80000, 200, 2, 0}).value;
  CHECK(v2 <= v1);
}

TEST_CASE("unsatisfiable constraint reports infeasible") {
  Objective o = objective_lk();
  o.constraints.push_back({rat(1), rat(0), rat(-1)});  // k >= 1; domain has k <= 1/2
  CHECK_THROWS_AS(search(o, SearchParams{5000, 100, 2, 0}), Error);
}

TEST_CASE("E(17) search approaches 4613/2708") {
  SearchResult r = search(objective_E(rat(17)), quick);
  CHECK(Real::of(r.value - rat(4613, 2708), 96).abs().to_double() <= 1e-3);
}

TEST_CASE("E witness evaluation") {
  Moments eng(quick);
  Estimate e = eng.E_with_witness(rat(17), parse_word("(BAA)^3A^2"),
                                  parse_pair("13/84,55/84"));
  CHECK(*e.exact == rat(4613, 2708));
}

TEST_CASE("M piecewise formula") {
  Moments eng(quick);
  CHECK(*eng.M(rat(4)).exact == rat(1));
  CHECK(*eng.M(rat(12)).exact == rat(2));
  CHECK(*eng.M(rat(8)).exact == rat(3, 2));
  CHECK(*eng.M(rat(100)).exact == rat(653, 42));  // third case, A > C
  CHECK_THROWS_AS(eng.M(rat(3)), Error);

  Estimate m17 = eng.M_with_witness(rat(17), parse_word("(BAA)^3A^2"),
                                    parse_pair("13/84,55/84"));
  CHECK(*m17.exact == rat(7321, 2708));
}

TEST_CASE("exact C verified against its witness word") {
  CHECK(exact_C() == rat(16645467, 972266));
  CHECK(Real::of(exact_C(), 160).to_double() ==
        doctest::Approx(17.120266).epsilon(1e-6));
}

TEST_CASE("const_D lands on the reference constants") {
  Moments eng(quick);
  DResult d = eng.const_D();
  CHECK(std::abs(d.D.to_double() - 12.4868) < 1e-3);
  CHECK(std::abs(d.slope.to_double() - 0.2896) < 5e-4);
  // minimality against the scan endpoints
  double fD = d.f_min.to_double();
  auto f_at = [](double D) {
    double M = 1.0 + std::max(13.0 * (D - 6.0) / 84.0, E_hull(D));
    return (M - 8.0 / 21.0) / D;
  };
  CHECK(f_at(12.01) > fD);
  CHECK(f_at(exact_C().get_d()) > fD);
}

TEST_CASE("I values and domain") {
  Moments eng(quick);
  CHECK(*eng.I(rat(2)).exact == rat(1));
  CHECK(*eng.I(rat(3)).exact == rat(5, 4));
  CHECK(eng.I(rat(4)).approx.to_double() == doctest::Approx(1.5394).epsilon(1e-3));
  CHECK_THROWS_AS(eng.I(rat(7, 2)), Error);
  CHECK_THROWS_AS(eng.I(rat(1)), Error);
}

TEST_CASE("I is continuous at D") {
  // With M(D) shared between the two case formulas the identity
  // slope*D + 8/21 = 13D/84 + M(D) is exact up to rounding.
  Moments eng(quick);
  DResult d = eng.const_D();
  double D = d.D.to_double();
  double M = 1.0 + std::max(13.0 * (D - 6.0) / 84.0, E_hull(D));
  double f = (M - 8.0 / 21.0) / D;
  double first = (13.0 / 84.0 + f) * D + 8.0 / 21.0;
  double second = 13.0 * D / 84.0 + M;
  CHECK(std::abs(first - second) < 1e-9);
}

TEST_CASE("error exponents") {
  Moments eng(quick);
  CHECK(*eng.error_exponent(2).exact == rat(1, 2));
  CHECK(*eng.error_exponent(3).exact == rat(3, 5));
  CHECK(eng.error_exponent(4).approx.to_double() ==
        doctest::Approx(0.6752).epsilon(1e-3));
  CHECK(Moments::thin_exponent(2) == rat(2, 3));
  CHECK(Moments::thin_exponent(3) == rat(3, 4));
  CHECK(Moments::thin_exponent(10) == rat(10, 11));
  CHECK_THROWS_AS(eng.error_exponent(1), Error);
}

TEST_CASE("search JSON shape") {
  SearchResult r = search(objective_E(rat(17)), quick);
  std::string j = to_json(r);
  CHECK(j.find("\"value\"") != std::string::npos);
  CHECK(j.find("\"word\"") != std::string::npos);
  CHECK(j.find("\"base\"") != std::string::npos);
  CHECK(j.find("\"nodes\"") != std::string::npos);
}
