#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exppairs.hpp"

using namespace zm;
using namespace zm::exppairs;

namespace {

Pair rp(long kn, long kd, long ln, long ld) {
  return Pair{make_rational(kn, kd), make_rational(ln, ld)};
}

const Pair kBourgain = rp(13, 84, 55, 84);

// Random pair in the domain: k in [0, 1/2], l in [1/2, 1].
Pair random_pair(std::mt19937_64& rng) {
  long kd = 1 + static_cast<long>(rng() % 1000);
  long kn = static_cast<long>(rng() % (kd + 1));  // k = kn/(2kd) <= 1/2
  long ld = 1 + static_cast<long>(rng() % 1000);
  long ln = static_cast<long>(rng() % (ld + 1));  // l = 1/2 + ln/(2ld)
  return Pair{make_rational(kn, 2 * kd), make_rational(ld + ln, 2 * ld)};
}

std::string word_str(const Word& w) { return exppairs::to_string(w); }

} // namespace

TEST_CASE("A-process on reference pairs") {
  CHECK(apply_A(rp(0, 1, 1, 1)) == rp(0, 1, 1, 1));
  CHECK(apply_A(rp(1, 2, 1, 2)) == rp(1, 6, 2, 3));
  CHECK(apply_A(kBourgain) == rp(13, 194, 76, 97));
}

TEST_CASE("B-process on reference pairs") {
  CHECK(apply_B(rp(0, 1, 1, 1)) == rp(1, 2, 1, 2));
  CHECK(apply_B(kBourgain) == kBourgain);  // l = k + 1/2
  CHECK(apply_B(rp(1, 6, 2, 3)) == rp(1, 6, 2, 3));
}

TEST_CASE("B is an involution and A/B preserve the domain") {
  std::mt19937_64 rng(1123);
  for (int i = 0; i < 600; ++i) {
    Pair p = random_pair(rng);
    REQUIRE(in_domain(p));
    CHECK(apply_B(apply_B(p)) == p);
    CHECK(in_domain(apply_A(p)));
    CHECK(in_domain(apply_B(p)));
  }
}

TEST_CASE("word parsing") {
  Word w = parse_word("(BAA)^3A^2");
  CHECK(word_str(w) == "BAABAABAAAA");
  CHECK_FALSE(w.has_tail());

  CHECK(word_str(parse_word("BA")) == "BA");
  CHECK(word_str(parse_word("")) == "");
  CHECK(word_str(parse_word(" B A ")) == "BA");

  Word t = parse_word("BAA((BA)^2ABAA(BA)^2A^2(BA)^4)^oo");
  CHECK(t.has_tail());
  CHECK(t.finite.size() == 3);
  CHECK(t.tail.size() == 22);
  CHECK(word_str(t) == "BAA(BABAABAABABAAABABABABA)^oo");

  Word a = parse_word("A^oo");
  CHECK(a.finite.empty());
  CHECK(a.tail.size() == 1);
}

TEST_CASE("word parse errors carry positions") {
  CHECK_THROWS_AS(parse_word("AX"), Error);
  CHECK_THROWS_AS(parse_word("(BA"), Error);
  CHECK_THROWS_AS(parse_word("BA)"), Error);
  CHECK_THROWS_AS(parse_word("A^"), Error);
  CHECK_THROWS_AS(parse_word("A^0"), Error);
  CHECK_THROWS_AS(parse_word("(A)^ooB"), Error);   // tail not rightmost
  CHECK_THROWS_AS(parse_word("B^oo"), Error);      // tail without A
  CHECK_THROWS_AS(parse_word("(BB)^oo"), Error);
}

TEST_CASE("parser round-trips the expanded symbol sequence") {
  std::mt19937_64 rng(5);
  const char* atoms[] = {"A", "B", "(BA)^2", "(BAA)^3", "((BA)^2A)^2", "A^4"};
  for (int i = 0; i < 200; ++i) {
    std::string s;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) s += atoms[rng() % 6];
    Word w = parse_word(s);
    Word re = parse_word(word_str(w));
    CHECK(re == w);
  }
}

TEST_CASE("pair literals") {
  Pair p = parse_pair("13/84,55/84");
  CHECK(p == kBourgain);
  CHECK(exppairs::to_string(p) == "13/84,55/84");
  CHECK(parse_pair("0,1") == rp(0, 1, 1, 1));
  CHECK_THROWS_AS(parse_pair("1,1/4"), Error);  // out of domain
  CHECK_THROWS_AS(parse_pair("1/2"), Error);
}

TEST_CASE("word evaluation against hand-computed values") {
  CHECK(eval_word(parse_word(""), kBourgain) == kBourgain);
  CHECK(eval_word(parse_word("A^2"), kBourgain) == rp(13, 414, 359, 414));
  // identity: evaluation applies rightmost first
  Pair ba = eval_word(parse_word("BA"), rp(0, 1, 1, 1));
  CHECK(ba == apply_B(apply_A(rp(0, 1, 1, 1))));
  CHECK_THROWS_AS(eval_word(parse_word("A^oo"), kBourgain), Error);
}

TEST_CASE("the C witness word reproduces the exact constant") {
  Pair p = eval_word(parse_word("BA(A(BAA)^2)^2A^2(BA)^2ABA"), kBourgain);
  Rational obj = (4 * p.k + 4 * p.l + 2) / p.k;
  CHECK(obj == make_rational(16645467, 972266));
}

TEST_CASE("process matrices") {
  // empty word: identity up to scaling
  Mat3 id = word_matrix(parse_word(""));
  Pair p = apply_matrix(id, kBourgain);
  CHECK(p == kBourgain);

  // B twice: scalar multiple of the identity
  Mat3 b2 = word_matrix(parse_word("BB"));
  CHECK(b2.m[0][1] == 0);
  CHECK(b2.m[0][2] == 0);
  CHECK(b2.m[1][0] == 0);
  CHECK(b2.m[0][0] == b2.m[1][1]);
  CHECK(b2.m[0][0] == b2.m[2][2]);
  CHECK(b2.m[0][0] != 0);

  // A on (1/2, 1/2)
  CHECK(apply_matrix(process_matrix(Process::A), rp(1, 2, 1, 2)) == rp(1, 6, 2, 3));
}

TEST_CASE("matrix route equals direct evaluation on random words") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 600; ++i) {
    int len = static_cast<int>(rng() % 31);
    std::string s;
    for (int j = 0; j < len; ++j) s += (rng() & 1) ? 'A' : 'B';
    Word w = parse_word(s);
    Pair base = random_pair(rng);
    CHECK(apply_matrix(word_matrix(w), base) == eval_word(w, base));
  }
}

TEST_CASE("fixed point of the pure-A tail is (0, 1)") {
  FixedPoint fp = fixed_point(parse_word("A^oo"), 160);
  CHECK(fp.k.abs() < Real::parse("1e-40", 160));
  CHECK((fp.l - Real::of(1L, 160)).abs() < Real::parse("1e-40", 160));
}

TEST_CASE("A=16 periodic word yields the reference objective value") {
  FixedPoint fp = fixed_point(parse_word("BAA((BA)^2ABAA(BA)^2A^2(BA)^4)^oo"), 160);
  Real m = Real::of(1L, 160) + fp.l / fp.k;
  CHECK(m.to_double() == doctest::Approx(2.558254).epsilon(1e-6));
}

TEST_CASE("conjugated periodic tails share their limit cycle") {
  // fix(AB) = A(fix(BA)), so BA(AB)^oo and BAA(BA)^oo evaluate identically.
  FixedPoint a = fixed_point(parse_word("BA(AB)^oo"), 192);
  FixedPoint b = fixed_point(parse_word("BAA(BA)^oo"), 192);
  Real tol = Real::of(1L, 192).ldexp(-160);
  CHECK((a.k - b.k).abs() < tol);
  CHECK((a.l - b.l).abs() < tol);
}

TEST_CASE("fixed point is stable under precision doubling") {
  const char* word = "BAA((BA)^2ABAA(BA)^2A^2(BA)^4)^oo";
  for (long prec : {96L, 160L}) {
    FixedPoint lo = fixed_point(parse_word(word), prec);
    FixedPoint hi = fixed_point(parse_word(word), 2 * prec);
    Real bound = Real::of(1L, 2 * prec).ldexp(-(prec - 20));
    CHECK((lo.k - hi.k).abs() < bound);
    CHECK((lo.l - hi.l).abs() < bound);
  }
}
