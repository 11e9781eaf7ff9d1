#pragma once

// Exponent-pair calculus: the van der Corput A- and B-processes, words over
// {A, B} with an optional periodic tail, exact evaluation, projective-matrix
// evaluation, and attracting pairs of periodic words.
//
//   A(k, l) = ( k/(2k+2), (k+l+1)/(2k+2) )
//   B(k, l) = ( l - 1/2,  k + 1/2 )          (an involution)
//
// Words read left to right; the rightmost symbol is applied to the base pair
// first. A periodic tail "(...)^oo" replaces the base pair by the attracting
// pair of the repeated block.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"
#include "real.hpp"

namespace zm::exppairs {

enum class Process : unsigned char { A, B };

// Exponent pair (k, l) with 0 <= k <= 1/2 <= l <= 1.
struct Pair {
  Rational k, l;
  bool operator==(const Pair& o) const { return k == o.k && l == o.l; }
};

bool in_domain(const Pair& p);
Pair checked_pair(Rational k, Rational l);  // fails on out-of-domain input

Pair apply_A(const Pair& p);
Pair apply_B(const Pair& p);
Pair apply(Process s, const Pair& p);

// Same maps in configurable-precision arithmetic (for fixed points).
void apply_real(Process s, Real& k, Real& l);

struct Word {
  std::vector<Process> finite;  // leftmost symbol applied last
  std::vector<Process> tail;    // periodic block; empty when absent

  bool has_tail() const { return !tail.empty(); }
  bool operator==(const Word& o) const { return finite == o.finite && tail == o.tail; }
};

// Grammar: word := term+ ; term := 'A' | 'B' | '(' word ')' ['^' (int | "oo")].
// Whitespace ignored; "^oo" only on the final (rightmost) term; a periodic
// tail must contain at least one A. Empty input is the identity word.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

// "k,l" with rational components ("13/84,55/84").
Pair parse_pair(std::string_view text);
std::string to_string(const Pair& p);

// Exact composition of the word's processes applied to `base`.
// Rejects words with a periodic tail (use fixed_point).
Pair eval_word(const Word& w, const Pair& base);

// 3x3 integer matrix acting on homogeneous coordinates (k, l, 1).
struct Mat3 {
  Int m[3][3];
};

Mat3 process_matrix(Process s);
Mat3 word_matrix(const Word& w);  // finite words only
Pair apply_matrix(const Mat3& m, const Pair& p);

struct FixedPoint {
  Real k, l;
  std::uint64_t iterations;
};

// Attracting pair of the periodic tail, then the finite part applied on top,
// all at `prec` bits. Iterates from (1/2, 1/2) until successive pairs differ
// by < 2^-(prec-16) componentwise.
FixedPoint fixed_point(const Word& w, mpfr_prec_t prec);

} // namespace zm::exppairs
