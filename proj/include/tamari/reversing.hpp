#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tamari/words.hpp"

namespace tamari {

// Result of pushing all negative letters to one side. For right reversing
// the input is equivalent to numerator * denominator^-1, for left reversing
// to denominator^-1 * numerator. Both parts are positive hat words.
struct ReversalOutcome {
  SignedWord numerator;
  SignedWord denominator;
  long steps = 0;

  long numerator_a_length() const { return a_length(numerator); }
  long denominator_a_length() const { return a_length(denominator); }
  long total_a_length() const { return numerator_a_length() + denominator_a_length(); }
};

// The unique pair (v, u) with b*v equivalent to a*u over positive words,
// so that b^-1 a right-reverses to v u^-1 in one step. Each side is empty or
// a single hat letter; total by the trichotomy of addresses.
std::pair<SignedWord, SignedWord> relation_right(const HatLetter& b, const HatLetter& a);

ReversalOutcome reverse_right(const SignedWord& w);
// test hook: same outcome regardless of which reversible pair is picked
ReversalOutcome reverse_right_randomized(const SignedWord& w, std::uint64_t seed);

ReversalOutcome reverse_left(const SignedWord& w);

// irreducible right fraction: right-reverse the left-reversal of w
struct DoubleReversal {
  SignedWord numerator;    // N_er
  SignedWord denominator;  // D_er
};
DoubleReversal double_reverse(const SignedWord& w);

struct LcmResult {
  SignedWord lcm;            // u * u_complement (equivalently v * v_complement)
  SignedWord u_complement;   // word completing u
  SignedWord v_complement;   // word completing v
};

// least common right multiple of two positive words
LcmResult right_lcm(const SignedWord& u, const SignedWord& v);

// does the element of u left-divide the element of v (u, v positive)
bool divides_left(const SignedWord& u, const SignedWord& v);

// greatest common left divisor of two positive words
SignedWord left_gcd(const SignedWord& u, const SignedWord& v);

// completeness witness for a triple of plain letters: reverse a^-1 c c^-1 b
// to v u^-1, then check that v^-1 a^-1 b u reverses to the empty word
bool cube_check(Address a, Address b, Address c);

}  // namespace tamari
