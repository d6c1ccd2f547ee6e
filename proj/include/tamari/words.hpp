#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tamari/tree.hpp"

namespace tamari {

// One generator of the extended alphabet: addr/r with r = 1 is the plain
// rotation generator, larger r the iterated one whose expansion is the
// product of the plain letters at addr, addr0, ..., addr0^(r-1).
struct HatLetter {
  Address addr;
  int r = 1;
  int sign = +1;

  bool plain() const { return r == 1; }
  HatLetter inverse() const { return {addr, r, -sign}; }

  friend bool operator==(const HatLetter& a, const HatLetter& b) {
    return a.addr == b.addr && a.r == b.r && a.sign == b.sign;
  }
  friend bool operator!=(const HatLetter& a, const HatLetter& b) {
    return !(a == b);
  }
};

inline HatLetter gen(Address a) { return HatLetter{a, 1, +1}; }
inline HatLetter gen(Address a, int r) { return HatLetter{a, r, +1}; }

using SignedWord = std::vector<HatLetter>;

// expansion in plain letters; a negative letter expands in reversed order
// with every factor negated
SignedWord expand(const HatLetter& l);
SignedWord expand(const SignedWord& w);

// formal inverse: reversed order, flipped signs
SignedWord inverse(const SignedWord& w);

// prefix every letter address with `a` (the shift endomorphism)
SignedWord shift(const SignedWord& w, Address a);

SignedWord concat(SignedWord a, const SignedWord& b);

// length of the expansion in plain letters
long a_length(const SignedWord& w);

bool all_positive(const SignedWord& w);
bool all_plain(const SignedWord& w);

// number of expanded letters whose address lies in {1}*
long weight1(const HatLetter& l);
long weight1(const SignedWord& w);

// reversed order with 0 and 1 exchanged in every address; hat letters are
// expanded first since their mirrors are not hat letters
SignedWord mirror_word(const SignedWord& w);

// Partial action on trees. A positive plain letter is the left rotation at
// its address, a negative one the right rotation. A positive hat letter acts
// by the closed form (equal to its letterwise expansion); negative hat
// letters act by expansion.
std::optional<Tree> try_act(const Tree& t, const HatLetter& l);
Tree act(const Tree& t, const HatLetter& l);  // throws UndefinedActionError
Tree act(const Tree& t, const SignedWord& w); // reports first failing letter
std::optional<Tree> try_act(const Tree& t, const SignedWord& w);

// X generators: x_i corresponds to the plain letter at address 1^i.
struct XLetter {
  int index = 0;
  int sign = +1;
  friend bool operator==(const XLetter& a, const XLetter& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};
using XWord = std::vector<XLetter>;

SignedWord x_to_a(const XWord& xs);
// expression of the generator at `a` as an X word
XWord a_to_x(Address a);

// all defining relation instances whose addresses have length <= max_len:
// commutations, the three quasi-commutation families, and pentagons
std::vector<std::pair<SignedWord, SignedWord>> relation_instances(int max_len);

}  // namespace tamari
