#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari {

// Exact dyadic rational num / 2^exp, kept normalized (num odd or exp = 0).
struct Dyadic {
  std::int64_t num = 0;
  int exp = 0;

  static Dyadic of(std::int64_t n, int e);
  static Dyadic integer(std::int64_t n) { return Dyadic{n, 0}; }

  Dyadic half() const { return of(num, exp + 1); }

  friend Dyadic operator+(Dyadic a, Dyadic b);
  friend Dyadic operator-(Dyadic a, Dyadic b);
  friend Dyadic operator*(Dyadic a, Dyadic b);
  Dyadic times_pow2(int k) const;  // multiply by 2^k, k may be negative

  friend bool operator==(Dyadic a, Dyadic b) { return a.num == b.num && a.exp == b.exp; }
  friend bool operator!=(Dyadic a, Dyadic b) { return !(a == b); }
  friend bool operator<(Dyadic a, Dyadic b);
  friend bool operator<=(Dyadic a, Dyadic b) { return a == b || a < b; }

  std::string str() const;  // "k/2^e"
};

// Element of the group as a reduced pair of equal-size trees (neg, pos).
// Multiplication follows the paper's order: fg means f, then g.
struct GroupElement {
  Tree neg;
  Tree pos;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.neg == b.neg && a.pos == b.pos;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
};

GroupElement identity_element();
bool is_identity(const GroupElement& f);

// collapse common carets to the unique reduced pair
GroupElement reduce_pair(const Tree& t, const Tree& u);  // throws SizeMismatchError

GroupElement multiply(const GroupElement& f, const GroupElement& g);
GroupElement inverse_element(const GroupElement& f);

// the element whose action is the (iterated) left rotation of the letter
GroupElement letter_element(const HatLetter& l);
GroupElement eval_word(const SignedWord& w);

// match t against f.neg and substitute into f.pos
Tree act_element(const Tree& t, const GroupElement& f);  // throws UndefinedActionError

// mu(pos) - mu(neg) on the reduced pair
long lambda_of(const GroupElement& f);
long lambda_word(const SignedWord& w);

// Piecewise linear dyadic self-map of [0,1]: graph breakpoints from (0,0)
// to (1,1), slopes integral powers of 2, no redundant breakpoints.
struct DyadicPLMap {
  std::vector<std::pair<Dyadic, Dyadic>> breakpoints;

  friend bool operator==(const DyadicPLMap& a, const DyadicPLMap& b) {
    return a.breakpoints == b.breakpoints;
  }
};

// breakpoints 0 = t_0 < ... < t_{n+1} = 1 of the decomposition of [0,1]
// described by the tree
std::vector<Dyadic> dyadic_decomposition(const Tree& t);

DyadicPLMap to_pl_map(const GroupElement& f);
DyadicPLMap pl_identity();
Dyadic pl_eval(const DyadicPLMap& m, Dyadic t);
// composition in the same order as multiply: first f, then g
DyadicPLMap pl_compose(const DyadicPLMap& f, const DyadicPLMap& g);

}  // namespace tamari
