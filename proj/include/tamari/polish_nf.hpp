#pragma once

#include <optional>

#include "tamari/group.hpp"
#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari {

// First position where the polish encodings of two equal-size trees differ.
// The lex-smaller tree has a leaf letter there, the other a node letter.
struct Clash {
  int position = 0;     // 1-based
  int smaller = 0;      // 0 when the first tree is lex-smaller, else 1
  Address leaf_origin;  // origin of the clash letter in the smaller tree
};

std::optional<Clash> clash(const Tree& t, const Tree& u);  // throws SizeMismatchError

// The unique iterated rotation that moves the clash of (t, u) past its
// position; requires polish(t) lex-below polish(u).
HatLetter polish_step(const Tree& t, const Tree& u);

// The distinguished word S(t, u) with t * S(t, u) == u: a positive block
// followed by a negative block, each step resolving the current clash.
SignedWord polish_run(const Tree& t, const Tree& u);

// polish_run on the reduced pair; the canonical expression of the element
SignedWord normal_form(const GroupElement& f);

// local normality criterion on a positive hat word: each consecutive pair
// (a, r), (a', r') must satisfy a 0^r < a' 1 0^(r'-1) 1 in postorder
bool is_normal(const SignedWord& w);  // throws DomainError on signed input

}  // namespace tamari
