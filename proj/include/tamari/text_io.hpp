#pragma once

#include <string>
#include <string_view>

#include "tamari/group.hpp"
#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari {

// Tree grammar: tree := "x" | "(" tree tree ")". The unicode bullet is
// accepted for "x" on input, and the polish alphabet is {x, o} with the
// unicode ring accepted for "o".
Tree parse_tree(std::string_view s);  // throws ParseError
std::string tree_to_string(const Tree& t);

PolishWord parse_polish(std::string_view s);  // throws MalformedPolishError
Tree tree_from_polish_text(std::string_view s);

// addresses print as bit strings, "e" for the empty address
Address parse_address(std::string_view s);  // throws ParseError
std::string address_to_string(Address a);

// word tokens, whitespace separated: a[<bits>] plain, a[<bits>,<r>] hat,
// x<i> for the all-ones generators; a trailing ' inverts a token
SignedWord parse_word(std::string_view s);  // throws ParseError
std::string word_to_string(const SignedWord& w);

XWord parse_xword(std::string_view s);
std::string xword_to_string(const XWord& w);

// canonical JSON forms
std::string tree_to_json(const Tree& t);            // {"polish": "..."}
Tree tree_from_json(std::string_view json_text);
std::string word_to_json(const SignedWord& w);      // [{addr, r, sign}, ...]
SignedWord word_from_json(std::string_view json_text);
std::string pl_map_to_json(const DyadicPLMap& m);   // [[x, y], ...] as "k/2^e"

// DOT renderings: one graph node per skeleton address
std::string tree_to_dot(const Tree& t);

}  // namespace tamari
