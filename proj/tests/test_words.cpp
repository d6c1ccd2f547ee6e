#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tamari/group.hpp"
#include "tamari/text_io.hpp"
#include "tamari/words.hpp"

using namespace tamari;
using tamari::testing::random_tree;

TEST_SUITE_BEGIN("words");

TEST_CASE("word parsing round-trip") {
  const char* forms[] = {"a[] a[0]", "a[10,2]' a[1]", "a[,3] a[11]'"};
  for (const char* f : forms) CHECK(word_to_string(parse_word(f)) == f);
  CHECK(parse_word("x0 x2'") ==
        SignedWord{gen(Address()), gen(Address::ones(2)).inverse()});
  CHECK_THROWS_AS(parse_word("a[2]"), ParseError);
  CHECK_THROWS_AS(parse_word("a[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_word("b[0]"), ParseError);
  SignedWord w = parse_word("a[10,2]' a[]");
  CHECK(word_from_json(word_to_json(w)) == w);
}

TEST_CASE("expand") {
  CHECK(expand(gen(Address(), 2)) == parse_word("a[] a[0]"));
  CHECK(expand(gen(parse_address("10"))) == parse_word("a[10]"));
  CHECK(expand(gen(Address(), 2).inverse()) == parse_word("a[0]' a[]'"));
  CHECK(expand(gen(parse_address("1"), 3)) == parse_word("a[1] a[10] a[100]"));
}

TEST_CASE("shift") {
  CHECK(shift(parse_word("a[] a[1]"), parse_address("0")) == parse_word("a[0] a[01]"));
  CHECK(shift(SignedWord{}, parse_address("0")).empty());
  CHECK(shift(parse_word("a[1]'"), parse_address("11")) == parse_word("a[111]'"));
}

TEST_CASE("act on trees") {
  CHECK(act(parse_tree("(x(xx))"), parse_word("a[]")) == parse_tree("((xx)x)"));
  CHECK_THROWS_AS(act(parse_tree("((xx)x)"), parse_word("a[]")), UndefinedActionError);
  CHECK(act(parse_tree("(x((xx)x))"), parse_word("a[,2]")) ==
        comb(3, CombSide::left));
  // undefined action reports the first failing letter
  try {
    act(comb(3, CombSide::right), parse_word("a[] a[] a[] a[]"));
    FAIL("expected UndefinedActionError");
  } catch (const UndefinedActionError& e) {
    CHECK(e.letter_index == 2);
  }
}

TEST_CASE("hat action closed form equals letterwise expansion") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> bit_d(0, 1), r_d(1, 4), size_d(6, 12);
  for (int it = 0; it < 400; ++it) {
    Address a;
    int len = it % 4;
    for (int i = 0; i < len; ++i) a = a.append(bit_d(rng));
    HatLetter l = gen(a, r_d(rng));
    Tree t = random_tree(size_d(rng), rng);
    auto closed = try_act(t, l);
    auto stepwise = try_act(t, expand(l));
    CHECK(closed.has_value() == stepwise.has_value());
    if (closed && stepwise) CHECK(*closed == *stepwise);
  }
}

TEST_CASE("weight1") {
  CHECK(weight1(parse_word("a[1]' a[]")) == 2);
  CHECK(weight1(parse_word("a[00] a[01]")) == 0);
  CHECK(weight1(parse_word("a[1,3]")) == 1);
  CHECK(weight1(SignedWord{}) == 0);
}

TEST_CASE("x translation anchors") {
  CHECK(x_to_a(parse_xword("x0")) == parse_word("a[]"));
  CHECK(x_to_a(parse_xword("x1")) == parse_word("a[1]"));
  // relation instances of the x presentation hold under the action
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < n; ++i) {
      GroupElement lhs = eval_word(x_to_a({XLetter{n + 1, 1}, XLetter{i, 1}}));
      GroupElement rhs = eval_word(x_to_a({XLetter{i, 1}, XLetter{n, 1}}));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("a_to_x is action-correct and round-trips") {
  // frozen translation of the worked address 01100
  CHECK(xword_to_string(a_to_x(parse_address("01100"))) ==
        "x0' x1' x2' x2' x2' x3' x2 x2 x2 x2 x1 x0");
  const char* addrs[] = {"0",  "00",   "000",  "01",     "001", "10",
                         "10", "0100", "1100", "110010", "01100"};
  for (const char* s : addrs) {
    Address a = parse_address(s);
    GroupElement direct = eval_word(SignedWord{gen(a)});
    CHECK(eval_word(x_to_a(a_to_x(a))) == direct);
  }
  CHECK(a_to_x(Address::ones(3)) == parse_xword("x3"));
}

TEST_CASE("relation instances") {
  auto rels = relation_instances(2);
  auto contains = [&](const char* u, const char* v) {
    SignedWord wu = parse_word(u), wv = parse_word(v);
    for (auto& [a, b] : rels)
      if ((a == wu && b == wv) || (a == wv && b == wu)) return true;
    return false;
  };
  CHECK(contains("a[] a[]", "a[1] a[] a[0]"));          // pentagon at the root
  CHECK(contains("a[0] a[1]", "a[1] a[0]"));            // commutation
  CHECK(contains("a[11] a[]", "a[] a[1]"));             // quasi-commutation
  CHECK(contains("a[10] a[]", "a[] a[01]"));
  CHECK(contains("a[0] a[]", "a[] a[00]"));
}

TEST_CASE("relation instances act identically") {
  // a full tree keeps every relation with short addresses defined
  Tree deep = Tree::leaf();
  for (int d = 0; d < 6; ++d) deep = Tree::node(deep, deep);
  std::mt19937_64 rng(43);
  std::vector<Tree> samples;
  for (int i = 0; i < 8; ++i) samples.push_back(random_tree(7, rng));
  for (auto& [u, v] : relation_instances(2)) {
    Tree a = act(deep, u);
    Tree b = act(deep, v);
    CHECK(a == b);
    for (const Tree& t : samples) {
      auto x = try_act(t, u);
      auto y = try_act(t, v);
      if (x && y) CHECK(*x == *y);
    }
  }
}

TEST_CASE("shift naturality") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 100; ++it) {
    Tree sub = random_tree(5 + it % 5, rng);
    SignedWord w = tamari::testing::random_acting_word(sub, 4, rng);
    Tree whole = Tree::node(Tree::leaf(), sub);
    auto shifted = try_act(whole, shift(w, parse_address("1")));
    REQUIRE(shifted.has_value());
    CHECK(*shifted == Tree::node(Tree::leaf(), act(sub, w)));
  }
}

TEST_CASE("inverse and a_length") {
  SignedWord w = parse_word("a[] a[10,2]'");
  CHECK(inverse(w) == parse_word("a[10,2] a[]'"));
  CHECK(inverse(inverse(w)) == w);
  CHECK(a_length(w) == 3);
  CHECK(a_length(SignedWord{}) == 0);
}

TEST_SUITE_END();
