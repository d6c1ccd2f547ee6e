#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tamari/polish_nf.hpp"
#include "tamari/reversing.hpp"
#include "tamari/tamari_order.hpp"
#include "tamari/text_io.hpp"

using namespace tamari;
using tamari::testing::PosetOracle;
using tamari::testing::random_tree;

TEST_SUITE_BEGIN("tamari");

TEST_CASE("covering examples") {
  CoveringRelation left = covering_of(parse_tree("((xx)x)"));
  CHECK(left.covers(1, 0));
  CHECK(left.covers(2, 0));
  CHECK(left.covers(2, 1));
  CoveringRelation right = covering_of(parse_tree("(x(xx))"));
  CHECK(!right.covers(1, 0));
  CHECK(right.covers(2, 0));
  CHECK(right.covers(2, 1));
  CHECK(covering_of(Tree::leaf()).lo == std::vector<int>{0});
}

TEST_CASE("covering round-trip") {
  CHECK(tree_from_covering(covering_of(parse_tree("((xx)x)"))) == parse_tree("((xx)x)"));
  CHECK(tree_from_covering(covering_of(Tree::leaf())) == Tree::leaf());
  std::mt19937_64 rng(127);
  for (int it = 0; it < 200; ++it) {
    Tree t = random_tree(1 + it % 10, rng);
    CHECK(tree_from_covering(covering_of(t)) == t);
  }
}

TEST_CASE("covering relations are transitive with the interval property") {
  std::mt19937_64 rng(131);
  for (int it = 0; it < 100; ++it) {
    Tree t = random_tree(1 + it % 9, rng);
    CoveringRelation r = covering_of(t);
    CHECK(covering_transitive_closure(r) == r);
  }
}

TEST_CASE("leq") {
  CHECK(leq(parse_tree("(x(xx))"), parse_tree("((xx)x)")));
  CHECK(!leq(parse_tree("((xx)x)"), parse_tree("(x(xx))")));
  Tree t = parse_tree("((xx)(xx))");
  CHECK(leq(t, t));
  CHECK(!leq(parse_tree("((xx)(xx))"), parse_tree("(x((xx)x))")));
  CHECK(!leq(parse_tree("(x((xx)x))"), parse_tree("((xx)(xx))")));
  CHECK_THROWS_AS(leq(parse_tree("(xx)"), parse_tree("x")), SizeMismatchError);
}

TEST_CASE("leq agrees with reversing divisibility and the polish run") {
  std::mt19937_64 rng(137);
  for (int it = 0; it < 150; ++it) {
    int n = 2 + it % 5;
    Tree t = random_tree(n, rng);
    Tree u = random_tree(n, rng);
    bool by_covering = leq(t, u);
    bool by_reversing = divides_left(c_word(t), c_word(u));
    bool by_polish = all_positive(polish_run(t, u));
    CHECK(by_covering == by_reversing);
    CHECK(by_covering == by_polish);
  }
}

TEST_CASE("leq agrees with the reachability oracle at small sizes") {
  for (int n = 2; n <= 5; ++n) {
    PosetOracle oracle(n);
    for (const Tree& t : oracle.trees)
      for (const Tree& u : oracle.trees) CHECK(leq(t, u) == oracle.leq(t, u));
  }
}

TEST_CASE("join worked example") {
  Tree t = parse_tree("(x(((x(xx))x)x))");
  Tree u = parse_tree("((x(xx))(x(xx)))");
  Tree want = parse_tree("((((x(xx))x)x)x)");
  CHECK(join(t, u, JoinMethod::polish) == want);
  CHECK(join(t, u, JoinMethod::reversing) == want);
  CHECK(join(t, u, JoinMethod::covering) == want);
  CHECK(join(t, t) == t);
  CHECK(join(parse_tree("((xx)(xx))"), parse_tree("(x((xx)x))")) ==
        parse_tree("(((xx)x)x)"));
}

TEST_CASE("meet examples") {
  CHECK(meet(parse_tree("((xx)(xx))"), parse_tree("(x((xx)x))")) ==
        parse_tree("(x(x(xx)))"));
  Tree t = parse_tree("((xx)(x(xx)))");
  CHECK(meet(t, t) == t);
  for (const Tree& u : enumerate_trees(4))
    CHECK(meet(comb(4, CombSide::right), u) == comb(4, CombSide::right));
}

TEST_CASE("join methods agree on random pairs") {
  std::mt19937_64 rng(139);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + it % 6;
    Tree t = random_tree(n, rng);
    Tree u = random_tree(n, rng);
    Tree a = join(t, u, JoinMethod::polish);
    Tree b = join(t, u, JoinMethod::reversing);
    Tree c = join(t, u, JoinMethod::covering);
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("join and meet against the lattice oracle") {
  for (int n = 2; n <= 5; ++n) {
    PosetOracle oracle(n);
    for (const Tree& t : oracle.trees)
      for (const Tree& u : oracle.trees) {
        auto oj = oracle.join(t, u);
        auto om = oracle.meet(t, u);
        REQUIRE(oj.has_value());
        REQUIRE(om.has_value());
        CHECK(join(t, u) == *oj);
        CHECK(meet(t, u) == *om);
      }
  }
}

TEST_CASE("c words") {
  CHECK(c_word(parse_tree("(x(((x(xx))x)x))")) == parse_word("a[11] a[1] a[1]"));
  CHECK(c_word(parse_tree("((x(xx))(x(xx)))")) == parse_word("a[1] a[]"));
  for (int n = 0; n <= 6; ++n) CHECK(c_word(comb(n, CombSide::right)).empty());
  // contracts: C_n * c_T = T and C_{n+p} * c'_T = T ^ C_{p-1}
  std::mt19937_64 rng(149);
  for (int it = 0; it < 120; ++it) {
    Tree t = random_tree(it % 8, rng);
    int n = t.size();
    CHECK(act(comb(n, CombSide::right), c_word(t)) == t);
    for (int p = 1; p <= 3; ++p) {
      Tree want = Tree::node(t, comb(p - 1, CombSide::right));
      CHECK(act(comb(n + p, CombSide::right), c_word(t, true)) == want);
    }
  }
}

TEST_CASE("enumeration counts") {
  unsigned long long want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) {
    CHECK(catalan(n) == want[n]);
    CHECK(enumerate_trees(n).size() == want[n]);
  }
  CHECK_THROWS_AS(enumerate_trees(15, 14), CapacityError);
}

TEST_CASE("hasse edges are single left rotations") {
  for (int n = 1; n <= 6; ++n) {
    auto edges = hasse_edges(n);
    for (auto& [t, u] : edges) {
      CHECK(leq(t, u));
      CHECK(t != u);
    }
  }
  CHECK(hasse_edges(3).size() == 5);  // the pentagon
}

TEST_CASE("polish words grow along the order") {
  // along every Hasse edge, and for proper covering inclusion
  for (int n = 1; n <= 8; ++n)
    for (auto& [t, u] : hasse_edges(n))
      CHECK(polish_lex_less(polish_encode(t), polish_encode(u)));
  std::mt19937_64 rng(151);
  for (int it = 0; it < 150; ++it) {
    int n = 2 + it % 6;
    Tree t = random_tree(n, rng);
    Tree u = random_tree(n, rng);
    if (t != u && leq(t, u))
      CHECK(polish_lex_less(polish_encode(t), polish_encode(u)));
  }
}

TEST_CASE("divisor poset of the comb word is the lattice") {
  for (int n = 2; n <= 5; ++n) {
    SignedWord top(static_cast<std::size_t>(n - 1), gen(Address()));
    auto trees = enumerate_trees(n);
    for (const Tree& t : trees) {
      CHECK(divides_left(c_word(t), top));
      CHECK(act(comb(n, CombSide::right), c_word(t)) == t);
    }
    for (const Tree& t : trees)
      for (const Tree& u : trees)
        CHECK(divides_left(c_word(t), c_word(u)) == leq(t, u));
  }
}

TEST_CASE("covering growth of an iterated rotation") {
  // the diff of covering relations across t -> t * a^addr,r consists of the
  // pairs (j, i) with add(j) in addr 1 0^(r+1-m) 1* for some m in 1..r and
  // add(i) below addr 0
  std::mt19937_64 rng(157);
  int checked = 0;
  for (int it = 0; it < 800 && checked < 150; ++it) {
    Tree t = random_tree(4 + it % 6, rng);
    auto sk = skeleton(t);
    Address a = sk[rng() % sk.size()];
    int r = 1 + static_cast<int>(rng() % 3);
    auto u = try_act(t, gen(a, r));
    if (!u) continue;
    ++checked;
    CoveringRelation before = covering_of(t);
    CoveringRelation after = covering_of(*u);
    auto leaves = leaf_addresses(t);
    for (int j = 0; j <= t.size(); ++j)
      for (int i = 0; i < j; ++i) {
        bool was = before.covers(j, i);
        bool now = after.covers(j, i);
        bool predicted = false;
        for (int m = 1; m <= r && !predicted; ++m) {
          Address stem = a.append(1).concat(
              Address::zeros(static_cast<std::size_t>(r + 1 - m)));
          Address ja = leaves[static_cast<std::size_t>(j)];
          if (stem.is_prefix_of(ja) && ja.suffix(stem.size()).all(1) &&
              a.append(0).is_prefix_of(leaves[static_cast<std::size_t>(i)]))
            predicted = true;
        }
        CHECK(now == (was || predicted));
      }
  }
  REQUIRE(checked >= 100);
}

TEST_SUITE_END();
