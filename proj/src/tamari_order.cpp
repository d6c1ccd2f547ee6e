#include "tamari/tamari_order.hpp"

#include <algorithm>
#include <cassert>

#include "tamari/polish_nf.hpp"
#include "tamari/reversing.hpp"

namespace tamari {

CoveringRelation covering_of(const Tree& t) {
  CoveringRelation r;
  r.n = t.size();
  r.lo.resize(static_cast<std::size_t>(r.n) + 1);
  auto leaves = leaf_addresses(t);
  for (int j = 0; j <= r.n; ++j) {
    Address a = leaves[static_cast<std::size_t>(j)];
    std::size_t p = a.trailing(1);
    if (p == 0) {
      r.lo[static_cast<std::size_t>(j)] = j;
      continue;
    }
    // j is the last leaf of the subtree above its maximal 1-suffix and
    // covers every other leaf of that subtree
    Address gamma = a.prefix(a.size() - p);
    int subtree_leaves = subtree_at(t, gamma).leaf_count();
    r.lo[static_cast<std::size_t>(j)] = j - (subtree_leaves - 1);
  }
  return r;
}

bool covering_included(const CoveringRelation& a, const CoveringRelation& b) {
  if (a.n != b.n) return false;
  for (int j = 0; j <= a.n; ++j)
    if (a.lo[static_cast<std::size_t>(j)] < b.lo[static_cast<std::size_t>(j)])
      return false;
  return true;
}

CoveringRelation covering_transitive_closure(CoveringRelation r) {
  for (int j = 0; j <= r.n; ++j) {
    int m = r.lo[static_cast<std::size_t>(j)];
    for (int i = j - 1; i >= m; --i)
      m = std::min(m, r.lo[static_cast<std::size_t>(i)]);
    r.lo[static_cast<std::size_t>(j)] = m;
  }
  return r;
}

CoveringRelation covering_union(const CoveringRelation& a, const CoveringRelation& b) {
  assert(a.n == b.n);
  CoveringRelation r;
  r.n = a.n;
  r.lo.resize(a.lo.size());
  for (std::size_t j = 0; j < a.lo.size(); ++j) r.lo[j] = std::min(a.lo[j], b.lo[j]);
  return r;
}

Tree tree_from_covering(const CoveringRelation& r) {
  // letter j is followed by one node letter per immediate cover of j
  PolishWord w;
  for (int j = 0; j <= r.n; ++j) {
    w.text.push_back('x');
    for (int i = r.lo[static_cast<std::size_t>(j)]; i < j; ++i) {
      bool shadowed = false;
      for (int k = i + 1; k < j && !shadowed; ++k)
        if (r.covers(k, i)) shadowed = true;
      if (!shadowed) w.text.push_back('o');
    }
  }
  if (!polish_valid(w))
    throw InconsistentCoveringError("covering relation matches no tree");
  return polish_decode(w);
}

bool leq(const Tree& t, const Tree& u) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  return covering_included(covering_of(t), covering_of(u));
}

namespace {

Tree join_covering(const Tree& t, const Tree& u) {
  CoveringRelation closed =
      covering_transitive_closure(covering_union(covering_of(t), covering_of(u)));
  return tree_from_covering(closed);
}

Tree join_reversing(const Tree& t, const Tree& u) {
  SignedWord ct = c_word(t);
  SignedWord cu = c_word(u);
  ReversalOutcome r = reverse_right(concat(inverse(ct), cu));
  return act(t, r.numerator);
}

Tree join_polish(const Tree& t, const Tree& u) {
  Tree a = t, b = u;
  while (a != b) {
    PolishWord wa = polish_encode(a);
    PolishWord wb = polish_encode(b);
    if (polish_lex_less(wa, wb))
      a = act(a, polish_step(a, b));
    else
      b = act(b, polish_step(b, a));
  }
  return a;
}

}  // namespace

Tree join(const Tree& t, const Tree& u, JoinMethod method) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  if (t == u) return t;
  switch (method) {
    case JoinMethod::polish:
      return join_polish(t, u);
    case JoinMethod::reversing:
      return join_reversing(t, u);
    case JoinMethod::covering:
      return join_covering(t, u);
  }
  return join_covering(t, u);
}

Tree meet(const Tree& t, const Tree& u) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  if (t == u) return t;
  return mirror(join(mirror(t), mirror(u)));
}

SignedWord c_word(const Tree& t, bool primed) {
  PolishWord w = polish_encode(t);
  std::size_t len = w.length();
  std::size_t stop = len;
  if (!primed) {
    // drop the final maximal block of node letters
    while (stop > 0 && w.text[stop - 1] == 'o') --stop;
  }
  SignedWord out;
  long nu = -1;
  for (std::size_t k = 1; k <= len; ++k) {
    if (k >= 2) {
      char prev = w.letter(k - 1), cur = w.letter(k);
      if (prev == 'x' && cur == 'x') ++nu;
      if (prev == 'o' && cur == 'o') --nu;
    }
    if (w.letter(k) == 'o' && k <= stop) {
      assert(nu >= 0);
      out.push_back(gen(Address::ones(static_cast<std::size_t>(nu))));
    }
  }
  return out;
}

unsigned long long catalan(int n) {
  // exact in 64 bits for every n this library enumerates
  unsigned long long c = 1;
  for (int i = 0; i < n; ++i)
    c = c * 2 * (2ull * static_cast<unsigned long long>(i) + 1) /
        (static_cast<unsigned long long>(i) + 2);
  return c;
}

static void enumerate_rec(int n, std::vector<std::vector<Tree>>& memo) {
  if (static_cast<int>(memo.size()) > n) return;
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    std::vector<Tree> trees;
    trees.reserve(static_cast<std::size_t>(catalan(m)));
    for (int k = 0; k < m; ++k)
      for (const Tree& l : memo[static_cast<std::size_t>(k)])
        for (const Tree& r : memo[static_cast<std::size_t>(m - 1 - k)])
          trees.push_back(Tree::node(l, r));
    memo.push_back(std::move(trees));
  }
}

std::vector<Tree> enumerate_trees(int n, int cap) {
  if (n < 0) throw DomainError("negative size");
  if (n > cap)
    throw CapacityError("size " + std::to_string(n) + " above enumeration cap " +
                        std::to_string(cap));
  std::vector<std::vector<Tree>> memo;
  memo.push_back({Tree::leaf()});
  enumerate_rec(n, memo);
  return memo[static_cast<std::size_t>(n)];
}

std::vector<std::pair<Address, Tree>> up_rotations(const Tree& t) {
  std::vector<std::pair<Address, Tree>> out;
  for (Address a : skeleton(t)) {
    if (auto r = try_rotate_left(t, a)) out.emplace_back(a, *r);
  }
  return out;
}

std::vector<std::pair<Tree, Tree>> hasse_edges(int n, int cap) {
  std::vector<std::pair<Tree, Tree>> out;
  for (const Tree& t : enumerate_trees(n, cap))
    for (auto& [a, u] : up_rotations(t)) out.emplace_back(t, u);
  return out;
}

}  // namespace tamari
