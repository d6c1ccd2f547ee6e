#include "tamari/tree.hpp"

#include <algorithm>
#include <cassert>

namespace tamari {

Tree Tree::node(Tree left, Tree right) {
  auto n = std::make_shared<const Node>(
      Node{left, right, left.size() + right.size() + 1});
  return Tree(std::move(n));
}

const Tree& Tree::left() const {
  assert(node_);
  return node_->left;
}

const Tree& Tree::right() const {
  assert(node_);
  return node_->right;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->size != b.node_->size) return false;
  return a.left() == b.left() && a.right() == b.right();
}

bool polish_valid(const PolishWord& w) {
  if (w.text.empty()) return false;
  long excess = 0;
  for (std::size_t i = 0; i < w.text.size(); ++i) {
    char c = w.text[i];
    if (c != 'x' && c != 'o') return false;
    excess += (c == 'x') ? 1 : -1;
    if (i + 1 < w.text.size() && excess < 1) return false;
  }
  return excess == 1;
}

bool polish_lex_less(const PolishWord& a, const PolishWord& b) {
  // LEAF ('x') sorts before NODE ('o')
  std::size_t n = std::min(a.text.size(), b.text.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.text[i] != b.text[i]) return a.text[i] == 'x';
  }
  return a.text.size() < b.text.size();
}

static void encode_rec(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out.push_back('x');
    return;
  }
  encode_rec(t.left(), out);
  encode_rec(t.right(), out);
  out.push_back('o');
}

PolishWord polish_encode(const Tree& t) {
  PolishWord w;
  w.text.reserve(static_cast<std::size_t>(2 * t.size() + 1));
  encode_rec(t, w.text);
  return w;
}

Tree polish_decode(const PolishWord& w) {
  if (!polish_valid(w))
    throw MalformedPolishError("malformed polish word: " + w.text);
  std::vector<Tree> stack;
  for (char c : w.text) {
    if (c == 'x') {
      stack.push_back(Tree::leaf());
    } else {
      Tree right = stack.back();
      stack.pop_back();
      Tree left = stack.back();
      stack.pop_back();
      stack.push_back(Tree::node(left, right));
    }
  }
  return stack.back();
}

bool has_address(const Tree& t, Address a) {
  const Tree* cur = &t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cur->is_leaf()) return false;
    cur = a.bit(i) == 0 ? &cur->left() : &cur->right();
  }
  return true;
}

Tree subtree_at(const Tree& t, Address a) {
  const Tree* cur = &t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cur->is_leaf())
      throw UndefinedSubtreeError("address not in the skeleton");
    cur = a.bit(i) == 0 ? &cur->left() : &cur->right();
  }
  return *cur;
}

static void skeleton_rec(const Tree& t, Address at, std::vector<Address>& out) {
  out.push_back(at);
  if (t.is_leaf()) return;
  skeleton_rec(t.left(), at.append(0), out);
  skeleton_rec(t.right(), at.append(1), out);
}

std::vector<Address> skeleton(const Tree& t) {
  std::vector<Address> out;
  out.reserve(static_cast<std::size_t>(2 * t.size() + 1));
  skeleton_rec(t, Address(), out);
  return out;
}

Address leaf_address(const Tree& t, int i) {
  if (i < 0 || i > t.size())
    throw IndexOutOfRangeError("leaf index out of range");
  const Tree* cur = &t;
  Address at;
  while (!cur->is_leaf()) {
    int nl = cur->left().leaf_count();
    if (i < nl) {
      at = at.append(0);
      cur = &cur->left();
    } else {
      i -= nl;
      at = at.append(1);
      cur = &cur->right();
    }
  }
  return at;
}

static void leaves_rec(const Tree& t, Address at, std::vector<Address>& out) {
  if (t.is_leaf()) {
    out.push_back(at);
    return;
  }
  leaves_rec(t.left(), at.append(0), out);
  leaves_rec(t.right(), at.append(1), out);
}

std::vector<Address> leaf_addresses(const Tree& t) {
  std::vector<Address> out;
  out.reserve(static_cast<std::size_t>(t.leaf_count()));
  leaves_rec(t, Address(), out);
  return out;
}

Address origin_of_position(const Tree& t, int k) {
  int len = 2 * t.size() + 1;
  if (k < 1 || k > len) throw IndexOutOfRangeError("polish position out of range");
  if (k == len) return Address();
  const Tree* cur = &t;
  Address at;
  for (;;) {
    int left_len = 2 * cur->left().size() + 1;
    if (k <= left_len) {
      at = at.append(0);
      cur = &cur->left();
    } else {
      k -= left_len;
      at = at.append(1);
      cur = &cur->right();
    }
    if (k == 2 * cur->size() + 1) return at;
  }
}

Tree comb(int n, CombSide side) {
  Tree t = Tree::leaf();
  for (int i = 0; i < n; ++i)
    t = side == CombSide::right ? Tree::node(Tree::leaf(), t)
                                : Tree::node(t, Tree::leaf());
  return t;
}

Tree zigzag(Address a) {
  Tree t = Tree::leaf();
  for (std::size_t i = a.size(); i-- > 0;) {
    t = a.bit(i) == 0 ? Tree::node(t, Tree::leaf())
                      : Tree::node(Tree::leaf(), t);
  }
  return t;
}

Tree mirror(const Tree& t) {
  if (t.is_leaf()) return t;
  return Tree::node(mirror(t.right()), mirror(t.left()));
}

static long mu_rec(const Tree& t, long zeros_above) {
  if (t.is_leaf()) return zeros_above;
  return mu_rec(t.left(), zeros_above + 1) + mu_rec(t.right(), zeros_above);
}

long mu(const Tree& t) { return mu_rec(t, 0); }

Tree graft(const Tree& t, Address a, const Tree& sub) {
  if (a.empty()) return sub;
  if (t.is_leaf()) throw UndefinedSubtreeError("graft address not in skeleton");
  if (a.bit(0) == 0)
    return Tree::node(graft(t.left(), a.suffix(1), sub), t.right());
  return Tree::node(t.left(), graft(t.right(), a.suffix(1), sub));
}

std::optional<Tree> try_rotate_left(const Tree& t, Address a) {
  if (!has_address(t, a)) return std::nullopt;
  Tree s = subtree_at(t, a);
  if (s.is_leaf() || s.right().is_leaf()) return std::nullopt;
  Tree rotated = Tree::node(Tree::node(s.left(), s.right().left()),
                            s.right().right());
  return graft(t, a, rotated);
}

std::optional<Tree> try_rotate_right(const Tree& t, Address a) {
  if (!has_address(t, a)) return std::nullopt;
  Tree s = subtree_at(t, a);
  if (s.is_leaf() || s.left().is_leaf()) return std::nullopt;
  Tree rotated = Tree::node(s.left().left(),
                            Tree::node(s.left().right(), s.right()));
  return graft(t, a, rotated);
}

bool Substitution::is_identity() const {
  for (const auto& [i, t] : entries_)
    if (!t.is_leaf()) return false;
  return true;
}

static Tree substitute_rec(const Tree& t, const Substitution& sigma, int& leaf) {
  if (t.is_leaf()) {
    auto r = sigma.get(leaf);
    ++leaf;
    return r ? *r : Tree::leaf();
  }
  Tree l = substitute_rec(t.left(), sigma, leaf);
  Tree r = substitute_rec(t.right(), sigma, leaf);
  return Tree::node(l, r);
}

Tree substitute(const Tree& t, const Substitution& sigma) {
  int leaf = 0;
  return substitute_rec(t, sigma, leaf);
}

static Tree unify_rec(const Tree& t, const Tree& s, int& ti, int& si,
                      Substitution& sigma, Substitution& tau) {
  if (t.is_leaf() && s.is_leaf()) {
    ++ti;
    ++si;
    return Tree::leaf();
  }
  if (t.is_leaf()) {
    sigma.set(ti, s);
    ++ti;
    si += s.leaf_count();
    return s;
  }
  if (s.is_leaf()) {
    tau.set(si, t);
    ++si;
    ti += t.leaf_count();
    return t;
  }
  Tree l = unify_rec(t.left(), s.left(), ti, si, sigma, tau);
  Tree r = unify_rec(t.right(), s.right(), ti, si, sigma, tau);
  return Tree::node(l, r);
}

Unification unify(const Tree& t, const Tree& s) {
  Unification u;
  int ti = 0, si = 0;
  u.unified = unify_rec(t, s, ti, si, u.sigma, u.tau);
  return u;
}

}  // namespace tamari
