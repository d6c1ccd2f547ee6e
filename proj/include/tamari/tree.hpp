#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tamari/address.hpp"
#include "tamari/errors.hpp"

namespace tamari {

// Immutable binary rooted tree; a default-constructed Tree is the leaf.
// size() counts internal nodes, so a size-n tree has n+1 leaves, implicitly
// labeled 0..n from left to right. Subtrees are shared, equality is
// structural.
class Tree {
 public:
  Tree() = default;

  static Tree leaf() { return Tree(); }
  static Tree node(Tree left, Tree right);

  bool is_leaf() const { return node_ == nullptr; }
  int size() const;
  int leaf_count() const { return size() + 1; }

  const Tree& left() const;
  const Tree& right() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Tree::Node {
  Tree left;
  Tree right;
  int size;
};

inline int Tree::size() const { return node_ ? node_->size : 0; }

// Polish encoding of a tree: letters in left-right-root order, 'x' for a
// leaf and 'o' for an internal node. A size-n tree yields 2n+1 letters,
// addressed 1-based. Every proper prefix has strictly more 'x' than 'o'.
struct PolishWord {
  std::string text;

  std::size_t length() const { return text.size(); }
  // 1-based letter access
  char letter(std::size_t k) const { return text.at(k - 1); }
  bool leaf_at(std::size_t k) const { return letter(k) == 'x'; }
};

bool polish_valid(const PolishWord& w);
// lexicographic order with LEAF < NODE (note: this is not ASCII order)
bool polish_lex_less(const PolishWord& a, const PolishWord& b);

PolishWord polish_encode(const Tree& t);
Tree polish_decode(const PolishWord& w);  // throws MalformedPolishError

bool has_address(const Tree& t, Address a);
Tree subtree_at(const Tree& t, Address a);  // throws UndefinedSubtreeError

// all addresses of t, in depth-first preorder; size is 2n+1
std::vector<Address> skeleton(const Tree& t);

Address leaf_address(const Tree& t, int i);  // throws IndexOutOfRangeError
std::vector<Address> leaf_addresses(const Tree& t);

// address of the node/leaf that produced letter k of polish_encode(t)
Address origin_of_position(const Tree& t, int k);

enum class CombSide { left, right };

// right comb = Tamari bottom, left comb = Tamari top
Tree comb(int n, CombSide side);

// zigzag tree of an address: z(empty) = leaf, z(0a) = z(a)^leaf,
// z(1a) = leaf^z(a); its size equals the address length
Tree zigzag(Address a);

// swap children at every node (an involution)
Tree mirror(const Tree& t);

// total number of 0 bits over all leaf addresses
long mu(const Tree& t);

// replace the subtree at `a` (throws UndefinedSubtreeError when absent)
Tree graft(const Tree& t, Address a, const Tree& sub);

// left rotation at a: T0^(T1^T2) -> (T0^T1)^T2; needs a10 in the skeleton
std::optional<Tree> try_rotate_left(const Tree& t, Address a);
// right rotation at a: (T0^T1)^T2 -> T0^(T1^T2); needs a01 in the skeleton
std::optional<Tree> try_rotate_right(const Tree& t, Address a);

// Partial map from leaf index to replacement tree; absent indices stay leaves.
class Substitution {
 public:
  void set(int leaf, Tree t) { entries_[leaf] = std::move(t); }
  std::optional<Tree> get(int leaf) const {
    auto it = entries_.find(leaf);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  bool is_identity() const;
  const std::map<int, Tree>& entries() const { return entries_; }

 private:
  std::map<int, Tree> entries_;
};

// replace each leaf i of t by sigma(i)
Tree substitute(const Tree& t, const Substitution& sigma);

struct Unification {
  Tree unified;       // common instance t^sigma = s^tau
  Substitution sigma;  // indexed by leaves of t
  Substitution tau;    // indexed by leaves of s
};

// Minimal common instance of two trees: any common instance of t and s is an
// instance of the returned tree. Always solvable.
Unification unify(const Tree& t, const Tree& s);

}  // namespace tamari
