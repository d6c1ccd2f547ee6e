#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari {

// Covering relation of a size-n tree: j covers i when leaf j closes a
// subtree in which leaf i sits on the 0 side. For each j the covered set is
// the interval [lo[j], j-1], stored as its lower end (lo[j] == j encodes the
// empty set). The relation is transitive and determines the tree.
struct CoveringRelation {
  int n = 0;
  std::vector<int> lo;  // size n+1, lo[j] in [0..j]

  bool covers(int j, int i) const {
    return 0 <= i && i < j && j <= n && lo[static_cast<std::size_t>(j)] <= i;
  }
  friend bool operator==(const CoveringRelation& a, const CoveringRelation& b) {
    return a.n == b.n && a.lo == b.lo;
  }
};

CoveringRelation covering_of(const Tree& t);

// is every pair of a also a pair of b
bool covering_included(const CoveringRelation& a, const CoveringRelation& b);

CoveringRelation covering_transitive_closure(CoveringRelation r);
CoveringRelation covering_union(const CoveringRelation& a, const CoveringRelation& b);

// rebuild the unique tree with the given covering relation
Tree tree_from_covering(const CoveringRelation& r);  // throws InconsistentCoveringError

// Tamari order via covering inclusion; throws SizeMismatchError
bool leq(const Tree& t, const Tree& u);

enum class JoinMethod { polish, reversing, covering };

Tree join(const Tree& t, const Tree& u, JoinMethod method = JoinMethod::covering);
Tree meet(const Tree& t, const Tree& u);

// positive word of all-ones-address letters built from the polish encoding;
// the plain variant satisfies comb(n, right) * c_word(t) == t, the primed
// one comb(n+p, right) * c'_word(t) == t ^ comb(p-1, right) for p >= 1
SignedWord c_word(const Tree& t, bool primed = false);

inline constexpr int kDefaultEnumCap = 14;

unsigned long long catalan(int n);

// all size-n trees; throws CapacityError beyond the cap
std::vector<Tree> enumerate_trees(int n, int cap = kDefaultEnumCap);

// every pair (T, T * a_alpha), i.e. the Hasse edges of the lattice
std::vector<std::pair<Tree, Tree>> hasse_edges(int n, int cap = kDefaultEnumCap);

// left rotations available from t, as (address, result) pairs
std::vector<std::pair<Address, Tree>> up_rotations(const Tree& t);

}  // namespace tamari
