#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamari/tamari_order.hpp"
#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari {

// Packed polish encoding of a size-n tree: bit k set when letter k+1 is a
// node. 2n+1 bits, so sizes up to 31 fit in one word.
using PackedTree = std::uint64_t;

PackedTree pack_tree(const Tree& t);
Tree unpack_tree(PackedTree code, int n);

// Lexicographic rank of a packed tree among all size-n trees, a bijection
// onto [0, catalan(n)). Backed by a ballot-number table.
class CatalanRanker {
 public:
  explicit CatalanRanker(int n);
  int tree_size() const { return n_; }
  std::uint64_t count() const;
  std::uint64_t rank(PackedTree code) const;
  PackedTree unrank(std::uint64_t rank) const;

 private:
  int n_;
  int len_;
  // completions[k][e]: words completing a prefix of length k with excess e
  std::vector<std::vector<std::uint64_t>> completions_;
};

// neighbors of a packed tree in the rotation graph
void packed_rotations(PackedTree code, int n, bool up_only,
                      std::vector<PackedTree>& out);

// Explicit rotation graph on all size-n trees, nodes indexed by rank.
struct RotationGraph {
  int n = 0;
  std::vector<std::int32_t> up_offsets, up_targets;      // left rotations
  std::vector<std::int32_t> down_offsets, down_targets;  // right rotations
  std::size_t node_count() const { return up_offsets.size() - 1; }
};

RotationGraph build_rotation_graph(int n);

inline constexpr int kDefaultDistCap = 12;
inline constexpr int kDefaultDiameterCap = 10;

// minimal number of rotations, by bidirectional breadth-first search
int dist(const Tree& t, const Tree& u, int cap = kDefaultDistCap);

// minimal number of left rotations; requires t <= u in the Tamari order
int dist_plus(const Tree& t, const Tree& u, int cap = kDefaultDistCap);

// max eccentricity over all sources; the parallel kernel fans out
// per-source searches, the serial variant is the reference
int diameter(int n, int cap = kDefaultDiameterCap);
int diameter_serial(int n, int cap = kDefaultDiameterCap);

// eccentricity of one source on a prebuilt graph (serial kernel)
int eccentricity(const RotationGraph& g, std::uint64_t source_rank);

// weight-1 count of the irreducible fraction, a lower bound for the
// syntactic length of the element of w
long length_lower_bound(const SignedWord& w);

// The length-separating family: u_p is the positive hat word
// a^(10)^p,1 a^(10)^(p-1),2 ... a^∅,p+1 and w_p a signed word of length
// 2p+1 that right-reverses to u_p * (a^∅,p)^-1. The trees satisfy
// tp * u_p == tp_prime.
struct WitnessFamily {
  int p = 0;
  SignedWord u_p;
  SignedWord w_p;
  Tree tp;
  Tree tp_prime;
};

WitnessFamily witness_family(int p);

// zigzag pair of size n (n >= 3): periodic addresses 111(01)... and its
// 0/1 mirror image
std::pair<Tree, Tree> zigzag_pair(int n);

struct RatioReport {
  int p = 0;
  int tree_size = 0;
  int dist_plus_value = 0;        // BFS over left rotations
  int dist_value = 0;             // BFS over both directions
  long witness_length = 0;        // 3p+1 path via w_p then a^∅,p
  bool witness_acts = false;      // witness word transforms tp to tp_prime
  bool ratio_bound_holds = false; // dist <= (12/n) dist_plus
};

RatioReport ratio_experiment(int p, int cap = kDefaultDistCap);

}  // namespace tamari
