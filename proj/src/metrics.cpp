#include "tamari/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "tamari/reversing.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tamari {

PackedTree pack_tree(const Tree& t) {
  PolishWord w = polish_encode(t);
  PackedTree code = 0;
  for (std::size_t i = 0; i < w.text.size(); ++i)
    if (w.text[i] == 'o') code |= PackedTree{1} << i;
  return code;
}

Tree unpack_tree(PackedTree code, int n) {
  PolishWord w;
  int len = 2 * n + 1;
  w.text.resize(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    w.text[static_cast<std::size_t>(i)] = (code >> i) & 1 ? 'o' : 'x';
  return polish_decode(w);
}

CatalanRanker::CatalanRanker(int n) : n_(n), len_(2 * n + 1) {
  // completions_[k][e]: number of valid letter sequences of length len-k
  // that finish a prefix of excess e (#leaf - #node so far); a node letter
  // needs e >= 2 so that every proper prefix keeps excess >= 1
  completions_.assign(static_cast<std::size_t>(len_) + 1,
                      std::vector<std::uint64_t>(static_cast<std::size_t>(n_) + 2, 0));
  completions_[static_cast<std::size_t>(len_)][1] = 1;
  for (int k = len_ - 1; k >= 0; --k) {
    for (int e = 0; e <= n_ + 1; ++e) {
      std::uint64_t total = 0;
      if (e + 1 <= n_ + 1)
        total += completions_[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(e) + 1];
      if (e >= 2)
        total += completions_[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(e) - 1];
      completions_[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] = total;
    }
  }
}

std::uint64_t CatalanRanker::count() const { return completions_[0][0]; }

std::uint64_t CatalanRanker::rank(PackedTree code) const {
  // leaf letters sort below node letters
  std::uint64_t r = 0;
  int e = 0;
  for (int k = 0; k < len_; ++k) {
    bool node = (code >> k) & 1;
    if (node) {
      if (e + 1 <= n_ + 1)
        r += completions_[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(e) + 1];
      e -= 1;
    } else {
      e += 1;
    }
  }
  return r;
}

PackedTree CatalanRanker::unrank(std::uint64_t rank) const {
  PackedTree code = 0;
  int e = 0;
  for (int k = 0; k < len_; ++k) {
    std::uint64_t with_leaf =
        (e + 1 <= n_ + 1)
            ? completions_[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(e) + 1]
            : 0;
    if (rank < with_leaf) {
      e += 1;
    } else {
      rank -= with_leaf;
      code |= PackedTree{1} << k;
      e -= 1;
    }
  }
  assert(rank == 0);
  return code;
}

namespace {

inline PackedTree remove_bit(PackedTree code, int pos) {
  PackedTree low = code & ((PackedTree{1} << pos) - 1);
  return low | ((code >> (pos + 1)) << pos);
}

inline PackedTree insert_bit(PackedTree code, int pos, bool bit) {
  PackedTree low = code & ((PackedTree{1} << pos) - 1);
  PackedTree high = (code >> pos) << (pos + 1);
  return low | high | (PackedTree{bit} << pos);
}

}  // namespace

void packed_rotations(PackedTree code, int n, bool up_only,
                      std::vector<PackedTree>& out) {
  out.clear();
  int len = 2 * n + 1;
  // one stack pass: for the node at letter k, the left child spans
  // [start[k], right_start[k]-1] and the right child [right_start[k], k-1]
  int right_start[64];
  int start[64];
  int stack[64];
  int top = 0;
  for (int k = 0; k < len; ++k) {
    if (((code >> k) & 1) == 0) {
      start[k] = k;
      stack[top++] = k;
    } else {
      int right = stack[--top];
      int left = stack[--top];
      right_start[k] = right;
      start[k] = left;
      stack[top++] = left;
    }
  }
  for (int k = 0; k < len; ++k) {
    if (((code >> k) & 1) == 0) continue;
    int rs = right_start[k];
    // left rotation: the right child must be a node (its root letter is k-1);
    // that letter moves down to the start of the right child's right part
    if (((code >> (k - 1)) & 1) != 0) {
      int m = right_start[k - 1];
      out.push_back(insert_bit(remove_bit(code, k - 1), m, true));
    }
    // right rotation: the left child must be a node (root letter rs-1);
    // that letter moves up next to the node letter of k
    if (!up_only && ((code >> (rs - 1)) & 1) != 0) {
      out.push_back(insert_bit(remove_bit(code, rs - 1), k - 1, true));
    }
  }
}

RotationGraph build_rotation_graph(int n) {
  CatalanRanker ranker(n);
  std::uint64_t count = ranker.count();
  RotationGraph g;
  g.n = n;
  std::vector<std::vector<std::int32_t>> up(count), down(count);
  std::vector<PackedTree> scratch;
  for (std::uint64_t r = 0; r < count; ++r) {
    PackedTree code = ranker.unrank(r);
    packed_rotations(code, n, true, scratch);
    for (PackedTree nb : scratch) {
      std::uint64_t tr = ranker.rank(nb);
      up[r].push_back(static_cast<std::int32_t>(tr));
      down[tr].push_back(static_cast<std::int32_t>(r));
    }
  }
  auto flatten = [count](const std::vector<std::vector<std::int32_t>>& adj,
                         std::vector<std::int32_t>& offsets,
                         std::vector<std::int32_t>& targets) {
    offsets.resize(count + 1);
    offsets[0] = 0;
    for (std::uint64_t i = 0; i < count; ++i)
      offsets[i + 1] = offsets[i] + static_cast<std::int32_t>(adj[i].size());
    targets.reserve(static_cast<std::size_t>(offsets[count]));
    for (const auto& row : adj)
      targets.insert(targets.end(), row.begin(), row.end());
  };
  flatten(up, g.up_offsets, g.up_targets);
  flatten(down, g.down_offsets, g.down_targets);
  return g;
}

namespace {

void check_cap(int n, int cap) {
  if (n > cap)
    throw CapacityError("size " + std::to_string(n) + " above search cap " +
                        std::to_string(cap));
}

}  // namespace

int dist(const Tree& t, const Tree& u, int cap) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  if (t == u) return 0;
  int n = t.size();
  check_cap(n, cap);

  CatalanRanker ranker(n);
  std::uint64_t count = ranker.count();
  constexpr std::int32_t kUnseen = -1;
  std::vector<std::int32_t> depth_f(count, kUnseen), depth_b(count, kUnseen);
  std::vector<PackedTree> frontier_f{pack_tree(t)}, frontier_b{pack_tree(u)};
  depth_f[ranker.rank(frontier_f[0])] = 0;
  depth_b[ranker.rank(frontier_b[0])] = 0;
  int radius_f = 0, radius_b = 0;
  int best = std::numeric_limits<int>::max();
  std::vector<PackedTree> scratch, next;

  while (!frontier_f.empty() && !frontier_b.empty() &&
         radius_f + radius_b < best) {
    bool forward = frontier_f.size() <= frontier_b.size();
    auto& frontier = forward ? frontier_f : frontier_b;
    auto& mine = forward ? depth_f : depth_b;
    auto& theirs = forward ? depth_b : depth_f;
    int radius = (forward ? ++radius_f : ++radius_b);
    next.clear();
    for (PackedTree code : frontier) {
      packed_rotations(code, n, false, scratch);
      for (PackedTree nb : scratch) {
        std::uint64_t r = ranker.rank(nb);
        if (mine[r] == kUnseen) {
          mine[r] = radius;
          next.push_back(nb);
        }
        if (theirs[r] != kUnseen)
          best = std::min(best, radius + theirs[r]);
      }
    }
    frontier.swap(next);
  }
  assert(best < std::numeric_limits<int>::max());
  return best;
}

int dist_plus(const Tree& t, const Tree& u, int cap) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  if (!leq(t, u)) throw NotComparableError("source is not below target");
  if (t == u) return 0;
  int n = t.size();
  check_cap(n, cap);

  CatalanRanker ranker(n);
  std::vector<std::uint8_t> seen(ranker.count(), 0);
  std::vector<PackedTree> frontier{pack_tree(t)}, next, scratch;
  PackedTree goal = pack_tree(u);
  seen[ranker.rank(frontier[0])] = 1;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (PackedTree code : frontier) {
      packed_rotations(code, n, true, scratch);
      for (PackedTree nb : scratch) {
        if (nb == goal) return depth;
        std::uint64_t r = ranker.rank(nb);
        if (!seen[r]) {
          seen[r] = 1;
          next.push_back(nb);
        }
      }
    }
    frontier.swap(next);
  }
  throw NotComparableError("target not reachable by left rotations");
}

namespace {

int eccentricity_with(const RotationGraph& g, std::uint64_t source_rank,
                      std::vector<std::int32_t>& depth,
                      std::vector<std::int32_t>& frontier,
                      std::vector<std::int32_t>& next) {
  std::fill(depth.begin(), depth.end(), -1);
  frontier.assign(1, static_cast<std::int32_t>(source_rank));
  depth[source_rank] = 0;
  int d = 0;
  while (!frontier.empty()) {
    next.clear();
    for (std::int32_t v : frontier) {
      auto visit = [&](const std::vector<std::int32_t>& offsets,
                       const std::vector<std::int32_t>& targets) {
        for (std::int32_t i = offsets[static_cast<std::size_t>(v)];
             i < offsets[static_cast<std::size_t>(v) + 1]; ++i) {
          std::int32_t w = targets[static_cast<std::size_t>(i)];
          if (depth[static_cast<std::size_t>(w)] < 0) {
            depth[static_cast<std::size_t>(w)] = d + 1;
            next.push_back(w);
          }
        }
      };
      visit(g.up_offsets, g.up_targets);
      visit(g.down_offsets, g.down_targets);
    }
    if (!next.empty()) ++d;
    frontier.swap(next);
  }
  return d;
}

}  // namespace

int eccentricity(const RotationGraph& g, std::uint64_t source_rank) {
  std::vector<std::int32_t> depth(g.node_count());
  std::vector<std::int32_t> frontier, next;
  return eccentricity_with(g, source_rank, depth, frontier, next);
}

int diameter_serial(int n, int cap) {
  check_cap(n, cap);
  if (n <= 1) return 0;
  RotationGraph g = build_rotation_graph(n);
  std::vector<std::int32_t> depth(g.node_count()), frontier, next;
  int best = 0;
  for (std::uint64_t s = 0; s < g.node_count(); ++s)
    best = std::max(best, eccentricity_with(g, s, depth, frontier, next));
  return best;
}

int diameter(int n, int cap) {
  check_cap(n, cap);
  if (n <= 1) return 0;
  RotationGraph g = build_rotation_graph(n);
  std::int64_t nodes = static_cast<std::int64_t>(g.node_count());
  int best = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::int32_t> depth(g.node_count()), frontier, next;
    int local = 0;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t s = 0; s < nodes; ++s)
      local = std::max(local,
                       eccentricity_with(g, static_cast<std::uint64_t>(s), depth,
                                         frontier, next));
#pragma omp critical
    best = std::max(best, local);
  }
#else
  std::vector<std::int32_t> depth(g.node_count()), frontier, next;
  for (std::int64_t s = 0; s < nodes; ++s)
    best = std::max(best, eccentricity_with(g, static_cast<std::uint64_t>(s),
                                            depth, frontier, next));
#endif
  return best;
}

long length_lower_bound(const SignedWord& w) {
  DoubleReversal d = double_reverse(w);
  return weight1(d.numerator) + weight1(d.denominator);
}

WitnessFamily witness_family(int p) {
  if (p < 1) throw DomainError("witness family needs p >= 1");
  WitnessFamily f;
  f.p = p;

  auto alternating = [](int copies) {  // (10)^copies
    Address a;
    for (int i = 0; i < copies; ++i) a = a.append(1).append(0);
    return a;
  };

  for (int k = p; k >= 0; --k)
    f.u_p.push_back(gen(alternating(k), p + 1 - k));

  f.w_p.push_back(gen(alternating(p)));
  for (int k = p - 1; k >= 0; --k) {
    f.w_p.push_back(gen(alternating(k).append(1)).inverse());
    f.w_p.push_back(gen(alternating(k)));
  }

  Address tp_addr = alternating(p).append(1).append(1);
  f.tp = zigzag(tp_addr);
  Address tpp_addr = Address::zeros(static_cast<std::size_t>(p) + 1)
                         .concat(Address::ones(static_cast<std::size_t>(p) + 1));
  f.tp_prime = zigzag(tpp_addr);
  return f;
}

std::pair<Tree, Tree> zigzag_pair(int n) {
  if (n < 3) throw DomainError("zigzag pair needs size >= 3");
  Address a = Address::ones(3);
  int bit = 0;
  while (static_cast<int>(a.size()) < n) {
    a = a.append(bit);
    bit ^= 1;
  }
  return {zigzag(a), zigzag(a.flipped())};
}

RatioReport ratio_experiment(int p, int cap) {
  WitnessFamily f = witness_family(p);
  RatioReport rep;
  rep.p = p;
  rep.tree_size = f.tp.size();
  rep.dist_plus_value = dist_plus(f.tp, f.tp_prime, cap);
  rep.dist_value = dist(f.tp, f.tp_prime, cap);

  SignedWord witness = f.w_p;
  witness.push_back(gen(Address(), p));
  rep.witness_length = a_length(witness);
  auto reached = try_act(f.tp, witness);
  rep.witness_acts = reached && *reached == f.tp_prime;
  // dist <= (12/n) dist_plus, checked in integers
  rep.ratio_bound_holds = static_cast<long>(rep.dist_value) * rep.tree_size <=
                          12L * rep.dist_plus_value;
  return rep;
}

}  // namespace tamari
