#pragma once

#include <optional>
#include <random>
#include <vector>

#include "tamari/group.hpp"
#include "tamari/tamari_order.hpp"
#include "tamari/tree.hpp"
#include "tamari/words.hpp"

namespace tamari::testing {

// uniform random tree of the given size, by Catalan-weighted splitting
inline Tree random_tree(int n, std::mt19937_64& rng) {
  if (n == 0) return Tree::leaf();
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    weights[static_cast<std::size_t>(k)] =
        static_cast<double>(catalan(k)) * static_cast<double>(catalan(n - 1 - k));
  std::discrete_distribution<int> split(weights.begin(), weights.end());
  int k = split(rng);
  return Tree::node(random_tree(k, rng), random_tree(n - 1 - k, rng));
}

// random signed plain word with addresses of bounded length
inline SignedWord random_word(int letters, int max_addr_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_d(0, max_addr_len);
  std::uniform_int_distribution<int> bit_d(0, 1);
  SignedWord w;
  for (int i = 0; i < letters; ++i) {
    Address a;
    int len = len_d(rng);
    for (int j = 0; j < len; ++j) a = a.append(bit_d(rng));
    w.push_back(HatLetter{a, 1, bit_d(rng) ? 1 : -1});
  }
  return w;
}

// random word guaranteed to act on t: a walk picking defined rotations
inline SignedWord random_acting_word(const Tree& t, int letters, std::mt19937_64& rng) {
  SignedWord w;
  Tree cur = t;
  std::uniform_int_distribution<int> bit_d(0, 1);
  for (int i = 0; i < letters; ++i) {
    std::vector<HatLetter> options;
    for (Address a : skeleton(cur)) {
      if (try_rotate_left(cur, a)) options.push_back(gen(a));
      if (try_rotate_right(cur, a)) options.push_back(gen(a).inverse());
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    HatLetter l = options[pick(rng)];
    w.push_back(l);
    cur = act(cur, l);
  }
  return w;
}

// Reachability oracle over the rotation Hasse diagram, independent of the
// covering/c-word/polish machinery: closure of single left rotations.
struct PosetOracle {
  std::vector<Tree> trees;
  std::vector<std::vector<bool>> below;  // below[i][j]: trees[i] <= trees[j]

  explicit PosetOracle(int n) {
    trees = enumerate_trees(n);
    std::size_t c = trees.size();
    auto index_of = [&](const Tree& t) {
      for (std::size_t i = 0; i < c; ++i)
        if (trees[i] == t) return i;
      throw std::logic_error("tree missing from enumeration");
    };
    below.assign(c, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < c; ++i) below[i][i] = true;
    // transitive closure by repeated relaxation over Hasse edges
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < c; ++i)
      for (auto& [a, u] : up_rotations(trees[i])) edges.emplace_back(i, index_of(u));
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [i, j] : edges)
        for (std::size_t k = 0; k < c; ++k)
          if (below[j][k] && !below[i][k]) {
            below[i][k] = true;
            changed = true;
          }
    }
  }

  std::size_t index_of(const Tree& t) const {
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (trees[i] == t) return i;
    throw std::logic_error("tree missing from enumeration");
  }

  bool leq(const Tree& a, const Tree& b) const {
    return below[index_of(a)][index_of(b)];
  }

  // least upper bound by scanning all common upper bounds
  std::optional<Tree> join(const Tree& a, const Tree& b) const {
    std::size_t ia = index_of(a), ib = index_of(b);
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < trees.size(); ++k) {
      if (!below[ia][k] || !below[ib][k]) continue;
      if (!best || below[k][*best]) best = k;
    }
    if (!best) return std::nullopt;
    // verify minimality: every common upper bound sits above it
    for (std::size_t k = 0; k < trees.size(); ++k)
      if (below[ia][k] && below[ib][k] && !below[*best][k]) return std::nullopt;
    return trees[*best];
  }

  std::optional<Tree> meet(const Tree& a, const Tree& b) const {
    std::size_t ia = index_of(a), ib = index_of(b);
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < trees.size(); ++k) {
      if (!below[k][ia] || !below[k][ib]) continue;
      if (!best || below[*best][k]) best = k;
    }
    if (!best) return std::nullopt;
    for (std::size_t k = 0; k < trees.size(); ++k)
      if (below[k][ia] && below[k][ib] && !below[k][*best]) return std::nullopt;
    return trees[*best];
  }
};

// shortest signed word moving t to u, by iterative deepening over the
// action itself (no packing, no graph); the depth is in plain letters
inline bool action_path_exists(const Tree& cur, const Tree& goal, int depth) {
  if (cur == goal) return true;
  if (depth == 0) return false;
  for (Address a : skeleton(cur)) {
    if (auto l = try_rotate_left(cur, a))
      if (action_path_exists(*l, goal, depth - 1)) return true;
    if (auto r = try_rotate_right(cur, a))
      if (action_path_exists(*r, goal, depth - 1)) return true;
  }
  return false;
}

inline int iddfs_dist(const Tree& t, const Tree& u, int max_depth) {
  for (int d = 0; d <= max_depth; ++d)
    if (action_path_exists(t, u, d)) return d;
  return -1;
}

}  // namespace tamari::testing
