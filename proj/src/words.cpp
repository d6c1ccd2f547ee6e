#include "tamari/words.hpp"

#include <algorithm>

namespace tamari {

SignedWord expand(const HatLetter& l) {
  SignedWord out;
  out.reserve(static_cast<std::size_t>(l.r));
  for (int k = 0; k < l.r; ++k)
    out.push_back(HatLetter{l.addr.concat(Address::zeros(static_cast<std::size_t>(k))), 1, +1});
  if (l.sign < 0) {
    std::reverse(out.begin(), out.end());
    for (auto& x : out) x.sign = -1;
  }
  return out;
}

SignedWord expand(const SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    SignedWord e = expand(l);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

SignedWord inverse(const SignedWord& w) {
  SignedWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

SignedWord shift(const SignedWord& w, Address a) {
  SignedWord out = w;
  for (auto& l : out) l.addr = a.concat(l.addr);
  return out;
}

SignedWord concat(SignedWord a, const SignedWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long a_length(const SignedWord& w) {
  long n = 0;
  for (const auto& l : w) n += l.r;
  return n;
}

bool all_positive(const SignedWord& w) {
  return std::all_of(w.begin(), w.end(),
                     [](const HatLetter& l) { return l.sign > 0; });
}

bool all_plain(const SignedWord& w) {
  return std::all_of(w.begin(), w.end(),
                     [](const HatLetter& l) { return l.r == 1; });
}

long weight1(const HatLetter& l) {
  // only the first expanded letter can have an all-ones address
  return l.addr.all(1) ? 1 : 0;
}

long weight1(const SignedWord& w) {
  long n = 0;
  for (const auto& l : w) n += weight1(l);
  return n;
}

SignedWord mirror_word(const SignedWord& w) {
  SignedWord plain = expand(w);
  std::reverse(plain.begin(), plain.end());
  for (auto& l : plain) l.addr = l.addr.flipped();
  return plain;
}

// iterated left rotation: t0 ^ ((..(t1^t2)..)^t{r+1}) -> ((..(t0^t1)..)^t{r+1})
static std::optional<Tree> rotate_spine(const Tree& t0, const Tree& right, int r) {
  if (right.is_leaf()) return std::nullopt;
  if (r == 1)
    return Tree::node(Tree::node(t0, right.left()), right.right());
  auto inner = rotate_spine(t0, right.left(), r - 1);
  if (!inner) return std::nullopt;
  return Tree::node(*inner, right.right());
}

std::optional<Tree> try_act(const Tree& t, const HatLetter& l) {
  if (l.r < 1) return std::nullopt;
  if (l.sign > 0) {
    if (!has_address(t, l.addr)) return std::nullopt;
    Tree s = subtree_at(t, l.addr);
    if (s.is_leaf()) return std::nullopt;
    auto rotated = rotate_spine(s.left(), s.right(), l.r);
    if (!rotated) return std::nullopt;
    return graft(t, l.addr, *rotated);
  }
  Tree cur = t;
  for (const auto& p : expand(l)) {
    auto next = try_rotate_right(cur, p.addr);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

Tree act(const Tree& t, const HatLetter& l) {
  auto r = try_act(t, l);
  if (!r) throw UndefinedActionError("undefined action", 0);
  return *r;
}

Tree act(const Tree& t, const SignedWord& w) {
  Tree cur = t;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto next = try_act(cur, w[i]);
    if (!next)
      throw UndefinedActionError("undefined action at letter " + std::to_string(i), i);
    cur = *next;
  }
  return cur;
}

std::optional<Tree> try_act(const Tree& t, const SignedWord& w) {
  Tree cur = t;
  for (const auto& l : w) {
    auto next = try_act(cur, l);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

SignedWord x_to_a(const XWord& xs) {
  SignedWord out;
  out.reserve(xs.size());
  for (const auto& x : xs)
    out.push_back(HatLetter{Address::ones(static_cast<std::size_t>(x.index)), 1, x.sign});
  return out;
}

XWord a_to_x(Address a) {
  if (a.all(1)) return {XLetter{static_cast<int>(a.size()), +1}};

  // decompose a = 1^i 0^(1+i0) 1 0^(i1) ... 1 0^(im)
  std::size_t pos = 0;
  int i = 0;
  while (pos < a.size() && a.bit(pos) == 1) {
    ++i;
    ++pos;
  }
  std::vector<int> zero_runs;  // i0, i1, ..., im
  int first_zeros = 0;
  while (pos < a.size() && a.bit(pos) == 0) {
    ++first_zeros;
    ++pos;
  }
  zero_runs.push_back(first_zeros - 1);
  while (pos < a.size()) {
    ++pos;  // the 1 opening the next block
    int zeros = 0;
    while (pos < a.size() && a.bit(pos) == 0) {
      ++zeros;
      ++pos;
    }
    zero_runs.push_back(zeros);
  }
  int m = static_cast<int>(zero_runs.size()) - 1;

  // a = g^-1 x_{i+m+1}^-1 x_{i+m} g with
  // g = x_{i+m}^{im+1} ... x_{i+1}^{i1+1} x_i^{i0+1}; the unit tests anchor
  // this shape against the action on trees
  XWord g;
  for (int k = m; k >= 0; --k) {
    int e = zero_runs[static_cast<std::size_t>(k)] + 1;
    for (int c = 0; c < e; ++c) g.push_back(XLetter{i + k, +1});
  }

  XWord out;
  for (auto it = g.rbegin(); it != g.rend(); ++it)
    out.push_back(XLetter{it->index, -1});
  out.push_back(XLetter{i + m + 1, -1});
  out.push_back(XLetter{i + m, +1});
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

static std::vector<Address> addresses_up_to(int max_len) {
  std::vector<Address> out;
  out.push_back(Address());
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      out.push_back(out[i].append(0));
      out.push_back(out[i].append(1));
    }
    begin = end;
  }
  return out;
}

std::vector<std::pair<SignedWord, SignedWord>> relation_instances(int max_len) {
  std::vector<std::pair<SignedWord, SignedWord>> out;
  auto addrs = addresses_up_to(max_len);

  auto word = [](std::initializer_list<Address> as) {
    SignedWord w;
    for (Address a : as) w.push_back(gen(a));
    return w;
  };

  // commutations for orthogonal pairs, each unordered pair once
  for (std::size_t i = 0; i < addrs.size(); ++i)
    for (std::size_t j = i + 1; j < addrs.size(); ++j)
      if (addrs[i].orthogonal_to(addrs[j]))
        out.emplace_back(word({addrs[i], addrs[j]}), word({addrs[j], addrs[i]}));

  // quasi-commutations: addresses on both sides capped at max_len
  for (Address alpha : addrs)
    for (Address beta : addrs) {
      if (static_cast<int>(alpha.size() + beta.size()) + 2 <= max_len) {
        Address a11b = alpha.append(1).append(1).concat(beta);
        Address a1b = alpha.append(1).concat(beta);
        out.emplace_back(word({a11b, alpha}), word({alpha, a1b}));

        Address a10b = alpha.append(1).append(0).concat(beta);
        Address a01b = alpha.append(0).append(1).concat(beta);
        out.emplace_back(word({a10b, alpha}), word({alpha, a01b}));

        Address a0b = alpha.append(0).concat(beta);
        Address a00b = alpha.append(0).append(0).concat(beta);
        out.emplace_back(word({a0b, alpha}), word({alpha, a00b}));
      }
    }

  // pentagons
  for (Address alpha : addrs)
    if (static_cast<int>(alpha.size()) + 1 <= max_len)
      out.emplace_back(word({alpha, alpha}),
                       word({alpha.append(1), alpha, alpha.append(0)}));

  return out;
}

}  // namespace tamari
