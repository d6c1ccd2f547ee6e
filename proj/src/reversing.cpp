#include "tamari/reversing.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace tamari {

namespace {

struct StepResult {
  // 0, 1 or 2 letters replacing a negative-positive pair
  SignedWord letters;
};

// complement table for b^-1 a with b, a positive hat letters: returns (v, u)
// with b*v == a*u, each side empty or one letter
std::pair<SignedWord, SignedWord> complement(const HatLetter& b, const HatLetter& a) {
  const Address beta = b.addr;
  const Address alpha = a.addr;
  const int s = b.r;
  const int r = a.r;

  auto one = [](Address ad, int rr) {
    SignedWord w;
    if (rr > 0) w.push_back(gen(ad, rr));
    return w;
  };

  if (beta == alpha) {
    if (s == r) return {SignedWord{}, SignedWord{}};
    if (s > r)  // b = a * a', pure denominator remains
      return {SignedWord{}, one(alpha.concat(Address::zeros(static_cast<std::size_t>(r))), s - r)};
    return {one(alpha.concat(Address::zeros(static_cast<std::size_t>(s))), r - s), SignedWord{}};
  }

  if (beta.orthogonal_to(alpha)) return {one(alpha, r), one(beta, s)};

  if (alpha.is_prefix_of(beta)) {
    // beta strictly extends alpha
    std::size_t k = alpha.size();
    if (beta.bit(k) == 0) {
      // beta = alpha 0 gamma: the action of a moves position alpha0gamma
      // to alpha 0^(r+1) gamma
      Address gamma = beta.suffix(k + 1);
      Address target = alpha.concat(Address::zeros(static_cast<std::size_t>(r) + 1)).concat(gamma);
      return {one(alpha, r), one(target, s)};
    }
    // beta = alpha 1 delta
    Address delta = beta.suffix(k + 1);
    std::size_t i = 0;
    while (i < delta.size() && delta.bit(i) == 0) ++i;
    if (i >= static_cast<std::size_t>(r)) {
      // beta = alpha 1 0^r gamma, moved to alpha 0^r 1 gamma
      Address gamma = delta.suffix(static_cast<std::size_t>(r));
      Address target = alpha.concat(Address::zeros(static_cast<std::size_t>(r))).append(1).concat(gamma);
      return {one(alpha, r), one(target, s)};
    }
    if (i == delta.size()) {
      // beta = alpha 1 0^i with i < r: extended pentagon
      return {one(alpha, r + s), one(alpha.concat(Address::zeros(i)), s)};
    }
    // beta = alpha 1 0^i 1 gamma with i < r, moved to alpha 0^i 1 gamma
    Address gamma = delta.suffix(i + 1);
    Address target = alpha.concat(Address::zeros(i)).append(1).concat(gamma);
    return {one(alpha, r), one(target, s)};
  }

  // alpha strictly extends beta: same relation read from the other side
  auto [v, u] = complement(a, b);
  return {u, v};
}

bool neg_pos_pair(const SignedWord& w, std::size_t i) {
  return w[i].sign < 0 && w[i + 1].sign > 0;
}

ReversalOutcome finish(SignedWord w, long steps) {
  ReversalOutcome out;
  out.steps = steps;
  std::size_t split = 0;
  while (split < w.size() && w[split].sign > 0) ++split;
  for (std::size_t i = split; i < w.size(); ++i) assert(w[i].sign < 0);
  out.numerator.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
  out.denominator.assign(w.rbegin(), w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - split));
  for (auto& l : out.denominator) l.sign = +1;
  return out;
}

template <typename PickPair>
ReversalOutcome reverse_right_impl(const SignedWord& input, PickPair pick) {
  SignedWord w = input;
  long steps = 0;
  for (;;) {
    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (neg_pos_pair(w, i)) pairs.push_back(i);
    if (pairs.empty()) return finish(std::move(w), steps);
    std::size_t i = pick(pairs);
    auto [v, u] = complement(w[i].inverse(), w[i + 1]);
    SignedWord repl = v;
    for (auto it = u.rbegin(); it != u.rend(); ++it) repl.push_back(it->inverse());
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
            w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
    ++steps;
  }
}

}  // namespace

std::pair<SignedWord, SignedWord> relation_right(const HatLetter& b, const HatLetter& a) {
  assert(b.sign > 0 && a.sign > 0);
  return complement(b, a);
}

ReversalOutcome reverse_right(const SignedWord& w) {
  return reverse_right_impl(w, [](const std::vector<std::size_t>& p) { return p.front(); });
}

ReversalOutcome reverse_right_randomized(const SignedWord& w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reverse_right_impl(w, [&rng](const std::vector<std::size_t>& p) {
    std::uniform_int_distribution<std::size_t> d(0, p.size() - 1);
    return p[d(rng)];
  });
}

ReversalOutcome reverse_left(const SignedWord& w) {
  // left reversing is the mirror image of right reversing
  ReversalOutcome mirrored = reverse_right(mirror_word(w));
  ReversalOutcome out;
  out.steps = mirrored.steps;
  out.numerator = mirror_word(mirrored.numerator);
  out.denominator = mirror_word(mirrored.denominator);
  return out;
}

DoubleReversal double_reverse(const SignedWord& w) {
  ReversalOutcome l = reverse_left(w);
  SignedWord fraction = concat(inverse(l.denominator), l.numerator);
  ReversalOutcome r = reverse_right(fraction);
  return {r.numerator, r.denominator};
}

LcmResult right_lcm(const SignedWord& u, const SignedWord& v) {
  ReversalOutcome r = reverse_right(concat(inverse(u), v));
  LcmResult out;
  out.u_complement = r.numerator;
  out.v_complement = r.denominator;
  out.lcm = concat(u, r.numerator);
  return out;
}

bool divides_left(const SignedWord& u, const SignedWord& v) {
  return reverse_right(concat(inverse(u), v)).denominator.empty();
}

SignedWord left_gcd(const SignedWord& u, const SignedWord& v) {
  // gcd via the irreducible fraction of the mirrors: with mu mv^-1 reversed
  // to Ner Der^-1, the common right divisor t satisfies mu == Ner * t
  SignedWord mu = mirror_word(u);
  SignedWord mv = mirror_word(v);
  DoubleReversal d = double_reverse(concat(mu, inverse(mv)));
  ReversalOutcome t = reverse_right(concat(inverse(d.numerator), mu));
  assert(t.denominator.empty());
  return mirror_word(t.numerator);
}

bool cube_check(Address a, Address b, Address c) {
  SignedWord w{gen(a).inverse(), gen(c), gen(c).inverse(), gen(b)};
  ReversalOutcome first = reverse_right(w);
  SignedWord probe = concat(
      concat(inverse(first.numerator), SignedWord{gen(a).inverse(), gen(b)}),
      first.denominator);
  ReversalOutcome second = reverse_right(probe);
  return second.numerator.empty() && second.denominator.empty();
}

}  // namespace tamari
