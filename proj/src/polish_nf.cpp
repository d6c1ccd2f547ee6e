#include "tamari/polish_nf.hpp"

#include <algorithm>

namespace tamari {

std::optional<Clash> clash(const Tree& t, const Tree& u) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  PolishWord wt = polish_encode(t);
  PolishWord wu = polish_encode(u);
  for (std::size_t k = 1; k <= wt.length(); ++k) {
    if (wt.letter(k) == wu.letter(k)) continue;
    Clash c;
    c.position = static_cast<int>(k);
    c.smaller = wt.leaf_at(k) ? 0 : 1;
    c.leaf_origin = origin_of_position(c.smaller == 0 ? t : u, c.position);
    return c;
  }
  return std::nullopt;
}

HatLetter polish_step(const Tree& t, const Tree& u) {
  auto c = clash(t, u);
  if (!c || c->smaller != 0)
    throw DomainError("polish_step requires the first tree to be lex-smaller");
  // the clash leaf sits at alpha 1 0^j 1 0^m; the step is the iterated
  // rotation at alpha of width j+1
  Address d = c->leaf_origin;
  std::size_t m = d.trailing(0);
  Address rest = d.prefix(d.size() - m);
  if (rest.empty() || rest.bit(rest.size() - 1) != 1)
    throw InternalInvariantViolation("clash origin has no closing 1");
  rest = rest.prefix(rest.size() - 1);
  std::size_t j = rest.trailing(0);
  rest = rest.prefix(rest.size() - j);
  if (rest.empty() || rest.bit(rest.size() - 1) != 1)
    throw InternalInvariantViolation("clash origin has a single 1");
  Address alpha = rest.prefix(rest.size() - 1);
  return gen(alpha, static_cast<int>(j) + 1);
}

SignedWord polish_run(const Tree& t, const Tree& u) {
  if (t.size() != u.size()) throw SizeMismatchError("tree sizes differ");
  Tree a = t, b = u;
  SignedWord positives;
  SignedWord negatives;  // discovery order; emitted reversed and inverted
  while (a != b) {
    if (polish_lex_less(polish_encode(a), polish_encode(b))) {
      HatLetter s = polish_step(a, b);
      positives.push_back(s);
      a = act(a, s);
    } else {
      HatLetter s = polish_step(b, a);
      negatives.push_back(s);
      b = act(b, s);
    }
  }
  SignedWord out = positives;
  for (auto it = negatives.rbegin(); it != negatives.rend(); ++it)
    out.push_back(it->inverse());
  return out;
}

SignedWord normal_form(const GroupElement& f) { return polish_run(f.neg, f.pos); }

bool is_normal(const SignedWord& w) {
  if (!all_positive(w))
    throw DomainError("normality is defined for positive hat words");
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    Address lhs = w[t].addr.concat(Address::zeros(static_cast<std::size_t>(w[t].r)));
    Address rhs = w[t + 1].addr.append(1)
                      .concat(Address::zeros(static_cast<std::size_t>(w[t + 1].r) - 1))
                      .append(1);
    if (!postorder_less(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace tamari
