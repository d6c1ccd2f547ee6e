#include "tamari/group.hpp"

#include <algorithm>
#include <cassert>

namespace tamari {

Dyadic Dyadic::of(std::int64_t n, int e) {
  while (e > 0 && n % 2 == 0) {
    n /= 2;
    --e;
  }
  if (n == 0) e = 0;
  return Dyadic{n, e};
}

Dyadic operator+(Dyadic a, Dyadic b) {
  int e = std::max(a.exp, b.exp);
  return Dyadic::of((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e);
}

Dyadic operator-(Dyadic a, Dyadic b) {
  int e = std::max(a.exp, b.exp);
  return Dyadic::of((a.num << (e - a.exp)) - (b.num << (e - b.exp)), e);
}

Dyadic operator*(Dyadic a, Dyadic b) {
  return Dyadic::of(a.num * b.num, a.exp + b.exp);
}

Dyadic Dyadic::times_pow2(int k) const {
  if (k >= 0) {
    if (exp >= k) return Dyadic::of(num, exp - k);
    return Dyadic::of(num << (k - exp), 0);
  }
  return Dyadic::of(num, exp - k);
}

bool operator<(Dyadic a, Dyadic b) {
  int e = std::max(a.exp, b.exp);
  return (a.num << (e - a.exp)) < (b.num << (e - b.exp));
}

std::string Dyadic::str() const {
  return std::to_string(num) + "/2^" + std::to_string(exp);
}

GroupElement identity_element() { return GroupElement{Tree::leaf(), Tree::leaf()}; }

bool is_identity(const GroupElement& f) { return f.neg.is_leaf() && f.pos.is_leaf(); }

namespace {

// leaves i and i+1 are children of one node exactly when the address of
// leaf i ends in 0 and leaf i+1 is its sibling
bool sibling_pair(const std::vector<Address>& leaves, int i) {
  Address a = leaves[static_cast<std::size_t>(i)];
  Address b = leaves[static_cast<std::size_t>(i) + 1];
  return !a.empty() && a.bit(a.size() - 1) == 0 && a.size() == b.size() &&
         a.prefix(a.size() - 1) == b.prefix(b.size() - 1);
}

}  // namespace

GroupElement reduce_pair(const Tree& t, const Tree& u) {
  if (t.size() != u.size())
    throw SizeMismatchError("tree pair sizes differ");
  Tree a = t, b = u;
  for (;;) {
    auto la = leaf_addresses(a);
    auto lb = leaf_addresses(b);
    bool collapsed = false;
    for (int i = 0; i + 1 < static_cast<int>(la.size()); ++i) {
      if (sibling_pair(la, i) && sibling_pair(lb, i)) {
        Address pa = la[static_cast<std::size_t>(i)];
        Address pb = lb[static_cast<std::size_t>(i)];
        a = graft(a, pa.prefix(pa.size() - 1), Tree::leaf());
        b = graft(b, pb.prefix(pb.size() - 1), Tree::leaf());
        collapsed = true;
        break;
      }
    }
    if (!collapsed) return GroupElement{a, b};
  }
}

GroupElement multiply(const GroupElement& f, const GroupElement& g) {
  Unification u = unify(f.pos, g.neg);
  return reduce_pair(substitute(f.neg, u.sigma), substitute(g.pos, u.tau));
}

GroupElement inverse_element(const GroupElement& f) {
  return GroupElement{f.pos, f.neg};
}

namespace {

// minimal pair of trees around the rotation pattern at the given address
std::pair<Tree, Tree> frame(Address a, const Tree& neg_core, const Tree& pos_core) {
  if (a.empty()) return {neg_core, pos_core};
  auto [n, p] = frame(a.suffix(1), neg_core, pos_core);
  if (a.bit(0) == 0)
    return {Tree::node(n, Tree::leaf()), Tree::node(p, Tree::leaf())};
  return {Tree::node(Tree::leaf(), n), Tree::node(Tree::leaf(), p)};
}

}  // namespace

GroupElement letter_element(const HatLetter& l) {
  Tree neg_core = Tree::node(Tree::leaf(), Tree::node(Tree::leaf(), Tree::leaf()));
  Tree pos_core = Tree::node(Tree::node(Tree::leaf(), Tree::leaf()), Tree::leaf());
  auto [n, p] = frame(l.addr, neg_core, pos_core);
  GroupElement e{n, p};
  if (l.r > 1) {
    GroupElement acc = identity_element();
    for (const auto& plain : expand(HatLetter{l.addr, l.r, +1}))
      acc = multiply(acc, letter_element(plain));
    e = acc;
  }
  if (l.sign < 0) e = inverse_element(e);
  return e;
}

GroupElement eval_word(const SignedWord& w) {
  GroupElement acc = identity_element();
  for (const auto& l : w) acc = multiply(acc, letter_element(l));
  return acc;
}

namespace {

void match_rec(const Tree& pattern, const Tree& t, int& leaf, Substitution& sigma) {
  if (pattern.is_leaf()) {
    sigma.set(leaf, t);
    ++leaf;
    return;
  }
  if (t.is_leaf())
    throw UndefinedActionError("tree is not an instance of the source tree");
  match_rec(pattern.left(), t.left(), leaf, sigma);
  match_rec(pattern.right(), t.right(), leaf, sigma);
}

}  // namespace

Tree act_element(const Tree& t, const GroupElement& f) {
  Substitution sigma;
  int leaf = 0;
  match_rec(f.neg, t, leaf, sigma);
  return substitute(f.pos, sigma);
}

long lambda_of(const GroupElement& f) { return mu(f.pos) - mu(f.neg); }

long lambda_word(const SignedWord& w) { return lambda_of(eval_word(w)); }

namespace {

void decomposition_rec(const Tree& t, Dyadic lo, Dyadic hi, std::vector<Dyadic>& out) {
  if (t.is_leaf()) {
    out.push_back(hi);
    return;
  }
  Dyadic mid = (lo + hi).half();
  decomposition_rec(t.left(), lo, mid, out);
  decomposition_rec(t.right(), mid, hi, out);
}

int slope_exponent(Dyadic dx, Dyadic dy) {
  // both deltas are positive dyadics whose quotient is a power of 2
  int k = 0;
  std::int64_t xn = dx.num, yn = dy.num;
  int xe = dx.exp, ye = dy.exp;
  while (xn % 2 == 0) {
    xn /= 2;
    --xe;
  }
  while (yn % 2 == 0) {
    yn /= 2;
    --ye;
  }
  assert(xn == yn);
  k = xe - ye;
  return k;
}

DyadicPLMap canonical(std::vector<std::pair<Dyadic, Dyadic>> pts) {
  DyadicPLMap m;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && i + 1 < pts.size()) {
      Dyadic x0 = m.breakpoints.back().first, y0 = m.breakpoints.back().second;
      int s1 = slope_exponent(pts[i].first - x0, pts[i].second - y0);
      int s2 = slope_exponent(pts[i + 1].first - pts[i].first,
                              pts[i + 1].second - pts[i].second);
      if (s1 == s2) continue;  // collinear, drop
    }
    m.breakpoints.push_back(pts[i]);
  }
  return m;
}

}  // namespace

std::vector<Dyadic> dyadic_decomposition(const Tree& t) {
  std::vector<Dyadic> out;
  out.push_back(Dyadic::integer(0));
  decomposition_rec(t, Dyadic::integer(0), Dyadic::integer(1), out);
  return out;
}

DyadicPLMap to_pl_map(const GroupElement& f) {
  auto xs = dyadic_decomposition(f.neg);
  auto ys = dyadic_decomposition(f.pos);
  assert(xs.size() == ys.size());
  std::vector<std::pair<Dyadic, Dyadic>> pts;
  pts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
  return canonical(std::move(pts));
}

DyadicPLMap pl_identity() {
  DyadicPLMap m;
  m.breakpoints = {{Dyadic::integer(0), Dyadic::integer(0)},
                   {Dyadic::integer(1), Dyadic::integer(1)}};
  return m;
}

Dyadic pl_eval(const DyadicPLMap& m, Dyadic t) {
  const auto& bp = m.breakpoints;
  assert(!bp.empty());
  if (t < bp.front().first || bp.back().first < t)
    throw DomainError("pl_eval argument outside [0,1]");
  std::size_t i = 0;
  while (i + 2 < bp.size() && !(t < bp[i + 1].first)) ++i;
  // slope dy/dx = 2^k
  int k = slope_exponent(bp[i + 1].first - bp[i].first,
                         bp[i + 1].second - bp[i].second);
  return bp[i].second + (t - bp[i].first).times_pow2(k);
}

namespace {

// preimage of y under the segment through the map (maps are bijections)
Dyadic pl_eval_inverse(const DyadicPLMap& m, Dyadic y) {
  const auto& bp = m.breakpoints;
  std::size_t i = 0;
  while (i + 2 < bp.size() && !(y < bp[i + 1].second)) ++i;
  int k = slope_exponent(bp[i + 1].first - bp[i].first,
                         bp[i + 1].second - bp[i].second);
  return bp[i].first + (y - bp[i].second).times_pow2(-k);
}

}  // namespace

DyadicPLMap pl_compose(const DyadicPLMap& f, const DyadicPLMap& g) {
  // breakpoint candidates: breakpoints of f, preimages under f of g's
  std::vector<Dyadic> xs;
  for (const auto& p : f.breakpoints) xs.push_back(p.first);
  for (const auto& p : g.breakpoints) xs.push_back(pl_eval_inverse(f, p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<std::pair<Dyadic, Dyadic>> pts;
  pts.reserve(xs.size());
  for (Dyadic x : xs) pts.emplace_back(x, pl_eval(g, pl_eval(f, x)));
  return canonical(std::move(pts));
}

}  // namespace tamari
