#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace tamari {

// A node address: finite 0/1 path from the root, 0 = left child, 1 = right.
// Stored packed, bit i of bits_ is the i-th step from the root.
class Address {
 public:
  Address() = default;

  static Address ones(std::size_t n) {
    Address a;
    for (std::size_t i = 0; i < n; ++i) a = a.append(1);
    return a;
  }
  static Address zeros(std::size_t n) {
    Address a;
    for (std::size_t i = 0; i < n; ++i) a = a.append(0);
    return a;
  }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  int bit(std::size_t i) const {
    assert(i < len_);
    return static_cast<int>((bits_ >> i) & 1u);
  }

  Address append(int b) const {
    assert(len_ < kMaxLen);
    Address a = *this;
    if (b) a.bits_ |= std::uint64_t{1} << a.len_;
    a.len_ += 1;
    return a;
  }

  Address concat(Address tail) const {
    assert(len_ + tail.len_ <= kMaxLen);
    Address a = *this;
    a.bits_ |= tail.bits_ << a.len_;
    a.len_ += tail.len_;
    return a;
  }

  // first n bits
  Address prefix(std::size_t n) const {
    assert(n <= len_);
    Address a;
    a.len_ = static_cast<std::uint32_t>(n);
    a.bits_ = n == 0 ? 0 : bits_ & ((std::uint64_t{1} << n) - 1);
    return a;
  }

  // bits from position `from` to the end
  Address suffix(std::size_t from) const {
    assert(from <= len_);
    Address a;
    a.len_ = static_cast<std::uint32_t>(len_ - from);
    a.bits_ = bits_ >> from;
    return a;
  }

  // exchange 0 and 1 everywhere
  Address flipped() const {
    Address a = *this;
    if (len_ > 0) a.bits_ = ~bits_ & ((std::uint64_t{1} << len_) - 1);
    return a;
  }

  std::size_t common_prefix(Address other) const {
    std::size_t n = len_ < other.len_ ? len_ : other.len_;
    std::size_t i = 0;
    while (i < n && bit(i) == other.bit(i)) ++i;
    return i;
  }

  bool is_prefix_of(Address other) const {
    return len_ <= other.len_ && other.prefix(len_) == *this;
  }

  // true when the two addresses diverge: one passes through a 0-child and
  // the other through a 1-child of a common node
  bool orthogonal_to(Address other) const {
    std::size_t c = common_prefix(other);
    return c < len_ && c < other.size();
  }

  bool all(int b) const {
    for (std::size_t i = 0; i < len_; ++i)
      if (bit(i) != b) return false;
    return true;
  }

  std::size_t count(int b) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < len_; ++i) c += static_cast<std::size_t>(bit(i) == b);
    return c;
  }

  std::size_t trailing(int b) const {
    std::size_t c = 0;
    while (c < len_ && bit(len_ - 1 - c) == b) ++c;
    return c;
  }

  friend bool operator==(Address a, Address b) {
    return a.len_ == b.len_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(Address a, Address b) { return !(a == b); }

  // arbitrary total order so addresses can key ordered containers
  friend bool operator<(Address a, Address b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.bits_ < b.bits_;
  }

  std::uint64_t raw_bits() const { return bits_; }

  static constexpr std::size_t kMaxLen = 63;

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t len_ = 0;
};

// "left-right-root" (postorder) order on addresses: descendants precede
// ancestors, and at a divergence the 0 side comes first.
inline bool postorder_less(Address a, Address b) {
  if (a == b) return false;
  if (b.is_prefix_of(a)) return true;   // a is a descendant of b
  if (a.is_prefix_of(b)) return false;  // a is an ancestor of b
  std::size_t c = a.common_prefix(b);
  return a.bit(c) == 0;
}

}  // namespace tamari

template <>
struct std::hash<tamari::Address> {
  std::size_t operator()(tamari::Address a) const noexcept {
    std::uint64_t h = a.raw_bits() * 0x9e3779b97f4a7c15ull + a.size();
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};
