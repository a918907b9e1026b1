#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sring {

// Index of a group element in the mixed-radix encoding of its group.
using Elem = int;

// Fixed-universe bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);
  ElementSet(int universe, std::span<const Elem> elements);

  int universe() const { return universe_; }
  bool test(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void set(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void reset(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
  void fill();

  int count() const;
  bool empty() const;
  // Smallest member, or -1 when empty.
  Elem first() const;
  // Smallest member greater than x, or -1.
  Elem next(Elem x) const;
  std::vector<Elem> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& other) const = default;
  // Lexicographic comparison of the sorted member lists.
  std::strong_ordering compare(const ElementSet& other) const;
  bool operator<(const ElementSet& other) const { return compare(other) < 0; }

  std::size_t hash() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace sring
