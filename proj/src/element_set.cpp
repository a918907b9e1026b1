#include "sring/element_set.hpp"

#include <algorithm>

namespace sring {

ElementSet::ElementSet(int universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(int universe, std::span<const Elem> elements)
    : ElementSet(universe) {
  for (Elem x : elements) set(x);
}

void ElementSet::fill() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() = (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

int ElementSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += __builtin_popcountll(w);
  return c;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

Elem ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Elem>(w * 64 + __builtin_ctzll(words_[w]));
    }
  }
  return -1;
}

Elem ElementSet::next(Elem x) const {
  int start = x + 1;
  if (start >= universe_) return -1;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<Elem>(w * 64 + __builtin_ctzll(bits));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering ElementSet::compare(const ElementSet& other) const {
  Elem a = first();
  Elem b = other.first();
  while (a >= 0 && b >= 0) {
    if (a != b) return a <=> b;
    a = next(a);
    b = other.next(b);
  }
  // A proper prefix sorts first.
  if (a < 0 && b < 0) return std::strong_ordering::equal;
  return a < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t ElementSet::hash() const {
  std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace sring
