#include "sring/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "sring/error.hpp"

namespace sring {

namespace {

using Poly = std::vector<long long>;

// Exact division by a monic polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  if (nn < dn) return {0};
  Poly quot(nn - dn + 1, 0);
  for (int k = nn; k >= dn; --k) {
    const long long c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (int k = 0; k < dn; ++k) {
    if (num[k] != 0) fail(ErrorKind::kInternal, "inexact cyclotomic division");
  }
  return quot;
}

const Poly& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace

bool CycloValue::is_integer(long long value) const {
  if (coords.empty()) return value == 0;
  if (coords[0] != value) return false;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    if (coords[i] != 0) return false;
  }
  return true;
}

CyclotomicRing::CyclotomicRing(int n) : n_(n) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "conductor must be positive");
  phi_ = cyclotomic_polynomial(n);
}

CycloValue CyclotomicRing::reduce(std::vector<long long> counts) const {
  const int d = degree();
  for (int k = static_cast<int>(counts.size()) - 1; k >= d; --k) {
    const long long c = counts[k];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) counts[k - d + j] -= c * phi_[j];
  }
  counts.resize(d, 0);
  return CycloValue{n_, std::move(counts)};
}

int pairing(const AbelianGroup& group, Elem x, Elem y) {
  const long long n = group.exponent();
  long long e = 0;
  for (int i = 0; i < group.num_factors(); ++i) {
    const long long ni = group.factors()[i];
    e += (n / ni) * group.coord(x, i) * group.coord(y, i);
  }
  return static_cast<int>(e % n);
}

CycloValue char_value(const CyclotomicRing& ring, const AbelianGroup& group,
                      Elem y, const ElementSet& set) {
  std::vector<long long> counts(ring.conductor(), 0);
  set.for_each([&](Elem x) { ++counts[pairing(group, x, y)]; });
  return ring.reduce(std::move(counts));
}

CycloValue char_value(const AbelianGroup& group, Elem y, const ElementSet& set) {
  return char_value(CyclotomicRing(group.exponent()), group, y, set);
}

Subgroup perp(const AbelianGroup& group, const Subgroup& h) {
  ElementSet members = group.empty_set();
  const auto elems = h.members().elements();
  for (Elem y = 0; y < group.order(); ++y) {
    bool ok = true;
    for (Elem x : elems) {
      if (pairing(group, x, y) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) members.set(y);
  }
  return generated_subgroup(group, members);
}

}  // namespace sring
