#pragma once

#include <vector>

#include "sring/element_set.hpp"
#include "sring/group.hpp"

namespace sring {

// Element of Z[zeta_N] in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
struct CycloValue {
  int conductor = 1;
  std::vector<long long> coords;

  bool operator==(const CycloValue& other) const = default;
  bool operator<(const CycloValue& other) const {
    return coords < other.coords;
  }
  bool is_integer(long long value) const;
};

// Arithmetic in Z[x] / Phi_N.
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int n);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  // Monic coefficients of Phi_N, lowest degree first.
  const std::vector<long long>& polynomial() const { return phi_; }

  // Reduce a vector of exponent counts (index k = multiplicity of zeta^k,
  // k in [0, N)) to canonical coordinates.
  CycloValue reduce(std::vector<long long> counts) const;

 private:
  int n_;
  std::vector<long long> phi_;
};

// Exponent of the pairing: chi_y(x) = zeta_N^{pairing(x, y)}, N = exp(G).
int pairing(const AbelianGroup& group, Elem x, Elem y);

// chi_y(X) as an exact cyclotomic integer.
CycloValue char_value(const AbelianGroup& group, Elem y, const ElementSet& set);
CycloValue char_value(const CyclotomicRing& ring, const AbelianGroup& group,
                      Elem y, const ElementSet& set);

// H^perp = {y : chi_y(h) = 1 for all h in H}.
Subgroup perp(const AbelianGroup& group, const Subgroup& h);

}  // namespace sring
