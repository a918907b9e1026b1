#pragma once

#include <vector>

#include "sring/group.hpp"
#include "sring/sring.hpp"

namespace sring {

// cyc(K, G): orbits of the group generated by `generators`.
SRing cyclotomic(const AbelianGroup& group,
                 const std::vector<Automorphism>& generators);

// A1 (x) A2 over G1 x G2 (factors of G1 followed by factors of G2).
SRing tensor(const SRing& a1, const SRing& a2);
// Element of G1 x G2 with components x1, x2.
Elem tensor_index(const SRing& a1, const SRing& a2, Elem x1, Elem x2);

// Operands of a U/L-wreath product. `bottom` partitions U and `top`
// partitions G into unions of L-cosets; both are given as subsets of G.
struct WreathSpec {
  Subgroup upper;
  Subgroup lower;
  std::vector<ElementSet> bottom;
  std::vector<ElementSet> top;
};

// The unique S-ring with restriction `bottom` to U, quotient `top` by L and
// every class outside U a union of L-cosets. Throws kIncompatibleSection
// when the operands disagree on U/L.
SRing generalized_wreath(const AbelianGroup& group, const WreathSpec& spec);
// Operands given as S-rings over Section(G, U, {e}).quotient() and
// Section(G, G, L).quotient().
SRing generalized_wreath(const AbelianGroup& group, const Subgroup& upper,
                         const Subgroup& lower, const SRing& bottom,
                         const SRing& top);

struct WreathCheck {
  bool is_wreath = false;
  bool nontrivial = false;
};
// L <= rad(X) for every class X outside U; throws kSectionNotASection.
WreathCheck is_generalized_wreath(const SRing& a, const Subgroup& upper,
                                  const Subgroup& lower);

// Star-product recognizer for A-subgroups L and U.
bool is_star(const SRing& a, const Subgroup& l, const Subgroup& u);

// A = A_{H1} (x) A_{H2} for complementary A-subgroups H1, H2.
bool is_tensor_decomposition(const SRing& a, const Subgroup& h1,
                             const Subgroup& h2);
// Some pair of nontrivial complementary A-subgroups decomposes A.
bool is_nontrivial_tensor(const SRing& a);

// Dual S-ring over G, characters identified with G via the standard pairing.
SRing dual(const SRing& a);

}  // namespace sring
