#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sring/autsearch.hpp"
#include "sring/permgroup.hpp"
#include "sring/sring.hpp"

namespace sring {

struct SchurWitness {
  int class_id = 0;
  std::vector<Elem> orbit;  // Aut(A)_e-orbit of the least element of the class
};

struct SchurReport {
  bool schurian = false;
  BigInt aut_order;
  std::vector<std::vector<Elem>> orbits;  // Aut(A)_e-orbits, by least element
  std::optional<SchurWitness> witness;    // present iff nonschurian
};

SchurReport is_schurian(const SRing& a);
SchurReport schur_report(const SRing& a, const AutResult& aut);

struct CyclotomicReport {
  bool cyclotomic = false;
  // K* = {sigma in Aut(G) : X^sigma = X for every class X}.
  std::vector<Automorphism> class_stabilizer;
};

// Throws kAutGroupTooLarge when Aut(G) cannot be enumerated.
CyclotomicReport is_cyclotomic(const SRing& a);

bool is_normal(const SRing& a);
bool is_normal(const SRing& a, const PermGroup& aut);

// rad(A) for an S-ring over a cyclic group: the radical of a class
// containing a generator.
Subgroup circulant_radical(const SRing& a);
bool is_cyclic(const AbelianGroup& group);

// Clause tags satisfied by an S-ring over E4 x C_n, n = p^k or pq with odd
// primes: "cyclotomic", "tensor", "gwreath(1)" ... "gwreath(4)".
// Throws kWrongGroupShape for other groups and kPrecondition for rank <= 2.
std::vector<std::string> classify_e4cn(const SRing& a);

}  // namespace sring
