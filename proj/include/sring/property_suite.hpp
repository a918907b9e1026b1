#pragma once

#include <map>
#include <string>
#include <vector>

#include "sring/enumerate.hpp"

namespace sring {

struct PropertyFailure {
  std::string property;
  int entry = -1;  // catalog index, or -1 for pairwise checks
  std::string detail;
};

struct PropertyReport {
  std::map<std::string, long long> checks;  // property -> evaluated instances
  std::vector<PropertyFailure> failures;

  bool ok() const { return failures.empty(); }
  void merge(const PropertyReport& other);
};

// Multiplier theorems and basic structure on every entry:
//   "structure_sum"      sum_Z c^Z_XY |Z| = |X||Y|
//   "radical_span"       rad(X) and <X> are A-subgroups
//   "intersection"       |X cap Hx| constant over x in X for A-subgroups H
//   "separation"         H <= rad(X \ H), X meets H and leaves H
//                        => rad(X) <= H and X = <X> \ rad(X)
//   "first_multiplier"   X^(m) is a class for m coprime to |G|
//   "second_multiplier"  X^[p] is an A-set for primes p dividing |G|
//   "orbit_slices"       for G = H x D with D cyclic of coprime order, each
//                        slice h^-1 X cap D_l^* is one orbit of the
//                        multipliers on D that fix X
PropertyReport multiplier_suite(const Catalog& catalog);

// Duality on every entry: involution, rank, subgroup lattice
// antiisomorphism, tensor decompositions, generalized wreath sections,
// cyclotomicity.
PropertyReport duality_suite(const Catalog& catalog);

// Galois correspondence on every entry (uses the catalog flags):
// cyclotomic => schurian, schurian => V(Aut(A), G) = A,
// normal and schurian => cyclotomic.
PropertyReport galois_suite(const Catalog& catalog);

// Circulant facts, evaluated only on catalogs over cyclic groups.
PropertyReport circulant_suite(const Catalog& catalog);

// |Aut(A1 (x) A2)| = |Aut A1| |Aut A2| and dual(A1 (x) A2) =
// dual(A1) (x) dual(A2) for every pair of entries.
PropertyReport tensor_suite(const Catalog& first, const Catalog& second);

// All single-catalog suites.
PropertyReport run_property_suite(const Catalog& catalog);

}  // namespace sring
