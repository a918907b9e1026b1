#pragma once

#include <string>
#include <vector>

#include "sring/permgroup.hpp"
#include "sring/sring.hpp"

namespace sring {

// Coarsest S-ring partition refining the given labelling: isolates e,
// splits by inverses and by all product multiplicities until stable.
// Result labels are class ordinals ordered by least member.
std::vector<int> closure_labels(const AbelianGroup& group, const std::vector<int>& labels);
// Throws kNotPartition for malformed input.
SRing sring_closure(const AbelianGroup& group, const std::vector<ElementSet>& partition);

// Orbits of x -> m x for m coprime to exp(G), ordered by least member.
std::vector<ElementSet> rational_classes(const AbelianGroup& group);

// Catalog order: rank, then class lists (ordered by least member) compared
// lexicographically.
bool catalog_less(const SRing& a, const SRing& b);

// Every S-ring over G, each exactly once, in catalog order. Throws
// kBoundExceeded above order 64 unless `max_order` is raised.
std::vector<SRing> enumerate_all(const AbelianGroup& group, int max_order = 64);
// Only the S-rings whose classes are unions of rational classes.
std::vector<SRing> enumerate_rational(const AbelianGroup& group);

struct CatalogEntry {
  SRing sring;
  int rank = 0;
  bool schurian = false;
  bool cyclotomic = false;
  bool normal = false;
  bool primitive = false;
  bool orbit_rep = false;  // first entry of its Aut(G)-orbit in catalog order
  BigInt aut_order;
};

struct Catalog {
  AbelianGroup group;
  std::vector<CatalogEntry> entries;
};

struct EnumerateOptions {
  int threads = 1;     // flag computation only; output is independent of it
  bool flags = true;   // compute schurian/cyclotomic/normal/aut_order
  int max_order = 64;
};

Catalog enumerate_srings(const AbelianGroup& group, const EnumerateOptions& options = {});
// Catalog over explicit S-rings (sorted into catalog order).
Catalog make_catalog(const AbelianGroup& group, std::vector<SRing> srings,
                     const EnumerateOptions& options = {});

}  // namespace sring
