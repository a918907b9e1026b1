#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sring/element_set.hpp"

namespace sring {

class Subgroup;
class Automorphism;

// Default bound on |G| accepted by AbelianGroup::make (10^4); the
// SRING_MAX_ORDER environment variable overrides it.
std::size_t default_max_order();

// Finite abelian group C_{n_1} x ... x C_{n_k}. Elements are mixed-radix
// tuples encoded as indices with the last factor least significant, so
// index order is lexicographic tuple order and index 0 is the identity.
// Copies share the immutable tables.
class AbelianGroup {
 public:
  AbelianGroup();  // trivial group, factors {1}
  static AbelianGroup make(std::vector<int> factors);
  static AbelianGroup make(std::vector<int> factors, std::size_t max_order);
  // "8x2x3" style literal.
  static AbelianGroup parse(std::string_view literal);

  const std::vector<int>& factors() const;
  int num_factors() const;
  int order() const;
  int exponent() const;
  std::string literal() const;

  Elem identity() const { return 0; }
  Elem add(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  // m * x in additive notation (x^m); m may be negative.
  Elem scale(Elem x, long long m) const;
  int element_order(Elem x) const;

  std::vector<int> coords(Elem x) const;
  int coord(Elem x, int factor) const;
  // Coordinates are reduced modulo the factor orders.
  Elem index(std::span<const int> coords) const;
  Elem generator(int factor) const;

  // Residue literal "a1,a2,...,ak".
  std::string format(Elem x) const;
  Elem parse_element(std::string_view text) const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet full_set() const;

  // All subgroups ordered by (order, member list); computed once per group.
  const std::vector<Subgroup>& subgroups() const;
  // All automorphisms, computed once per group.
  const std::vector<Automorphism>& automorphisms() const;

  bool operator==(const AbelianGroup& other) const;

 private:
  struct Impl;
  explicit AbelianGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

class GroupElement {
 public:
  GroupElement(AbelianGroup group, Elem index);
  static GroupElement parse(const AbelianGroup& group, std::string_view text);

  const AbelianGroup& group() const { return group_; }
  Elem index() const { return index_; }
  std::vector<int> coords() const { return group_.coords(index_); }
  int order() const { return group_.element_order(index_); }
  GroupElement inverse() const;
  GroupElement pow(long long m) const;
  std::string to_string() const { return group_.format(index_); }

  // Throws kMismatchedGroups when the operands live in different groups.
  friend GroupElement operator+(const GroupElement& x, const GroupElement& y);
  bool operator==(const GroupElement& other) const;

 private:
  AbelianGroup group_;
  Elem index_;
};

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(ElementSet members, std::vector<Elem> generators)
      : members_(std::move(members)), generators_(std::move(generators)) {}

  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& generators() const { return generators_; }
  int order() const { return members_.count(); }
  bool contains(Elem x) const { return members_.test(x); }
  bool contains(const Subgroup& other) const {
    return other.members_.is_subset_of(members_);
  }

  bool operator==(const Subgroup& other) const {
    return members_ == other.members_;
  }
  bool operator<(const Subgroup& other) const;

 private:
  ElementSet members_;
  std::vector<Elem> generators_;
};

Subgroup generated_subgroup(const AbelianGroup& group,
                            std::span<const Elem> generators);
Subgroup generated_subgroup(const AbelianGroup& group, const ElementSet& set);
Subgroup trivial_subgroup(const AbelianGroup& group);
Subgroup whole_group(const AbelianGroup& group);
bool is_subgroup(const AbelianGroup& group, const ElementSet& set);
Subgroup intersection(const AbelianGroup& group, const Subgroup& a,
                      const Subgroup& b);
Subgroup join(const AbelianGroup& group, const Subgroup& a, const Subgroup& b);
// {x : p x = 0}.
Subgroup omega(const AbelianGroup& group, int p);

// Section U/L of a group with L <= U. The quotient is presented as an
// AbelianGroup in primary form (primes ascending, cyclic orders descending).
class Section {
 public:
  Section(const AbelianGroup& group, Subgroup upper, Subgroup lower);

  const AbelianGroup& group() const { return group_; }
  const AbelianGroup& quotient() const { return quotient_; }
  const Subgroup& upper() const { return upper_; }
  const Subgroup& lower() const { return lower_; }

  // Canonical epimorphism U -> U/L; throws for x outside U.
  Elem project(Elem x) const;
  // Minimal-index element of the coset.
  Elem lift(Elem q) const { return lift_[q]; }
  // Image of a subset of U.
  ElementSet project_set(const ElementSet& set) const;
  // Full preimage in G of a subset of the quotient.
  ElementSet preimage(const ElementSet& set) const;

 private:
  AbelianGroup group_;
  AbelianGroup quotient_;
  Subgroup upper_;
  Subgroup lower_;
  std::vector<Elem> project_;  // -1 outside U
  std::vector<Elem> lift_;
};

// Group automorphism stored as the images of the canonical generators.
class Automorphism {
 public:
  // Throws kInvalidArgument unless the images define a bijective
  // homomorphism.
  Automorphism(AbelianGroup group, std::vector<Elem> generator_images);
  static Automorphism identity(const AbelianGroup& group);
  // sigma_m : x -> m x, m coprime to |G|.
  static Automorphism power_map(const AbelianGroup& group, long long m);

  const AbelianGroup& group() const { return group_; }
  const std::vector<Elem>& generator_images() const { return images_; }
  Elem apply(Elem x) const { return table_[x]; }
  const std::vector<Elem>& table() const { return table_; }
  ElementSet apply(const ElementSet& set) const;

  // Apply this, then `next`.
  Automorphism then(const Automorphism& next) const;
  Automorphism inverse() const;
  bool is_identity() const;

  bool operator==(const Automorphism& other) const {
    return table_ == other.table_;
  }

 private:
  Automorphism(AbelianGroup group, std::vector<Elem> images,
               std::vector<Elem> table);
  AbelianGroup group_;
  std::vector<Elem> images_;
  std::vector<Elem> table_;
};

// Every automorphism of G; identity first. Throws kBoundExceeded when a
// Sylow component has more than 2^20 candidate endomorphisms.
const std::vector<Automorphism>& aut_group(const AbelianGroup& group);

// Small helpers shared across modules.
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
std::vector<int> prime_divisors(long long n);
bool is_prime(long long n);

}  // namespace sring
