#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <vector>

#include "sring/group.hpp"
#include "sring/sring.hpp"

namespace sring {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kMaxDegree = 256;

// Permutation of {0, ..., n-1} acting on the right: x^(pq) = (x^p)^q, so
// p * q applies p first.
class Permutation {
 public:
  Permutation() = default;
  // Throws kNonBijective.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// Right translation x -> x + t.
Permutation translation(const AbelianGroup& group, Elem t);
// Translations by the canonical generators.
std::vector<Permutation> regular_generators(const AbelianGroup& group);
Permutation as_permutation(const Automorphism& a);

// Permutation group with a base and strong generating set.
class PermGroup {
 public:
  PermGroup() = default;

  // Deterministic Schreier-Sims. The base starts with `base_prefix`
  // (default: point 0, the identity of the underlying group).
  static PermGroup bsgs(int degree, const std::vector<Permutation>& generators,
                        const std::vector<int>& base_prefix = {0});
  // Adopts a base and strong generating set known to be correct.
  static PermGroup from_trusted_bsgs(int degree, const std::vector<int>& base,
                                     const std::vector<Permutation>& strong_generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return strong_; }
  std::vector<int> base() const;
  BigInt order() const;
  int base_length() const { return static_cast<int>(levels_.size()); }
  // Basic orbit at the given base level.
  const std::vector<int>& basic_orbit(int level) const { return levels_[level].orbit; }

  bool contains(const Permutation& p) const;

  // Orbit label per point (labels ordered by least point) and the orbits
  // themselves, each ascending.
  std::vector<int> orbit_labels() const;
  std::vector<std::vector<int>> orbits() const;
  // Label per ordered pair x * degree + y.
  std::vector<int> orbital_labels() const;

  PermGroup point_stabilizer(int point) const;

 private:
  struct Level {
    int point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> slot;  // point -> index into transversal, or -1
    std::vector<Permutation> transversal;
  };
  void rebuild_level(int i);
  // Sifts from level `from`; returns the residue and the level reached.
  std::pair<Permutation, int> strip(Permutation p, int from) const;

  int degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

// Throws kNotSubgroup unless N <= K.
bool is_normal(const PermGroup& n, const PermGroup& k);
// Equal orbit partitions on ordered pairs.
bool two_equivalent(const PermGroup& k1, const PermGroup& k2);

// V(K, G); throws kDoesNotContainRegular unless G_r <= K.
SRing transitivity_module(const PermGroup& k, const AbelianGroup& group);

// Aut(G) acting on G, from a small generating subset of aut_group(G).
PermGroup aut_group_as_permgroup(const AbelianGroup& group);
// Small generating subset of aut_group(G), greedily chosen.
std::vector<Automorphism> aut_group_generators(const AbelianGroup& group);
// Hol(G) = G_r Aut(G).
PermGroup holomorph(const AbelianGroup& group);

}  // namespace sring
