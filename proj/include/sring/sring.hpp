#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "sring/element_set.hpp"
#include "sring/group.hpp"

namespace sring {

struct BasicSet {
  int id = 0;
  ElementSet members;
  std::vector<Elem> elements;  // ascending
  int inverse_class = 0;
  Subgroup radical;  // {g : g + X = X}
  Subgroup span;     // <X>
  int size() const { return static_cast<int>(elements.size()); }
};

// A validated S-ring. Class ids are ordered by minimal member, so class 0
// is {e}. Copies share the immutable data.
class SRing {
 public:
  SRing() = default;

  // Checks partition, {e}, inverse closure and product closure in that
  // order; throws kNotPartition, kIdentityNotSingleton, kNotInverseClosed
  // or kProductNotClosed.
  static SRing validate(const AbelianGroup& group,
                        const std::vector<ElementSet>& partition);
  // class_of[x] is an arbitrary label per element.
  static SRing from_labels(const AbelianGroup& group,
                           const std::vector<int>& labels);

  const AbelianGroup& group() const { return impl_->group; }
  int rank() const { return static_cast<int>(impl_->classes.size()); }
  const std::vector<BasicSet>& classes() const { return impl_->classes; }
  const BasicSet& basic_set(int id) const { return impl_->classes[id]; }
  int class_of(Elem x) const { return impl_->class_of[x]; }
  const std::vector<int>& class_of_table() const { return impl_->class_of; }
  std::vector<ElementSet> partition() const;

  // Nonzero (Z, c^Z_{XY}) pairs of X * Y, ascending in Z.
  const std::vector<std::pair<int, int>>& product(int x, int y) const {
    return impl_->products[x * rank() + y];
  }
  int structure_constant(int x, int y, int z) const;

  // True iff the set is a union of classes.
  bool is_a_set(const ElementSet& set) const;
  bool is_a_subgroup(const Subgroup& h) const { return is_a_set(h.members()); }

  bool operator==(const SRing& other) const;

 private:
  struct Impl {
    AbelianGroup group;
    std::vector<BasicSet> classes;
    std::vector<int> class_of;
    std::vector<std::vector<std::pair<int, int>>> products;
  };
  std::shared_ptr<const Impl> impl_;
};

SRing group_ring(const AbelianGroup& group);    // ZG
SRing trivial_sring(const AbelianGroup& group);  // T_G

// Subgroups of G that are unions of classes, in subgroup order.
std::vector<Subgroup> a_subgroups(const SRing& a);
const Subgroup& radical(const SRing& a, int x);
const Subgroup& span(const SRing& a, int x);
bool is_primitive(const SRing& a);

// S-ring induced on U/L; throws kSectionNotASection unless U and L are
// A-subgroups.
SRing induced(const SRing& a, const Section& section);
// Restriction to U, presented over Section(G, U, {e}).quotient().
SRing restrict_to(const SRing& a, const Subgroup& u);
// Quotient by L, presented over Section(G, G, L).quotient().
SRing quotient_of(const SRing& a, const Subgroup& l);

// X^(m); throws kNotCoprime.
ElementSet power_map(const SRing& a, int x, long long m);
// X^[p] = {p x : |X cap (H + x)| != 0 mod p}, H = {g : p g = 0};
// throws kNotDivisor.
ElementSet wielandt_p(const SRing& a, int x, int p);
// Common value of |X cap (H + x)|; throws kHNotASubgroup.
int lambda(const SRing& a, int x, const Subgroup& h);

}  // namespace sring
