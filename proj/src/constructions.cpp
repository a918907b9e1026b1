#include "sring/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sring/cyclotomic.hpp"
#include "sring/error.hpp"

namespace sring {

SRing cyclotomic(const AbelianGroup& group,
                 const std::vector<Automorphism>& generators) {
  const int n = group.order();
  std::vector<int> labels(n, -1);
  int next = 0;
  for (Elem x = 0; x < n; ++x) {
    if (labels[x] >= 0) continue;
    labels[x] = next;
    std::vector<Elem> queue{x};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& s : generators) {
        const Elem y = s.apply(queue[i]);
        if (labels[y] < 0) {
          labels[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return SRing::from_labels(group, labels);
}

Elem tensor_index(const SRing& a1, const SRing& a2, Elem x1, Elem x2) {
  (void)a1;
  return x1 * a2.group().order() + x2;
}

SRing tensor(const SRing& a1, const SRing& a2) {
  std::vector<int> factors = a1.group().factors();
  const auto& f2 = a2.group().factors();
  factors.insert(factors.end(), f2.begin(), f2.end());
  const std::size_t order =
      static_cast<std::size_t>(a1.group().order()) * a2.group().order();
  AbelianGroup g = AbelianGroup::make(factors, std::max(order, default_max_order()));
  std::vector<int> labels(g.order());
  for (Elem x1 = 0; x1 < a1.group().order(); ++x1) {
    for (Elem x2 = 0; x2 < a2.group().order(); ++x2) {
      labels[tensor_index(a1, a2, x1, x2)] =
          a1.class_of(x1) * a2.rank() + a2.class_of(x2);
    }
  }
  return SRing::from_labels(g, labels);
}

namespace {

void check_partition_of(const ElementSet& whole, const std::vector<ElementSet>& parts,
                        const char* what) {
  ElementSet seen(whole.universe());
  for (const auto& p : parts) {
    if (p.universe() != whole.universe() || p.empty() || p.intersects(seen) ||
        !p.is_subset_of(whole)) {
      fail(ErrorKind::kNotPartition, std::string(what) + " is not a partition");
    }
    seen |= p;
  }
  if (!(seen == whole)) {
    fail(ErrorKind::kNotPartition, std::string(what) + " is not a partition");
  }
}

ElementSet saturate(const AbelianGroup& group, const ElementSet& set,
                    const Subgroup& l) {
  ElementSet out = group.empty_set();
  const auto ls = l.members().elements();
  set.for_each([&](Elem x) {
    for (Elem t : ls) out.set(group.add(x, t));
  });
  return out;
}

}  // namespace

SRing generalized_wreath(const AbelianGroup& group, const WreathSpec& spec) {
  const Subgroup& u = spec.upper;
  const Subgroup& l = spec.lower;
  if (!is_subgroup(group, u.members()) || !is_subgroup(group, l.members()) ||
      !u.contains(l)) {
    fail(ErrorKind::kSectionNotASection, "U/L is not a section");
  }
  check_partition_of(u.members(), spec.bottom, "bottom");
  check_partition_of(group.full_set(), spec.top, "top");
  for (const auto& y : spec.top) {
    if (!(saturate(group, y, l) == y)) {
      fail(ErrorKind::kIncompatibleSection, "top class is not a union of L-cosets");
    }
  }

  // Both operands must be S-rings over their own groups.
  const Section su(group, u, trivial_subgroup(group));
  const Section sq(group, whole_group(group), l);
  std::vector<ElementSet> bottom_q;
  for (const auto& x : spec.bottom) bottom_q.push_back(su.project_set(x));
  const SRing bottom = SRing::validate(su.quotient(), bottom_q);
  std::vector<ElementSet> top_q;
  for (const auto& y : spec.top) top_q.push_back(sq.project_set(y));
  const SRing top = SRing::validate(sq.quotient(), top_q);

  if (!bottom.is_a_set(su.project_set(l.members()))) {
    fail(ErrorKind::kIncompatibleSection, "L is not a subgroup of the bottom S-ring");
  }
  std::set<ElementSet> from_bottom;
  for (const auto& x : spec.bottom) from_bottom.insert(saturate(group, x, l));
  std::set<ElementSet> from_top;
  for (const auto& y : spec.top) {
    if (y.is_subset_of(u.members())) {
      from_top.insert(y);
    } else if (y.intersects(u.members())) {
      fail(ErrorKind::kIncompatibleSection, "U is not a subgroup of the top S-ring");
    }
  }
  if (from_bottom != from_top) {
    fail(ErrorKind::kIncompatibleSection,
         "operands induce different S-rings on U/L");
  }

  std::vector<ElementSet> classes = spec.bottom;
  for (const auto& y : spec.top) {
    if (!y.intersects(u.members())) classes.push_back(y);
  }
  return SRing::validate(group, classes);
}

SRing generalized_wreath(const AbelianGroup& group, const Subgroup& upper,
                         const Subgroup& lower, const SRing& bottom,
                         const SRing& top) {
  const Section su(group, upper, trivial_subgroup(group));
  const Section sq(group, whole_group(group), lower);
  if (!(bottom.group() == su.quotient()) || !(top.group() == sq.quotient())) {
    fail(ErrorKind::kMismatchedGroups, "operands are over the wrong groups");
  }
  WreathSpec spec{upper, lower, {}, {}};
  for (const auto& b : bottom.classes()) spec.bottom.push_back(su.preimage(b.members));
  for (const auto& b : top.classes()) spec.top.push_back(sq.preimage(b.members));
  return generalized_wreath(group, spec);
}

WreathCheck is_generalized_wreath(const SRing& a, const Subgroup& upper,
                                  const Subgroup& lower) {
  if (!a.is_a_subgroup(upper) || !a.is_a_subgroup(lower) ||
      !is_subgroup(a.group(), upper.members()) ||
      !is_subgroup(a.group(), lower.members()) || !upper.contains(lower)) {
    fail(ErrorKind::kSectionNotASection, "U/L is not an A-section");
  }
  WreathCheck out;
  out.is_wreath = true;
  for (const auto& b : a.classes()) {
    if (b.members.is_subset_of(upper.members())) continue;
    if (!b.radical.contains(lower)) {
      out.is_wreath = false;
      break;
    }
  }
  out.nontrivial = lower.order() > 1 && upper.order() < a.group().order();
  return out;
}

bool is_star(const SRing& a, const Subgroup& l, const Subgroup& u) {
  const AbelianGroup& g = a.group();
  if (!is_subgroup(g, l.members()) || !is_subgroup(g, u.members()) ||
      !a.is_a_subgroup(l) || !a.is_a_subgroup(u)) {
    fail(ErrorKind::kSectionNotASection, "L and U must be A-subgroups");
  }
  const Subgroup lu = intersection(g, l, u);
  const ElementSet both = l.members() | u.members();
  std::vector<const BasicSet*> in_l;
  std::vector<const BasicSet*> in_u;
  for (const auto& b : a.classes()) {
    if (b.members.is_subset_of(l.members())) in_l.push_back(&b);
    if (b.members.is_subset_of(u.members())) in_u.push_back(&b);
  }
  for (const auto& b : a.classes()) {
    if (b.members.is_subset_of(u.members()) && !b.members.is_subset_of(l.members())) {
      if (!b.radical.contains(lu)) return false;
    } else if (!b.members.intersects(both)) {
      bool found = false;
      for (const BasicSet* y : in_l) {
        for (const BasicSet* z : in_u) {
          if (y->size() * z->size() < b.size()) continue;
          ElementSet prod = g.empty_set();
          for (Elem s : y->elements) {
            for (Elem t : z->elements) prod.set(g.add(s, t));
          }
          if (prod == b.members) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_tensor_decomposition(const SRing& a, const Subgroup& h1,
                             const Subgroup& h2) {
  const AbelianGroup& g = a.group();
  if (!a.is_a_subgroup(h1) || !a.is_a_subgroup(h2)) return false;
  if (static_cast<long long>(h1.order()) * h2.order() != g.order()) return false;
  if (h1.members().intersects(h2.members() - trivial_subgroup(g).members())) {
    return false;
  }
  std::vector<Elem> c1(g.order(), -1);
  std::vector<Elem> c2(g.order(), -1);
  const auto e1 = h1.members().elements();
  const auto e2 = h2.members().elements();
  for (Elem x : e1) {
    for (Elem y : e2) {
      const Elem s = g.add(x, y);
      c1[s] = x;
      c2[s] = y;
    }
  }
  for (const auto& b : a.classes()) {
    ElementSet p1 = g.empty_set();
    ElementSet p2 = g.empty_set();
    for (Elem x : b.elements) {
      p1.set(c1[x]);
      p2.set(c2[x]);
    }
    if (p1.count() * p2.count() != b.size()) return false;
    if (!(a.basic_set(a.class_of(p1.first())).members == p1)) return false;
    if (!(a.basic_set(a.class_of(p2.first())).members == p2)) return false;
  }
  return true;
}

bool is_nontrivial_tensor(const SRing& a) {
  const auto subs = a_subgroups(a);
  const int n = a.group().order();
  for (const auto& h1 : subs) {
    if (h1.order() == 1 || h1.order() == n) continue;
    for (const auto& h2 : subs) {
      if (h2.order() * h1.order() != n) continue;
      if (is_tensor_decomposition(a, h1, h2)) return true;
    }
  }
  return false;
}

SRing dual(const SRing& a) {
  const AbelianGroup& g = a.group();
  const CyclotomicRing ring(g.exponent());
  std::map<std::vector<CycloValue>, int> key_to_label;
  std::vector<int> labels(g.order());
  for (Elem y = 0; y < g.order(); ++y) {
    std::vector<CycloValue> key;
    key.reserve(a.rank());
    for (const auto& b : a.classes()) key.push_back(char_value(ring, g, y, b.members));
    auto it = key_to_label.emplace(std::move(key), static_cast<int>(key_to_label.size()));
    labels[y] = it.first->second;
  }
  return SRing::from_labels(g, labels);
}

}  // namespace sring
