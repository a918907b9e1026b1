#include "sring/sring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sring/error.hpp"

namespace sring {

namespace {

Subgroup translation_stabilizer(const AbelianGroup& group,
                                const std::vector<Elem>& elems,
                                const ElementSet& members) {
  ElementSet rad = group.empty_set();
  const Elem x0 = elems.front();
  for (Elem x : elems) {
    const Elem g = group.sub(x, x0);
    bool ok = true;
    for (Elem y : elems) {
      if (!members.test(group.add(y, g))) {
        ok = false;
        break;
      }
    }
    if (ok) rad.set(g);
  }
  return generated_subgroup(group, rad);
}

std::string format_set(const AbelianGroup& group, const std::vector<Elem>& elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ' ';
    out += '(' + group.format(elems[i]) + ')';
  }
  return out + "}";
}

}  // namespace

SRing SRing::validate(const AbelianGroup& group,
                      const std::vector<ElementSet>& partition) {
  const int n = group.order();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const ElementSet& s = partition[i];
    if (s.universe() != n) {
      fail(ErrorKind::kNotPartition, "class universe does not match the group");
    }
    if (s.empty()) fail(ErrorKind::kNotPartition, "empty class");
    bool overlap = false;
    s.for_each([&](Elem x) {
      if (owner[x] >= 0) overlap = true;
      owner[x] = static_cast<int>(i);
    });
    if (overlap) fail(ErrorKind::kNotPartition, "classes are not disjoint");
  }
  for (Elem x = 0; x < n; ++x) {
    if (owner[x] < 0) {
      fail(ErrorKind::kNotPartition,
           "element (" + group.format(x) + ") is not covered");
    }
  }
  if (partition[owner[0]].count() != 1) {
    fail(ErrorKind::kIdentityNotSingleton, "{e} is not a class");
  }

  // Canonical order by minimal member.
  std::vector<int> order(partition.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return partition[a].first() < partition[b].first();
  });
  auto impl = std::make_shared<Impl>();
  impl->group = group;
  impl->class_of.assign(n, 0);
  for (std::size_t id = 0; id < order.size(); ++id) {
    BasicSet b;
    b.id = static_cast<int>(id);
    b.members = partition[order[id]];
    b.elements = b.members.elements();
    for (Elem x : b.elements) impl->class_of[x] = b.id;
    impl->classes.push_back(std::move(b));
  }

  for (auto& b : impl->classes) {
    const int inv = impl->class_of[group.neg(b.elements.front())];
    const auto& other = impl->classes[inv];
    bool ok = other.size() == b.size();
    for (Elem x : b.elements) {
      if (!ok) break;
      ok = other.members.test(group.neg(x));
    }
    if (!ok) {
      fail(ErrorKind::kNotInverseClosed,
           "inverse of class " + format_set(group, b.elements) + " is not a class");
    }
    b.inverse_class = inv;
  }

  const int r = static_cast<int>(impl->classes.size());
  impl->products.resize(static_cast<std::size_t>(r) * r);
  std::vector<int> mult(n);
  for (int xi = 0; xi < r; ++xi) {
    for (int yi = 0; yi < r; ++yi) {
      std::fill(mult.begin(), mult.end(), 0);
      for (Elem x : impl->classes[xi].elements) {
        for (Elem y : impl->classes[yi].elements) ++mult[group.add(x, y)];
      }
      auto& prod = impl->products[xi * r + yi];
      for (int zi = 0; zi < r; ++zi) {
        const auto& z = impl->classes[zi].elements;
        const int c = mult[z.front()];
        for (Elem g : z) {
          if (mult[g] != c) {
            fail(ErrorKind::kProductNotClosed,
                 "product of " + format_set(group, impl->classes[xi].elements) +
                     " and " + format_set(group, impl->classes[yi].elements) +
                     " has multiplicity " + std::to_string(c) + " at (" +
                     group.format(z.front()) + ") but " +
                     std::to_string(mult[g]) + " at (" + group.format(g) + ")");
          }
        }
        if (c != 0) prod.emplace_back(zi, c);
      }
    }
  }

  for (auto& b : impl->classes) {
    b.radical = translation_stabilizer(group, b.elements, b.members);
    b.span = generated_subgroup(group, b.members);
  }
  SRing result;
  result.impl_ = std::move(impl);
  return result;
}

SRing SRing::from_labels(const AbelianGroup& group,
                         const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != group.order()) {
    fail(ErrorKind::kNotPartition, "label count does not match the group");
  }
  std::map<int, ElementSet> classes;
  for (Elem x = 0; x < group.order(); ++x) {
    auto it = classes.try_emplace(labels[x], group.empty_set()).first;
    it->second.set(x);
  }
  std::vector<ElementSet> partition;
  for (auto& [label, set] : classes) partition.push_back(std::move(set));
  return validate(group, partition);
}

std::vector<ElementSet> SRing::partition() const {
  std::vector<ElementSet> out;
  for (const auto& b : impl_->classes) out.push_back(b.members);
  return out;
}

int SRing::structure_constant(int x, int y, int z) const {
  for (const auto& [zi, c] : product(x, y)) {
    if (zi == z) return c;
  }
  return 0;
}

bool SRing::is_a_set(const ElementSet& set) const {
  for (const auto& b : impl_->classes) {
    if (b.members.intersects(set) && !b.members.is_subset_of(set)) return false;
  }
  return true;
}

bool SRing::operator==(const SRing& other) const {
  return impl_->group == other.impl_->group &&
         impl_->class_of == other.impl_->class_of;
}

SRing group_ring(const AbelianGroup& group) {
  std::vector<int> labels(group.order());
  std::iota(labels.begin(), labels.end(), 0);
  return SRing::from_labels(group, labels);
}

SRing trivial_sring(const AbelianGroup& group) {
  std::vector<int> labels(group.order(), 1);
  labels[0] = 0;
  return SRing::from_labels(group, labels);
}

std::vector<Subgroup> a_subgroups(const SRing& a) {
  std::vector<Subgroup> out;
  for (const auto& h : a.group().subgroups()) {
    if (a.is_a_subgroup(h)) out.push_back(h);
  }
  return out;
}

const Subgroup& radical(const SRing& a, int x) { return a.basic_set(x).radical; }
const Subgroup& span(const SRing& a, int x) { return a.basic_set(x).span; }

bool is_primitive(const SRing& a) {
  for (const auto& h : a.group().subgroups()) {
    if (h.order() == 1 || h.order() == a.group().order()) continue;
    if (a.is_a_subgroup(h)) return false;
  }
  return true;
}

SRing induced(const SRing& a, const Section& section) {
  if (!a.is_a_subgroup(section.upper()) || !a.is_a_subgroup(section.lower())) {
    fail(ErrorKind::kSectionNotASection,
         "section bounds are not A-subgroups");
  }
  const AbelianGroup& q = section.quotient();
  std::vector<int> labels(q.order(), -1);
  for (const auto& b : a.classes()) {
    if (!b.members.is_subset_of(section.upper().members())) continue;
    for (Elem x : b.elements) labels[section.project(x)] = b.id;
  }
  // Classes meeting a common coset are merged by the projection.
  std::vector<int> rep(a.rank());
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (const auto& b : a.classes()) {
    if (!b.members.is_subset_of(section.upper().members())) continue;
    for (Elem x : b.elements) {
      const int u = find(labels[section.project(x)]);
      const int v = find(b.id);
      if (u != v) rep[std::max(u, v)] = std::min(u, v);
    }
  }
  for (auto& l : labels) l = find(l);
  return SRing::from_labels(q, labels);
}

SRing restrict_to(const SRing& a, const Subgroup& u) {
  return induced(a, Section(a.group(), u, trivial_subgroup(a.group())));
}

SRing quotient_of(const SRing& a, const Subgroup& l) {
  return induced(a, Section(a.group(), whole_group(a.group()), l));
}

ElementSet power_map(const SRing& a, int x, long long m) {
  const AbelianGroup& g = a.group();
  if (gcd_ll(m, g.order()) != 1) {
    fail(ErrorKind::kNotCoprime,
         std::to_string(m) + " is not coprime to the group order");
  }
  ElementSet out = g.empty_set();
  for (Elem e : a.basic_set(x).elements) out.set(g.scale(e, m));
  if (!(a.basic_set(a.class_of(out.first())).members == out)) {
    fail(ErrorKind::kInternal, "power of a class is not a class");
  }
  return out;
}

ElementSet wielandt_p(const SRing& a, int x, int p) {
  const AbelianGroup& g = a.group();
  if (p < 2 || !is_prime(p) || g.order() % p != 0) {
    fail(ErrorKind::kNotDivisor,
         std::to_string(p) + " is not a prime divisor of the group order");
  }
  const auto h = omega(g, p).members().elements();
  const auto& b = a.basic_set(x);
  ElementSet out = g.empty_set();
  for (Elem e : b.elements) {
    int c = 0;
    for (Elem t : h) c += b.members.test(g.add(e, t)) ? 1 : 0;
    if (c % p != 0) out.set(g.scale(e, p));
  }
  if (!a.is_a_set(out)) {
    fail(ErrorKind::kInternal, "X^[p] is not a union of classes");
  }
  return out;
}

int lambda(const SRing& a, int x, const Subgroup& h) {
  const AbelianGroup& g = a.group();
  if (!is_subgroup(g, h.members()) || !a.is_a_subgroup(h)) {
    fail(ErrorKind::kHNotASubgroup, "H is not an A-subgroup");
  }
  const auto hs = h.members().elements();
  const auto& b = a.basic_set(x);
  int value = -1;
  for (Elem e : b.elements) {
    int c = 0;
    for (Elem t : hs) c += b.members.test(g.add(e, t)) ? 1 : 0;
    if (value >= 0 && c != value) {
      fail(ErrorKind::kInternal, "|X cap Hx| is not constant on X");
    }
    value = c;
  }
  return value;
}

}  // namespace sring
