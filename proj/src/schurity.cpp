#include "sring/schurity.hpp"

#include <algorithm>
#include <set>

#include "sring/constructions.hpp"
#include "sring/error.hpp"

namespace sring {

SchurReport schur_report(const SRing& a, const AutResult& aut) {
  SchurReport report;
  report.aut_order = aut.group.order();
  const auto labels = aut.stabilizer.orbit_labels();
  report.orbits = aut.stabilizer.orbits();
  report.schurian = static_cast<int>(report.orbits.size()) == a.rank();
  if (!report.schurian) {
    for (const auto& b : a.classes()) {
      const int l = labels[b.elements.front()];
      bool split = false;
      for (Elem x : b.elements) split = split || labels[x] != l;
      if (split) {
        report.witness = SchurWitness{b.id, report.orbits[l]};
        break;
      }
    }
  }
  return report;
}

SchurReport is_schurian(const SRing& a) { return schur_report(a, aut_search(a)); }

CyclotomicReport is_cyclotomic(const SRing& a) {
  const AbelianGroup& g = a.group();
  const std::vector<Automorphism>* all = nullptr;
  try {
    all = &aut_group(g);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kBoundExceeded) {
      fail(ErrorKind::kAutGroupTooLarge, e.what());
    }
    throw;
  }
  CyclotomicReport report;
  for (const auto& s : *all) {
    bool fixes = true;
    for (Elem x = 0; x < g.order() && fixes; ++x) {
      fixes = a.class_of(s.apply(x)) == a.class_of(x);
    }
    if (fixes) report.class_stabilizer.push_back(s);
  }
  // Orbits of K* refine the classes; count them.
  std::vector<char> seen(g.order(), 0);
  int orbits = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++orbits;
    for (const auto& s : report.class_stabilizer) seen[s.apply(x)] = 1;
  }
  report.cyclotomic = orbits == a.rank();
  return report;
}

bool is_normal(const SRing& a, const PermGroup& aut) {
  const PermGroup regular = PermGroup::bsgs(a.group().order(), regular_generators(a.group()));
  return is_normal(regular, aut);
}

bool is_normal(const SRing& a) { return is_normal(a, aut_sring(a)); }

bool is_cyclic(const AbelianGroup& group) {
  for (Elem x = 0; x < group.order(); ++x) {
    if (group.element_order(x) == group.order()) return true;
  }
  return false;
}

Subgroup circulant_radical(const SRing& a) {
  const AbelianGroup& g = a.group();
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return radical(a, a.class_of(x));
  }
  fail(ErrorKind::kWrongGroupShape, "group is not cyclic");
}

namespace {

// A_U = A_{H1} (x) A_{H2} inside G, for A-subgroups H1, H2 of U.
bool tensor_within(const SRing& a, const Subgroup& u, const Subgroup& h1,
                   const Subgroup& h2) {
  const AbelianGroup& g = a.group();
  if (!u.contains(h1) || !u.contains(h2)) return false;
  if (static_cast<long long>(h1.order()) * h2.order() != u.order()) return false;
  if (intersection(g, h1, h2).order() != 1) return false;
  std::vector<Elem> c1(g.order(), -1);
  std::vector<Elem> c2(g.order(), -1);
  for (Elem x : h1.members().elements()) {
    for (Elem y : h2.members().elements()) {
      const Elem s = g.add(x, y);
      c1[s] = x;
      c2[s] = y;
    }
  }
  for (const auto& b : a.classes()) {
    if (!b.members.is_subset_of(u.members())) continue;
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

bool circulant_cyclotomic_trivial_radical(const SRing& s) {
  if (!is_cyclic(s.group())) return false;
  if (circulant_radical(s).order() != 1) return false;
  return is_cyclotomic(s).cyclotomic;
}

bool is_power_of(long long n, long long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<std::string> classify_e4cn(const SRing& a) {
  const AbelianGroup& g = a.group();
  // H: Sylow 2-subgroup, D: Hall 2'-subgroup.
  ElementSet hs = g.empty_set();
  ElementSet ds = g.empty_set();
  for (Elem x = 0; x < g.order(); ++x) {
    const int o = g.element_order(x);
    if (is_power_of(o, 2)) hs.set(x);
    if (o % 2 == 1) ds.set(x);
  }
  const Subgroup h = generated_subgroup(g, hs);
  const Subgroup d = generated_subgroup(g, ds);
  const int n = d.order();
  const auto primes = prime_divisors(n);
  bool shape = h.order() == 4 && n > 1 && omega(g, 2).order() == 4;
  bool cyclic_d = false;
  for (Elem x : ds.elements()) cyclic_d = cyclic_d || g.element_order(x) == n;
  shape = shape && cyclic_d;
  if (shape) {
    if (primes.size() == 1) {
      shape = primes[0] % 2 == 1;
    } else if (primes.size() == 2) {
      shape = static_cast<long long>(primes[0]) * primes[1] == n;
    } else {
      shape = false;
    }
  }
  if (!shape) {
    fail(ErrorKind::kWrongGroupShape, "group is not E4 x C_n with n = p^k or pq");
  }
  if (a.rank() <= 2) fail(ErrorKind::kPrecondition, "S-ring is trivial");

  std::set<std::string> tags;
  if (is_cyclotomic(a).cyclotomic) tags.insert("cyclotomic");
  if (is_nontrivial_tensor(a)) tags.insert("tensor");

  const bool dense = a.is_a_subgroup(h) && a.is_a_subgroup(d);
  const bool n_power_of_3 = is_power_of(n, 3);
  const auto subs = a_subgroups(a);
  const Subgroup whole = whole_group(g);
  for (const auto& u : subs) {
    if (u.order() == g.order()) continue;
    for (const auto& l : subs) {
      if (l.order() == 1 || !u.contains(l)) continue;
      if (!is_generalized_wreath(a, u, l).is_wreath) continue;
      if (u.order() / l.order() <= 2) tags.insert("gwreath(1)");

      if (!tags.count("gwreath(2)")) {
        bool complemented = false;
        for (const auto& w : subs) {
          if (tensor_within(a, u, l, w)) {
            complemented = true;
            break;
          }
        }
        if (!complemented) {
          const Section sq(g, whole, l);
          const SRing q = induced(a, sq);
          const ElementSet s_img = sq.project_set(u.members());
          const Subgroup s_sub = generated_subgroup(sq.quotient(), s_img);
          for (const auto& w : a_subgroups(q)) {
            if (is_tensor_decomposition(q, s_sub, w)) {
              complemented = true;
              break;
            }
          }
        }
        if (complemented) tags.insert("gwreath(2)");
      }

      if (!dense && !tags.count("gwreath(3)")) {
        if (circulant_cyclotomic_trivial_radical(restrict_to(a, u)) ||
            circulant_cyclotomic_trivial_radical(quotient_of(a, l))) {
          tags.insert("gwreath(3)");
        }
      }

      if (dense && !tags.count("gwreath(4)") && u.contains(h) && d.contains(l)) {
        if (is_cyclotomic(restrict_to(a, u)).cyclotomic) {
          const Subgroup ud = intersection(g, u, d);
          const int r = circulant_radical(restrict_to(a, ud)).order();
          if (r == 1 || (n_power_of_3 && r == 3)) tags.insert("gwreath(4)");
        }
      }
    }
  }
  return std::vector<std::string>(tags.begin(), tags.end());
}

}  // namespace sring
