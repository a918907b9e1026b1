#include "sring/property_suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sring/autsearch.hpp"
#include "sring/constructions.hpp"
#include "sring/cyclotomic.hpp"
#include "sring/error.hpp"
#include "sring/schurity.hpp"

namespace sring {

void PropertyReport::merge(const PropertyReport& other) {
  for (const auto& [name, count] : other.checks) checks[name] += count;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

void check(PropertyReport& report, const std::string& name, int entry, bool ok,
           const std::string& detail = {}) {
  ++report.checks[name];
  if (!ok) report.failures.push_back({name, entry, detail});
}

std::string class_detail(int x) { return "class " + std::to_string(x); }

// Stabilizer of the set under translation.
ElementSet set_radical(const AbelianGroup& g, const ElementSet& s) {
  ElementSet out = g.empty_set();
  if (s.empty()) return g.full_set();
  const Elem x0 = s.first();
  s.for_each([&](Elem y) {
    const Elem t = g.sub(y, x0);
    bool fixes = true;
    s.for_each([&](Elem z) { fixes = fixes && s.test(g.add(z, t)); });
    if (fixes) out.set(t);
  });
  return out;
}

bool expect_no_internal(PropertyReport& report, const std::string& name, int entry,
                        const std::string& detail, const auto& body) {
  try {
    body();
    check(report, name, entry, true);
    return true;
  } catch (const Error& e) {
    check(report, name, entry, false, detail + ": " + e.what());
    return false;
  }
}

void orbit_slices(PropertyReport& report, int entry, const SRing& a) {
  const AbelianGroup& g = a.group();
  for (int p : prime_divisors(g.order())) {
    // D: Sylow p-subgroup, H: its complement.
    ElementSet ds = g.empty_set();
    ElementSet hs = g.empty_set();
    for (Elem x = 0; x < g.order(); ++x) {
      const int o = g.element_order(x);
      int q = o;
      while (q % p == 0) q /= p;
      if (q == 1) ds.set(x);
      if (o % p != 0) hs.set(x);
    }
    const int n = ds.count();
    Elem gen = -1;
    for (Elem x : ds.elements()) {
      if (g.element_order(x) == n) gen = x;
    }
    if (gen < 0) continue;  // D is not cyclic
    // Multipliers: identity on H, d -> m d on D.
    std::vector<int> multipliers;
    for (int m = 1; m < n; ++m) {
      if (m % p != 0) multipliers.push_back(m);
    }
    auto act = [&](Elem x, int m) {
      Elem h = -1;
      for (Elem c : hs.elements()) {
        if (ds.test(g.sub(x, c))) {
          h = c;
          break;
        }
      }
      const Elem d = g.sub(x, h);
      return g.add(h, g.scale(d, m));
    };
    std::vector<std::vector<Elem>> image(multipliers.size(), std::vector<Elem>(g.order()));
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
      for (Elem x = 0; x < g.order(); ++x) image[i][x] = act(x, multipliers[i]);
    }
    for (const auto& b : a.classes()) {
      std::vector<int> k;
      for (std::size_t i = 0; i < multipliers.size(); ++i) {
        bool fixes = true;
        for (Elem x : b.elements) fixes = fixes && b.members.test(image[i][x]);
        if (fixes) k.push_back(static_cast<int>(i));
      }
      for (Elem h : hs.elements()) {
        std::map<int, ElementSet> slices;
        for (Elem d : ds.elements()) {
          if (!b.members.test(g.add(h, d))) continue;
          auto it = slices.try_emplace(g.element_order(d), g.empty_set()).first;
          it->second.set(d);
        }
        for (const auto& [l, slice] : slices) {
          const Elem d0 = slice.first();
          ElementSet orbit = g.empty_set();
          for (int i : k) orbit.set(image[i][d0]);
          std::ostringstream detail;
          detail << class_detail(b.id) << ", p " << p << ", h " << g.format(h) << ", order " << l;
          check(report, "orbit_slices", entry, orbit == slice, detail.str());
        }
      }
    }
  }
}

void separation(PropertyReport& report, int entry, const SRing& a) {
  const AbelianGroup& g = a.group();
  for (const auto& h : g.subgroups()) {
    for (const auto& b : a.classes()) {
      const ElementSet inside = b.members & h.members();
      const ElementSet outside = b.members - h.members();
      if (inside.empty() || outside.empty()) continue;
      if (!h.members().is_subset_of(set_radical(g, outside))) continue;
      const bool ok = b.radical.members().is_subset_of(h.members()) &&
                      b.members == (b.span.members() - b.radical.members());
      check(report, "separation", entry, ok, class_detail(b.id));
    }
  }
}

std::vector<ElementSet> member_sets(const std::vector<Subgroup>& subs) {
  std::vector<ElementSet> out;
  for (const auto& s : subs) out.push_back(s.members());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PropertyReport multiplier_suite(const Catalog& catalog) {
  PropertyReport report;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const int entry = static_cast<int>(i);
    const SRing& a = catalog.entries[i].sring;
    const AbelianGroup& g = a.group();
    for (int x = 0; x < a.rank(); ++x) {
      for (int y = 0; y < a.rank(); ++y) {
        long long total = 0;
        for (const auto& [z, c] : a.product(x, y)) {
          total += static_cast<long long>(c) * a.basic_set(z).size();
        }
        check(report, "structure_sum", entry,
              total == static_cast<long long>(a.basic_set(x).size()) * a.basic_set(y).size(),
              class_detail(x) + " x " + class_detail(y));
      }
      check(report, "radical_span", entry,
            a.is_a_subgroup(radical(a, x)) && a.is_a_subgroup(span(a, x)), class_detail(x));
    }
    const auto subs = a_subgroups(a);
    for (const auto& h : subs) {
      for (int x = 0; x < a.rank(); ++x) {
        expect_no_internal(report, "intersection", entry, class_detail(x),
                           [&] { lambda(a, x, h); });
      }
    }
    separation(report, entry, a);
    for (long long m = 1; m <= std::max(g.exponent(), 1); ++m) {
      if (gcd_ll(m, g.order()) != 1) continue;
      for (int x = 0; x < a.rank(); ++x) {
        expect_no_internal(report, "first_multiplier", entry,
                           class_detail(x) + ", m " + std::to_string(m),
                           [&] { power_map(a, x, m); });
      }
    }
    for (int p : prime_divisors(g.order())) {
      for (int x = 0; x < a.rank(); ++x) {
        expect_no_internal(report, "second_multiplier", entry,
                           class_detail(x) + ", p " + std::to_string(p),
                           [&] { wielandt_p(a, x, p); });
      }
    }
    orbit_slices(report, entry, a);
  }
  return report;
}

PropertyReport duality_suite(const Catalog& catalog) {
  PropertyReport report;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const int entry = static_cast<int>(i);
    const SRing& a = catalog.entries[i].sring;
    const AbelianGroup& g = a.group();
    const SRing d = dual(a);
    check(report, "dual_involution", entry, dual(d) == a);
    check(report, "dual_rank", entry, d.rank() == a.rank());

    const auto subs = a_subgroups(a);
    std::vector<Subgroup> perps;
    for (const auto& h : subs) perps.push_back(perp(g, h));
    check(report, "dual_lattice", entry,
          member_sets(perps) == member_sets(a_subgroups(d)));

    for (std::size_t x = 0; x < subs.size(); ++x) {
      for (std::size_t y = 0; y < subs.size(); ++y) {
        const Subgroup& h1 = subs[x];
        const Subgroup& h2 = subs[y];
        if (static_cast<long long>(h1.order()) * h2.order() != g.order()) continue;
        if (intersection(g, h1, h2).order() != 1) continue;
        const bool direct = is_tensor_decomposition(a, h1, h2);
        const bool dualized = is_tensor_decomposition(d, perps[y], perps[x]);
        check(report, "dual_tensor", entry, direct == dualized,
              "subgroups of order " + std::to_string(h1.order()) + " and " +
                  std::to_string(h2.order()));
      }
    }
    for (std::size_t u = 0; u < subs.size(); ++u) {
      for (std::size_t l = 0; l < subs.size(); ++l) {
        if (!subs[u].contains(subs[l])) continue;
        const bool direct = is_generalized_wreath(a, subs[u], subs[l]).is_wreath;
        const bool dualized = is_generalized_wreath(d, perps[l], perps[u]).is_wreath;
        check(report, "dual_wreath", entry, direct == dualized,
              "section of order " + std::to_string(subs[u].order() / subs[l].order()));
      }
    }
    try {
      check(report, "dual_cyclotomic", entry,
            is_cyclotomic(a).cyclotomic == is_cyclotomic(d).cyclotomic);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kAutGroupTooLarge) throw;
    }
  }
  return report;
}

PropertyReport galois_suite(const Catalog& catalog) {
  PropertyReport report;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const int entry = static_cast<int>(i);
    const SRing& a = catalog.entries[i].sring;
    const AutResult aut = aut_search(a);
    const bool schurian = schur_report(a, aut).schurian;
    const bool cyclotomic = is_cyclotomic(a).cyclotomic;
    const bool normal = is_normal(a, aut.group);
    check(report, "cyclotomic_implies_schurian", entry, !cyclotomic || schurian);
    if (schurian) {
      check(report, "schurian_idempotent", entry,
            transitivity_module(aut.group, a.group()) == a);
    }
    check(report, "normal_schurian_cyclotomic", entry, !(normal && schurian) || cyclotomic);
  }
  return report;
}

PropertyReport circulant_suite(const Catalog& catalog) {
  PropertyReport report;
  const AbelianGroup& g = catalog.group;
  if (!is_cyclic(g)) return report;
  const auto primes = prime_divisors(g.order());
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const int entry = static_cast<int>(i);
    const SRing& a = catalog.entries[i].sring;
    const AutResult aut = aut_search(a);
    const bool normal = is_normal(a, aut.group);
    const CyclotomicReport cyc = is_cyclotomic(a);
    check(report, "circulant_normal_cyclotomic", entry, !normal || cyc.cyclotomic);
    if (cyc.cyclotomic && g.order() > 1) {
      Elem gen = 0;
      while (g.element_order(gen) != g.order()) ++gen;
      check(report, "circulant_class_stabilizer", entry,
            static_cast<int>(cyc.class_stabilizer.size()) ==
                a.basic_set(a.class_of(gen)).size());
    }
    if (g.order() > 1) {
      // |rad(A)| > 1 iff A is a nontrivial generalized wreath product.
      const auto subs = a_subgroups(a);
      bool wreath = false;
      for (const auto& u : subs) {
        if (u.order() == g.order()) continue;
        for (const auto& l : subs) {
          if (l.order() == 1 || !u.contains(l)) continue;
          wreath = wreath || is_generalized_wreath(a, u, l).is_wreath;
        }
      }
      check(report, "circulant_radical_wreath", entry,
            (circulant_radical(a).order() > 1) == wreath);
    }
    if (primes.size() == 1) {
      // Classes with elements of different orders are differences of
      // A-subgroups.
      const auto subs = a_subgroups(a);
      for (const auto& b : a.classes()) {
        bool regular = true;
        for (Elem x : b.elements) {
          regular = regular && g.element_order(x) == g.element_order(b.elements.front());
        }
        if (regular) continue;
        bool found = false;
        for (const auto& u : subs) {
          for (const auto& l : subs) {
            if (u.contains(l) && b.members == (u.members() - l.members())) found = true;
          }
        }
        check(report, "cyclic_p_nonregular", entry, found, class_detail(b.id));
      }
    }
  }
  return report;
}

PropertyReport tensor_suite(const Catalog& first, const Catalog& second) {
  PropertyReport report;
  std::vector<BigInt> orders2;
  for (const auto& e2 : second.entries) orders2.push_back(aut_search(e2.sring).group.order());
  for (std::size_t i = 0; i < first.entries.size(); ++i) {
    const SRing& a1 = first.entries[i].sring;
    const BigInt o1 = aut_search(a1).group.order();
    const SRing d1 = dual(a1);
    for (std::size_t j = 0; j < second.entries.size(); ++j) {
      const SRing& a2 = second.entries[j].sring;
      const SRing t = tensor(a1, a2);
      const std::string detail = std::to_string(i) + " (x) " + std::to_string(j);
      check(report, "tensor_aut_order", -1, aut_search(t).group.order() == o1 * orders2[j],
            detail);
      check(report, "dual_of_tensor", -1, dual(t) == tensor(d1, dual(a2)), detail);
    }
  }
  return report;
}

PropertyReport run_property_suite(const Catalog& catalog) {
  PropertyReport report = multiplier_suite(catalog);
  report.merge(duality_suite(catalog));
  report.merge(galois_suite(catalog));
  report.merge(circulant_suite(catalog));
  return report;
}

}  // namespace sring
