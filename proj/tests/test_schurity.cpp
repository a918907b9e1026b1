#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "sring/constructions.hpp"
#include "sring/schurity.hpp"

using namespace sring;
using test::kind_of;
using test::to_oracle;

namespace {

// Cyclotomic iff the classes are the orbits of the class-stabilizing
// automorphisms, enumerated as all bijective homomorphisms.
bool oracle_cyclotomic(const AbelianGroup& g, const oracle::Partition& p) {
  const oracle::Group og(g.factors());
  const auto label = oracle::labels_of(p, og.n);
  std::vector<std::set<int>> orbit(og.n);
  for (int x = 0; x < og.n; ++x) orbit[x].insert(x);
  for (const auto& sigma : aut_group(g)) {
    bool fixes = true;
    for (int x = 0; x < og.n && fixes; ++x) fixes = label[sigma.apply(x)] == label[x];
    if (!fixes) continue;
    for (int x = 0; x < og.n; ++x) orbit[x].insert(sigma.apply(x));
  }
  for (const auto& c : p)
    if (orbit[c[0]] != std::set<int>(c.begin(), c.end())) return false;
  return true;
}

}  // namespace

TEST_SUITE("schurity") {
  TEST_CASE("schurity agrees with backtracking") {
    for (const char* lit : {"8", "2x4", "2x2x2", "3x3", "2x2x3", "12", "2x6"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      const oracle::Group og(g.factors());
      INFO(lit);
      for (const SRing& a : enumerate_all(g)) {
        const SchurReport r = is_schurian(a);
        CHECK(r.witness.has_value() == !r.schurian);
        const oracle::AutStats st = oracle::aut_stabilizer(og, to_oracle(a), 100000);
        if (!st.complete) continue;
        CHECK(r.schurian == oracle::orbits_are_classes(st, to_oracle(a)));
      }
    }
  }

  TEST_CASE("nonschurian rings over C4 x C4 carry a witness") {
    const AbelianGroup g = AbelianGroup::parse("4x4");
    const oracle::Group og(g.factors());
    int nonschurian = 0;
    for (const SRing& a : enumerate_all(g)) {
      if (a.rank() < 6) continue;
      const SchurReport r = is_schurian(a);
      const oracle::AutStats st = oracle::aut_stabilizer(og, to_oracle(a), 200000);
      if (!st.complete) continue;
      CHECK(r.aut_order == BigInt(st.stabilizer_order) * 16);
      CHECK(r.schurian == oracle::orbits_are_classes(st, to_oracle(a)));
      if (r.schurian) continue;
      ++nonschurian;
      REQUIRE(r.witness);
      const auto& cls = a.basic_set(r.witness->class_id).elements;
      CHECK(r.witness->orbit.size() < cls.size());
      for (Elem x : r.witness->orbit) CHECK(std::binary_search(cls.begin(), cls.end(), x));
    }
    CHECK(nonschurian > 0);
  }

  TEST_CASE("cyclotomicity agrees with the orbit oracle") {
    for (const char* lit : {"8", "2x4", "2x2x2", "9", "3x3", "2x2x3"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      INFO(lit);
      for (const SRing& a : enumerate_all(g)) {
        const CyclotomicReport r = is_cyclotomic(a);
        CHECK(r.cyclotomic == oracle_cyclotomic(g, to_oracle(a)));
        for (const auto& sigma : r.class_stabilizer)
          for (const auto& c : a.classes()) CHECK(sigma.apply(c.members) == c.members);
      }
    }
    CHECK(is_cyclotomic(trivial_sring(AbelianGroup::parse("5"))).cyclotomic);
    CHECK(is_cyclotomic(trivial_sring(AbelianGroup::parse("2x2x2"))).cyclotomic);
    CHECK_FALSE(is_cyclotomic(trivial_sring(AbelianGroup::parse("4"))).cyclotomic);
  }

  TEST_CASE("normality") {
    CHECK(is_normal(group_ring(AbelianGroup::parse("2x4"))));
    CHECK(is_normal(trivial_sring(AbelianGroup::parse("3"))));
    CHECK_FALSE(is_normal(trivial_sring(AbelianGroup::parse("4"))));
    CHECK_FALSE(is_normal(trivial_sring(AbelianGroup::parse("5"))));
    const AbelianGroup c7 = AbelianGroup::parse("7");
    CHECK(is_normal(cyclotomic(c7, {Automorphism::power_map(c7, 2)})));
  }

  TEST_CASE("circulant radical") {
    CHECK(is_cyclic(AbelianGroup::parse("12")));
    CHECK(is_cyclic(AbelianGroup::parse("4x3")));
    CHECK_FALSE(is_cyclic(AbelianGroup::parse("2x2")));
    const AbelianGroup c8 = AbelianGroup::parse("8");
    const SRing a = SRing::validate(c8, test::sets(c8, {{"0"}, {"1", "3", "5", "7"}, {"2", "6"}, {"4"}}));
    CHECK(circulant_radical(a).order() == 4);
    CHECK(circulant_radical(group_ring(c8)).order() == 1);
  }

  TEST_CASE("E4 x Cn classifier") {
    const AbelianGroup e4 = AbelianGroup::parse("2x2");
    const AbelianGroup c3 = AbelianGroup::parse("3");
    const SRing t = tensor(trivial_sring(e4), trivial_sring(c3));
    const auto tags = classify_e4cn(t);
    CHECK(std::find(tags.begin(), tags.end(), "tensor") != tags.end());
    const SRing z = group_ring(AbelianGroup::parse("2x2x3"));
    const auto ztags = classify_e4cn(z);
    CHECK(std::find(ztags.begin(), ztags.end(), "cyclotomic") != ztags.end());
    CHECK(kind_of([] { classify_e4cn(group_ring(AbelianGroup::parse("2x4"))); }) ==
          ErrorKind::kWrongGroupShape);
    CHECK(kind_of([] { classify_e4cn(trivial_sring(AbelianGroup::parse("2x2x3"))); }) ==
          ErrorKind::kPrecondition);
    for (const SRing& a : enumerate_all(AbelianGroup::parse("2x2x5"))) {
      if (a.rank() <= 2) continue;
      CHECK_FALSE(classify_e4cn(a).empty());
    }
  }
}
