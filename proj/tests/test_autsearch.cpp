#include <doctest.h>

#include "helpers.hpp"
#include "sring/autsearch.hpp"
#include "sring/constructions.hpp"

using namespace sring;
using test::kind_of;
using test::to_oracle;

TEST_SUITE("autsearch") {
  TEST_CASE("Aut(T_G) is the full symmetric group") {
    for (const char* lit : {"2", "3", "4", "2x2", "5", "6", "7", "2x4", "2x2x2", "3x3"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      INFO(lit);
      const AutResult r = aut_search(trivial_sring(g));
      CHECK(r.group.order() == BigInt(oracle::factorial(g.order())));
      CHECK(r.stabilizer.order() == BigInt(oracle::factorial(g.order() - 1)));
    }
  }

  TEST_CASE("Aut(ZG) is the regular representation") {
    for (const char* lit : {"8", "2x4", "2x2x3"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      CHECK(aut_search(group_ring(g)).group.order() == g.order());
    }
  }

  TEST_CASE("orders and orbits agree with backtracking") {
    for (const char* lit : {"8", "2x4", "2x2x2", "9", "3x3", "2x2x3", "12", "10"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      const oracle::Group og(g.factors());
      INFO(lit);
      for (const SRing& a : enumerate_all(g)) {
        const oracle::AutStats st = oracle::aut_stabilizer(og, to_oracle(a));
        const AutResult r = aut_search(a);
        if (!st.complete) {
          CHECK(r.stabilizer.order() >= BigInt(st.stabilizer_order));
          continue;
        }
        CHECK(r.stabilizer.order() == BigInt(st.stabilizer_order));
        CHECK(r.group.order() == BigInt(st.stabilizer_order) * g.order());
        const auto orbits = r.stabilizer.orbits();
        for (const auto& orbit : orbits) {
          CHECK(std::set<int>(orbit.begin(), orbit.end()) == st.orbits[orbit.front()]);
        }
        for (const auto& gen : r.stabilizer_generators) {
          CHECK(gen[0] == 0);
          CHECK(preserves_classes(a, gen));
        }
      }
    }
  }

  TEST_CASE("translations preserve classes") {
    const AbelianGroup g = AbelianGroup::parse("4x2");
    for (const SRing& a : enumerate_all(g)) {
      for (Elem t = 0; t < g.order(); ++t) CHECK(preserves_classes(a, translation(g, t)));
      const PermGroup aut = aut_sring(a);
      for (const auto& gen : regular_generators(g)) CHECK(aut.contains(gen));
    }
  }

  TEST_CASE("refinement") {
    const AbelianGroup c8 = AbelianGroup::parse("8");
    const SRing a = SRing::validate(c8, test::sets(c8, {{"0"}, {"1", "3", "5", "7"}, {"2", "6"}, {"4"}}));
    const ColorConfig cfg(a);
    CHECK(cfg.degree() == 8);
    CHECK(cfg.num_colors() == 4);
    CHECK(cfg.color(1, 3) == a.class_of(2));
    std::vector<int> colors(8, 0);
    colors[0] = 1;
    const std::vector<int> cells = refine(cfg, colors);
    // Individualizing 0 splits the vertices into the classes.
    for (Elem x = 0; x < 8; ++x)
      for (Elem y = 0; y < 8; ++y) CHECK((cells[x] == cells[y]) == (a.class_of(x) == a.class_of(y)));
    CHECK(refine(cfg, std::vector<int>(8, 0)) == std::vector<int>(8, 0));
  }

  TEST_CASE("degree bound") {
    const AbelianGroup big = AbelianGroup::parse("4x5x13");
    CHECK(kind_of([&] { aut_search(trivial_sring(big)); }) == ErrorKind::kBoundExceeded);
  }
}
