#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sring/enumerate.hpp"
#include "sring/io.hpp"

using namespace sring;
using test::kind_of;
using test::sets;
using test::to_oracle;

TEST_SUITE("enumerate") {
  TEST_CASE("closure examples") {
    const AbelianGroup c4 = AbelianGroup::parse("4");
    CHECK(sring_closure(c4, sets(c4, {{"0"}, {"1", "2"}, {"3"}})) == group_ring(c4));
    CHECK(sring_closure(c4, sets(c4, {{"0"}, {"1", "2", "3"}})) == trivial_sring(c4));
    CHECK(to_oracle(sring_closure(c4, sets(c4, {{"0"}, {"1", "2"}, {"3"}}))) ==
          oracle::coarsest_refining(oracle::all_srings(oracle::Group({4})), {{0}, {1, 2}, {3}}, 4));
    CHECK(sring_closure(c4, sets(c4, {{"0", "1", "2", "3"}})) == trivial_sring(c4));
    CHECK(kind_of([&] { sring_closure(c4, sets(c4, {{"0"}, {"1"}})); }) == ErrorKind::kNotPartition);
    CHECK(kind_of([&] { sring_closure(c4, sets(c4, {{"0", "1"}, {"1", "2", "3"}})); }) ==
          ErrorKind::kNotPartition);
  }

  TEST_CASE("closure is idempotent on S-rings") {
    for (const char* lit : {"8", "2x4", "2x2x3"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      for (const SRing& a : enumerate_all(g)) CHECK(sring_closure(g, a.partition()) == a);
    }
  }

  TEST_CASE("closure is the coarsest S-ring refining random partitions") {
    std::mt19937 rng(20240517);
    for (const char* lit : {"6", "8", "2x4", "9", "2x2x2"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      const auto all = oracle::all_srings(oracle::Group(g.factors()));
      for (int trial = 0; trial < 60; ++trial) {
        const int blocks = 1 + static_cast<int>(rng() % 4);
        std::vector<int> labels(g.order());
        for (auto& l : labels) l = static_cast<int>(rng() % blocks);
        const auto p = oracle::from_labels(labels);
        const SRing c = sring_closure(g, test::to_sets(g, p));
        CHECK(to_oracle(c) == oracle::coarsest_refining(all, p, g.order()));
        CHECK(SRing::from_labels(g, closure_labels(g, labels)) == c);
      }
    }
  }

  TEST_CASE("closure is monotone") {
    std::mt19937 rng(7);
    const AbelianGroup g = AbelianGroup::parse("2x2x3");
    const int n = g.order();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> coarse(n), fine(n);
      for (int x = 0; x < n; ++x) {
        coarse[x] = static_cast<int>(rng() % 2);
        fine[x] = coarse[x] * 2 + static_cast<int>(rng() % 2);
      }
      const auto cc = oracle::from_labels(closure_labels(g, coarse));
      const auto cf = oracle::from_labels(closure_labels(g, fine));
      CHECK(oracle::refines(cf, cc, n));
    }
  }

  TEST_CASE("small counts") {
    CHECK(enumerate_all(AbelianGroup::parse("4")).size() == 3);
    CHECK(enumerate_all(AbelianGroup::parse("2x2")).size() == 5);
    CHECK(enumerate_all(AbelianGroup::parse("5")).size() == 3);
    CHECK(enumerate_all(AbelianGroup::parse("7")).size() == 4);
    CHECK(enumerate_all(AbelianGroup::parse("1")).size() == 1);
  }

  TEST_CASE("enumeration matches the partition filter up to order 10") {
    for (int order = 1; order <= 10; ++order) {
      for (const auto& f : oracle::abelian_groups(order)) {
        const AbelianGroup g = AbelianGroup::make(f);
        CAPTURE(g.literal());
        CHECK(test::library_srings(g) == oracle::all_srings(oracle::Group(f)));
      }
    }
  }

  TEST_CASE("catalog order and uniqueness") {
    for (const char* lit : {"2x2x3", "16", "2x8"}) {
      const auto all = enumerate_all(AbelianGroup::parse(lit));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(catalog_less(all[i - 1], all[i]));
    }
  }

  TEST_CASE("rational S-rings") {
    const AbelianGroup c8 = AbelianGroup::parse("8");
    CHECK(rational_classes(c8) == sets(c8, {{"0"}, {"1", "3", "5", "7"}, {"2", "6"}, {"4"}}));
    for (const char* lit : {"8", "2x6", "3x3"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      const auto rc = rational_classes(g);
      std::vector<SRing> expected;
      for (const SRing& a : enumerate_all(g)) {
        bool rational = true;
        for (const auto& r : rc)
          r.for_each([&](Elem x) { rational = rational && a.class_of(x) == a.class_of(r.first()); });
        if (rational) expected.push_back(a);
      }
      const auto got = enumerate_rational(g);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
    }
  }

  TEST_CASE("catalog flags and orbit representatives") {
    const Catalog e4 = enumerate_srings(AbelianGroup::parse("2x2"));
    REQUIRE(e4.entries.size() == 5);
    int reps = 0;
    for (const auto& e : e4.entries) {
      reps += e.orbit_rep;
      CHECK(e.schurian);
      CHECK(e.rank == e.sring.rank());
    }
    CHECK(reps == 3);
    CHECK(e4.entries.front().rank == 2);
    CHECK(e4.entries.front().aut_order == 24);
    CHECK(e4.entries.front().primitive);
    CHECK(e4.entries.back().aut_order == 4);
    CHECK(e4.entries.back().normal);
  }

  TEST_CASE("threads do not change the catalog") {
    const AbelianGroup g = AbelianGroup::parse("2x2x3");
    EnumerateOptions one;
    EnumerateOptions four;
    four.threads = 4;
    std::ostringstream a, b;
    write_catalog(a, enumerate_srings(g, one));
    write_catalog(b, enumerate_srings(g, four));
    CHECK(a.str() == b.str());
  }

  TEST_CASE("make_catalog sorts") {
    const AbelianGroup g = AbelianGroup::parse("6");
    auto all = enumerate_all(g);
    std::reverse(all.begin(), all.end());
    EnumerateOptions o;
    o.flags = false;
    const Catalog c = make_catalog(g, all, o);
    const auto sorted = enumerate_all(g);
    REQUIRE(c.entries.size() == sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(c.entries[i].sring == sorted[i]);
  }

  TEST_CASE("order bound") {
    CHECK(kind_of([] { enumerate_all(AbelianGroup::parse("2x3x11")); }) == ErrorKind::kBoundExceeded);
  }
}
