#include <doctest.h>

#include "helpers.hpp"
#include "sring/repro.hpp"

using namespace sring;
using test::kind_of;
using test::to_oracle;

TEST_SUITE("repro") {
  TEST_CASE("t2 for p = 3") {
    const ReproResult r = reproduce_t2(3);
    CHECK(r.matches);
    CHECK(r.sring.group().literal() == "8x2x3");
    CHECK(r.sring.rank() == 13);
    REQUIRE(r.schur);
    CHECK_FALSE(r.schur->schurian);
    REQUIRE(r.schur->witness);
    const oracle::Group og(r.sring.group().factors());
    const auto p = to_oracle(r.sring);
    CHECK(oracle::is_sring(og, p));
    CHECK_FALSE(oracle::is_schurian(og, p));
    CHECK(r.schur->aut_order == BigInt(oracle::aut_stabilizer(og, p).stabilizer_order) * 48);
    const ReproPart& full = r.parts.back();
    CHECK(full.expected.size() == 13);
    for (const auto& e : full.expected) CHECK(e.present);
    CHECK(build_t2_instance(3) == r.sring);
  }

  TEST_CASE("t2 for p = 5 and p = 7") {
    const ReproResult r5 = reproduce_t2(5);
    CHECK(r5.matches);
    CHECK(r5.sring.rank() == 13);
    REQUIRE(r5.schur);
    CHECK_FALSE(r5.schur->schurian);
    const ReproResult r7 = reproduce_t2(7, false);
    CHECK(r7.matches);
    CHECK(r7.sring.group().order() == 112);
    CHECK_FALSE(r7.schur);
  }

  TEST_CASE("t2 operands are schurian") {
    const ReproResult r = reproduce_t2(3, false);
    for (std::size_t i = 0; i + 1 < r.parts.size(); ++i) {
      CAPTURE(r.parts[i].name);
      CHECK(r.parts[i].matches);
      CHECK(is_schurian(r.parts[i].sring).schurian);
    }
  }

  TEST_CASE("t3 classes for p = 5") {
    const ReproResult r = reproduce_t3(5, false);
    CHECK(r.matches);
    CHECK(r.sring.group().order() == 80);
    REQUIRE(r.parts.size() == 3);
    CHECK(r.parts[0].sring.rank() == 6);
    CHECK(r.parts[1].sring.rank() == 9);
    for (const auto& part : r.parts) {
      CAPTURE(part.name);
      CHECK(part.matches);
      for (const auto& e : part.expected) CHECK(e.present);
    }
    CHECK(build_t3_instance(5) == r.sring);
    CHECK(reproduce_t3(7, false).matches);
  }

  TEST_CASE("t3 automorphism orders by backtracking") {
    const ReproResult r = reproduce_t3(5, false);
    const SRing& a0 = r.parts[0].sring;
    const oracle::Group og(a0.group().factors());
    const auto st = oracle::aut_stabilizer(og, to_oracle(a0));
    CHECK(aut_search(a0).group.order() == BigInt(st.stabilizer_order) * 16);
  }

  TEST_CASE("preconditions") {
    CHECK(kind_of([] { build_t2_instance(2); }) == ErrorKind::kPrecondition);
    CHECK(kind_of([] { build_t2_instance(9); }) == ErrorKind::kPrecondition);
    CHECK(kind_of([] { build_t2_instance(17); }) == ErrorKind::kPrecondition);
    CHECK(kind_of([] { build_t3_instance(3); }) == ErrorKind::kPrecondition);
    CHECK(kind_of([] { build_t3_instance(8); }) == ErrorKind::kPrecondition);
  }
}
