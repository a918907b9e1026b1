#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sring/error.hpp"
#include "sring/group.hpp"

using namespace sring;
using test::kind_of;

namespace {

// Subgroups generated by all triples of elements.
std::size_t oracle_subgroup_count(const oracle::Group& g) {
  std::set<std::vector<int>> subs;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a; b < g.n; ++b) {
      for (int c = b; c < g.n; ++c) {
        std::vector<char> in(g.n, 0);
        std::vector<int> members{0};
        in[0] = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (int gen : {a, b, c}) {
            const int y = g.add(members[i], gen);
            if (!in[y]) in[y] = 1, members.push_back(y);
          }
        }
        std::sort(members.begin(), members.end());
        subs.insert(members);
      }
    }
  }
  return subs.size();
}

// Homomorphisms fixed by generator images with n_i * image = 0, kept when
// bijective.
std::size_t oracle_aut_count(const oracle::Group& g) {
  const int k = static_cast<int>(g.factors.size());
  std::vector<int> gens(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> c(k, 0);
    c[i] = 1;
    gens[i] = g.index(c);
  }
  std::size_t count = 0;
  std::vector<int> img(k, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      std::vector<char> hit(g.n, 0);
      for (int x = 0; x < g.n; ++x) {
        const auto c = g.coords(x);
        int y = 0;
        for (int j = 0; j < k; ++j)
          for (int t = 0; t < c[j]; ++t) y = g.add(y, img[j]);
        if (hit[y]) return;
        hit[y] = 1;
      }
      ++count;
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      int y = 0;
      for (int t = 0; t < g.factors[i]; ++t) y = g.add(y, v);
      if (y != 0) continue;
      img[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("parse and format") {
    const AbelianGroup g = AbelianGroup::parse("8x2x3");
    CHECK(g.order() == 48);
    CHECK(g.factors() == std::vector<int>{8, 2, 3});
    CHECK(g.literal() == "8x2x3");
    CHECK(g.exponent() == 24);
    CHECK(g.coords(1) == std::vector<int>{0, 0, 1});
    CHECK(g.coords(3) == std::vector<int>{0, 1, 0});
    for (Elem x = 0; x < g.order(); ++x) CHECK(g.parse_element(g.format(x)) == x);
    CHECK(g.format(g.parse_element("7,1,2")) == "7,1,2");
    CHECK(AbelianGroup::parse("1").order() == 1);
  }

  TEST_CASE("malformed literals") {
    CHECK(kind_of([] { AbelianGroup::parse(""); }) == ErrorKind::kParseError);
    CHECK(kind_of([] { AbelianGroup::parse("8x"); }) == ErrorKind::kParseError);
    CHECK(kind_of([] { AbelianGroup::parse("ax2"); }) == ErrorKind::kParseError);
    CHECK_THROWS_AS(AbelianGroup::parse("0x2"), Error);
    CHECK(kind_of([] { AbelianGroup::make({100, 100, 100}); }) == ErrorKind::kBoundExceeded);
    const AbelianGroup g = AbelianGroup::parse("4x2");
    CHECK(kind_of([&] { g.parse_element("1"); }) == ErrorKind::kParseError);
    CHECK(kind_of([&] { g.parse_element("1,x"); }) == ErrorKind::kParseError);
  }

  TEST_CASE("arithmetic agrees with the oracle") {
    for (const char* lit : {"4x2x3", "3x3", "2x2x2", "9"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      const oracle::Group o(g.factors());
      for (Elem x = 0; x < g.order(); ++x) {
        CHECK(g.neg(x) == o.neg(x));
        for (Elem y = 0; y < g.order(); ++y) CHECK(g.add(x, y) == o.add(x, y));
      }
    }
  }

  TEST_CASE("scale and element order") {
    const AbelianGroup g = AbelianGroup::parse("8x2x3");
    const Elem x = g.parse_element("1,1,1");
    CHECK(g.element_order(x) == 24);
    CHECK(g.scale(x, 24) == 0);
    CHECK(g.scale(x, -1) == g.neg(x));
    CHECK(g.element_order(g.parse_element("4,0,0")) == 2);
    const GroupElement e = GroupElement::parse(g, "3,1,2");
    CHECK((e + e.inverse()).index() == 0);
    CHECK(e.pow(3).to_string() == "1,1,0");
    const AbelianGroup h = AbelianGroup::parse("8x2x3");
    CHECK((e + GroupElement(h, 1)).to_string() == "3,1,0");
    const GroupElement other(AbelianGroup::parse("4"), 1);
    CHECK(kind_of([&] { (void)(e + other); }) == ErrorKind::kMismatchedGroups);
  }

  TEST_CASE("subgroup lattice sizes") {
    for (const char* lit : {"4", "2x2", "2x4", "2x2x2", "4x4", "12", "2x6", "3x3"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      INFO(lit);
      CHECK(g.subgroups().size() == oracle_subgroup_count(oracle::Group(g.factors())));
      for (const auto& h : g.subgroups()) CHECK(is_subgroup(g, h.members()));
    }
  }

  TEST_CASE("automorphism group sizes") {
    for (const char* lit : {"8", "2x2", "2x2x2", "2x4", "4x4", "2x2x3", "3x9"}) {
      const AbelianGroup g = AbelianGroup::parse(lit);
      INFO(lit);
      CHECK(aut_group(g).size() == oracle_aut_count(oracle::Group(g.factors())));
      CHECK(aut_group(g).front().is_identity());
    }
  }

  TEST_CASE("automorphisms") {
    const AbelianGroup g = AbelianGroup::parse("8x3");
    const Automorphism m = Automorphism::power_map(g, 5);
    for (Elem x = 0; x < g.order(); ++x) CHECK(m.apply(x) == g.scale(x, 5));
    CHECK(m.then(m.inverse()).is_identity());
    CHECK(kind_of([&] { Automorphism::power_map(g, 2); }) == ErrorKind::kNotCoprime);
    CHECK(kind_of([&] { Automorphism(g, {g.parse_element("2,0"), 1}); }) ==
          ErrorKind::kInvalidArgument);
    CHECK(kind_of([&] { Automorphism(g, {1}); }) == ErrorKind::kInvalidArgument);
  }

  TEST_CASE("subgroup operations") {
    const AbelianGroup g = AbelianGroup::parse("8x2");
    const Subgroup a = generated_subgroup(g, std::vector<Elem>{g.parse_element("2,0")});
    const Subgroup b = generated_subgroup(g, std::vector<Elem>{g.parse_element("4,1")});
    CHECK(a.order() == 4);
    CHECK(b.order() == 2);
    CHECK(intersection(g, a, b).order() == 1);
    CHECK(join(g, a, b).order() == 8);
    CHECK(omega(g, 2).order() == 4);
    CHECK(trivial_subgroup(g).order() == 1);
    CHECK(whole_group(g).order() == 16);
    CHECK(whole_group(g).contains(a));
    CHECK_FALSE(is_subgroup(g, ElementSet(16, std::vector<Elem>{0, 2})));
  }

  TEST_CASE("sections") {
    const AbelianGroup g = AbelianGroup::parse("8x2x3");
    const Subgroup u = generated_subgroup(
        g, std::vector<Elem>{g.parse_element("2,0,0"), g.parse_element("0,1,0"), g.parse_element("0,0,1")});
    const Subgroup l = generated_subgroup(g, std::vector<Elem>{g.parse_element("4,1,0")});
    const Section s(g, u, l);
    CHECK(s.quotient().order() == u.order() / l.order());
    u.members().for_each([&](Elem x) {
      u.members().for_each([&](Elem y) {
        CHECK(s.project(g.add(x, y)) == s.quotient().add(s.project(x), s.project(y)));
      });
      ElementSet one = s.quotient().empty_set();
      one.set(s.project(x));
      ElementSet coset = g.empty_set();
      l.members().for_each([&](Elem h) { coset.set(g.add(x, h)); });
      CHECK(s.preimage(one) == coset);
    });
    for (Elem q = 0; q < s.quotient().order(); ++q) CHECK(s.project(s.lift(q)) == q);
    CHECK_THROWS_AS(s.project(g.parse_element("1,0,0")), Error);
    CHECK_THROWS_AS(Section(g, l, u), Error);
  }

  TEST_CASE("number theory helpers") {
    CHECK(gcd_ll(12, 18) == 6);
    CHECK(lcm_ll(4, 6) == 12);
    CHECK(prime_divisors(360) == std::vector<int>{2, 3, 5});
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
  }
}
