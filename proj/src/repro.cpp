#include "sring/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "sring/constructions.hpp"
#include "sring/enumerate.hpp"
#include "sring/error.hpp"

namespace sring {

namespace {

using Coords = std::vector<int>;
using Predicate = std::function<bool(const Coords&)>;

ElementSet collect(const AbelianGroup& g, const Predicate& pred) {
  ElementSet out = g.empty_set();
  for (Elem x = 0; x < g.order(); ++x) {
    if (pred(g.coords(x))) out.set(x);
  }
  return out;
}

Elem at(const AbelianGroup& g, Coords c) {
  for (int i = 0; i < g.num_factors(); ++i) {
    const int n = g.factors()[i];
    c[i] = ((c[i] % n) + n) % n;
  }
  return g.index(c);
}

Subgroup span_of(const AbelianGroup& g, const std::vector<Coords>& gens) {
  std::vector<Elem> elems;
  for (const auto& c : gens) elems.push_back(at(g, c));
  return generated_subgroup(g, elems);
}

int primitive_root(int p) {
  for (int r = 2; r < p; ++r) {
    long long v = 1;
    int order = 0;
    do {
      v = v * r % p;
      ++order;
    } while (v != 1);
    if (order == p - 1) return r;
  }
  return 1;
}

std::vector<char> quadratic_residues(int p) {
  std::vector<char> square(p, 0);
  for (int m = 1; m < p; ++m) square[static_cast<long long>(m) * m % p] = 1;
  return square;
}

ReproPart make_part(std::string name, const SRing& s, std::vector<ExpectedClass> expected) {
  ReproPart part{std::move(name), s, std::move(expected), false};
  bool all = true;
  for (auto& e : part.expected) {
    e.present = !e.members.empty() && s.basic_set(s.class_of(e.members.first())).members == e.members;
    all = all && e.present;
  }
  part.matches = part.expected.empty() ||
                 (all && static_cast<int>(part.expected.size()) == s.rank());
  return part;
}

// Classes of `a` contained in `u`.
std::vector<ElementSet> classes_inside(const SRing& a, const Subgroup& u) {
  std::vector<ElementSet> out;
  for (const auto& b : a.classes()) {
    if (b.members.is_subset_of(u.members())) out.push_back(b.members);
  }
  return out;
}

// Maps each class of `a` through `embed` into `target`.
std::vector<ElementSet> embed_classes(const SRing& a, const AbelianGroup& target,
                                      const std::function<Elem(const Coords&)>& embed) {
  std::vector<ElementSet> out;
  for (const auto& b : a.classes()) {
    ElementSet s = target.empty_set();
    for (Elem x : b.elements) s.set(embed(a.group().coords(x)));
    out.push_back(std::move(s));
  }
  return out;
}

// Preimages of the classes of `a` under the projection dropping the last
// coordinate of `target`.
std::vector<ElementSet> lift_classes(const SRing& a, const AbelianGroup& target) {
  std::vector<ElementSet> out;
  for (const auto& b : a.classes()) {
    out.push_back(collect(target, [&](const Coords& c) {
      Coords head(c.begin(), c.end() - 1);
      return b.members.test(a.group().index(head));
    }));
  }
  return out;
}

void finish(ReproResult& r, bool decide) {
  r.matches = std::all_of(r.parts.begin(), r.parts.end(),
                          [](const ReproPart& part) { return part.matches; });
  if (decide) r.schur = is_schurian(r.sring);
}

}  // namespace

ReproResult reproduce_t2(int p, bool decide_schurity) {
  if (p < 3 || p > 13 || !is_prime(p)) {
    fail(ErrorKind::kPrecondition, "p must be an odd prime at most 13");
  }
  const int r = primitive_root(p);
  const auto square = quadratic_residues(p);
  auto in_p1 = [&](int k) { return k != 0 && square[k]; };
  auto in_p2 = [&](int k) { return k != 0 && !square[k]; };

  // Operands over U = A1 x B x P, written as C4 x C2 x Cp.
  const AbelianGroup gu = AbelianGroup::make({4, 2, p});
  const Automorphism f(gu, {at(gu, {-1, 0, 0}), at(gu, {0, 1, 0}), at(gu, {0, 0, r})});
  const SRing a1_full = cyclotomic(gu, {f});
  const Subgroup u1 = span_of(gu, {{1, 0, 0}, {0, 0, 1}});
  const Subgroup a1 = span_of(gu, {{1, 0, 0}});
  const std::vector<ElementSet> top12 = {
      collect(gu, [](const Coords& c) { return c[1] == 0 && c[2] == 0; }),
      collect(gu, [](const Coords& c) { return c[1] == 1 && c[2] == 0; }),
      collect(gu, [](const Coords& c) { return c[1] == 0 && c[2] != 0; }),
      collect(gu, [](const Coords& c) { return c[1] == 1 && c[2] != 0; })};
  const SRing a12 =
      generalized_wreath(gu, WreathSpec{u1, a1, classes_inside(a1_full, u1), top12});

  // Operands over A x B = C8 x C2.
  const AbelianGroup gab = AbelianGroup::make({8, 2});
  const Subgroup a_sub = span_of(gab, {{1, 0}});
  const Subgroup a2 = span_of(gab, {{4, 0}});
  auto ab_set = [&](std::vector<Coords> elems) {
    ElementSet s = gab.empty_set();
    for (const auto& c : elems) s.set(at(gab, c));
    return s;
  };
  const std::vector<ElementSet> bottom34 = {ab_set({{0, 0}}), ab_set({{4, 0}}),
                                            ab_set({{1, 0}, {7, 0}}), ab_set({{2, 0}, {6, 0}}),
                                            ab_set({{3, 0}, {5, 0}})};
  const std::vector<ElementSet> top34 = {
      ab_set({{0, 0}, {4, 0}}),
      ab_set({{2, 0}, {6, 0}}),
      ab_set({{1, 1}, {5, 1}}),
      ab_set({{3, 1}, {7, 1}}),
      ab_set({{1, 0}, {5, 0}, {3, 0}, {7, 0}}),
      ab_set({{0, 1}, {4, 1}, {2, 1}, {6, 1}})};
  const SRing a34 = generalized_wreath(gab, WreathSpec{a_sub, a2, bottom34, top34});

  const AbelianGroup g = AbelianGroup::make({8, 2, p});
  const Subgroup u = span_of(g, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Subgroup pp = span_of(g, {{0, 0, 1}});
  const auto bottom = embed_classes(a12, g, [&](const Coords& c) {
    return at(g, {2 * c[0], c[1], c[2]});
  });
  const SRing a = generalized_wreath(g, WreathSpec{u, pp, bottom, lift_classes(a34, g)});

  auto cls = [&](std::string label, Predicate pred) {
    return ExpectedClass{std::move(label), collect(g, pred), false};
  };
  std::vector<ExpectedClass> expected = {
      cls("X0", [](const Coords& c) { return c[0] == 0 && c[1] == 0 && c[2] == 0; }),
      cls("X1", [](const Coords& c) { return c[0] == 4 && c[1] == 0 && c[2] == 0; }),
      cls("X2", [](const Coords& c) { return (c[0] == 2 || c[0] == 6) && c[1] == 0 && c[2] == 0; }),
      cls("X3", [](const Coords& c) { return c[0] == 0 && c[1] == 0 && c[2] != 0; }),
      cls("X4", [](const Coords& c) { return c[0] == 4 && c[1] == 0 && c[2] != 0; }),
      cls("Y1", [&](const Coords& c) {
        return c[1] == 0 && ((c[0] == 2 && in_p1(c[2])) || (c[0] == 6 && in_p2(c[2])));
      }),
      cls("Y2", [&](const Coords& c) {
        return c[1] == 0 && ((c[0] == 2 && in_p2(c[2])) || (c[0] == 6 && in_p1(c[2])));
      }),
      cls("Z1", [](const Coords& c) { return c[0] % 2 == 0 && c[1] == 1 && c[2] == 0; }),
      cls("Z2", [](const Coords& c) { return c[0] % 2 == 0 && c[1] == 1 && c[2] != 0; }),
      cls("T1", [](const Coords& c) { return (c[0] == 1 || c[0] == 7) && c[1] == 0; }),
      cls("T2", [](const Coords& c) { return (c[0] == 3 || c[0] == 5) && c[1] == 0; }),
      cls("T3", [](const Coords& c) { return (c[0] == 1 || c[0] == 5) && c[1] == 1; }),
      cls("T4", [](const Coords& c) { return (c[0] == 3 || c[0] == 7) && c[1] == 1; })};

  ReproResult result;
  result.instance = "t2";
  result.p = p;
  result.sring = a;
  result.parts.push_back(make_part("A12", a12, {}));
  result.parts.push_back(make_part("A34", a34, {}));
  result.parts.push_back(make_part("A", a, std::move(expected)));
  finish(result, decide_schurity);
  return result;
}

ReproResult reproduce_t3(int p, bool decide_schurity) {
  if (p < 5 || !is_prime(p)) fail(ErrorKind::kPrecondition, "p must be a prime at least 5");
  const int r = primitive_root(p);
  const auto square = quadratic_residues(p);
  auto in_p1 = [&](int k) { return k != 0 && square[k]; };
  auto in_p2 = [&](int k) { return k != 0 && !square[k]; };

  // A0 over H = E16 with coordinates (a, b, c, d).
  const AbelianGroup h = AbelianGroup::make({2, 2, 2, 2});
  const Automorphism s0(h, {at(h, {1, 0, 0, 0}), at(h, {1, 1, 0, 0}), at(h, {0, 1, 1, 0}),
                            at(h, {0, 0, 1, 1})});
  const SRing a0 = cyclotomic(h, {s0});
  auto abc_in = [](const Coords& c, std::vector<Coords> list) {
    return std::find(list.begin(), list.end(), Coords{c[0], c[1], c[2]}) != list.end();
  };
  auto hcls = [&](std::string label, Predicate pred) {
    return ExpectedClass{std::move(label), collect(h, pred), false};
  };
  std::vector<ExpectedClass> expected0 = {
      hcls("e", [](const Coords& c) { return c == Coords{0, 0, 0, 0}; }),
      hcls("a", [](const Coords& c) { return c == Coords{1, 0, 0, 0}; }),
      hcls("Ab", [](const Coords& c) { return c[1] == 1 && c[2] == 0 && c[3] == 0; }),
      hcls("ABc", [](const Coords& c) { return c[2] == 1 && c[3] == 0; }),
      hcls("{e,b,c,abc}d", [&](const Coords& c) {
        return c[3] == 1 && abc_in(c, {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
      }),
      hcls("{a,ab,ac,bc}d", [&](const Coords& c) {
        return c[3] == 1 && abc_in(c, {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
      })};

  // A1 over U = V x P with coordinates (a, b, c, k).
  const AbelianGroup gu = AbelianGroup::make({2, 2, 2, p});
  auto v_aut = [&](std::vector<Coords> images, int m) {
    std::vector<Elem> elems;
    for (const auto& c : images) elems.push_back(at(gu, c));
    elems.push_back(at(gu, {0, 0, 0, m}));
    return Automorphism(gu, elems);
  };
  const std::vector<Coords> s1_images = {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}};
  const std::vector<Coords> s2_images = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}};
  const Automorphism s1 = v_aut(s1_images, 1);
  const Automorphism s2 = v_aut(s2_images, 1);
  const Automorphism s1_twisted = v_aut(s1_images, r);
  const Automorphism t_square = v_aut({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                                      static_cast<int>(static_cast<long long>(r) * r % p));
  const SRing a1 = cyclotomic(gu, {s1.then(s1), s2.then(s1), s1_twisted, t_square});
  auto ucls = [&](std::string label, Predicate pred) {
    return ExpectedClass{std::move(label), collect(gu, pred), false};
  };
  std::vector<ExpectedClass> expected1 = {
      ucls("e", [](const Coords& c) { return c == Coords{0, 0, 0, 0}; }),
      ucls("a", [](const Coords& c) { return c == Coords{1, 0, 0, 0}; }),
      ucls("Ab", [](const Coords& c) { return c[1] == 1 && c[2] == 0 && c[3] == 0; }),
      ucls("ABc", [](const Coords& c) { return c[2] == 1 && c[3] == 0; }),
      ucls("P#", [](const Coords& c) { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] != 0; }),
      ucls("aP#", [](const Coords& c) { return c[0] == 1 && c[1] == 0 && c[2] == 0 && c[3] != 0; }),
      ucls("AbP#", [](const Coords& c) { return c[1] == 1 && c[2] == 0 && c[3] != 0; }),
      ucls("AcP1+AbcP2", [&](const Coords& c) {
        return c[2] == 1 && ((c[1] == 0 && in_p1(c[3])) || (c[1] == 1 && in_p2(c[3])));
      }),
      ucls("AcP2+AbcP1", [&](const Coords& c) {
        return c[2] == 1 && ((c[1] == 0 && in_p2(c[3])) || (c[1] == 1 && in_p1(c[3])));
      })};

  const AbelianGroup g = AbelianGroup::make({2, 2, 2, 2, p});
  const Subgroup u = span_of(g, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}});
  const Subgroup pp = span_of(g, {{0, 0, 0, 0, 1}});
  const auto bottom = embed_classes(a1, g, [&](const Coords& c) {
    return at(g, {c[0], c[1], c[2], 0, c[3]});
  });
  const SRing a = generalized_wreath(g, WreathSpec{u, pp, bottom, lift_classes(a0, g)});

  std::vector<ExpectedClass> expected;
  for (const auto& e : expected1) {
    ElementSet s = g.empty_set();
    for (Elem x : e.members.elements()) {
      const Coords c = gu.coords(x);
      s.set(at(g, {c[0], c[1], c[2], 0, c[3]}));
    }
    expected.push_back({e.label, s, false});
  }
  for (std::size_t i = 4; i < expected0.size(); ++i) {
    const ElementSet& cls = expected0[i].members;
    expected.push_back({expected0[i].label + "P", collect(g, [&](const Coords& c) {
                          return cls.test(h.index(Coords(c.begin(), c.end() - 1)));
                        }),
                        false});
  }

  ReproResult result;
  result.instance = "t3";
  result.p = p;
  result.sring = a;
  result.parts.push_back(make_part("A0", a0, std::move(expected0)));
  result.parts.push_back(make_part("A1", a1, std::move(expected1)));
  result.parts.push_back(make_part("A", a, std::move(expected)));
  finish(result, decide_schurity);
  return result;
}

SRing build_t2_instance(int p) {
  ReproResult r = reproduce_t2(p, false);
  if (!r.matches) fail(ErrorKind::kInternal, "t2 classes differ from the closed-form list");
  return r.sring;
}

SRing build_t3_instance(int p) {
  ReproResult r = reproduce_t3(p, false);
  if (!r.matches) fail(ErrorKind::kInternal, "t3 classes differ from the closed-form list");
  return r.sring;
}

std::vector<TheoremCheck> check_theorems(const TheoremOptions& options) {
  using Clock = std::chrono::steady_clock;
  std::vector<TheoremCheck> out;
  EnumerateOptions eo;
  eo.threads = options.threads;
  auto timed = [&](std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = Clock::now();
    const auto [passed, detail] = body();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    out.push_back({std::move(name), passed, detail, secs});
  };

  timed("e4xcp_schurian", [&] {
    std::string detail;
    bool passed = true;
    for (const char* lit : {"2x2x3", "2x2x5"}) {
      const Catalog c = enumerate_srings(AbelianGroup::parse(lit), eo);
      int bad = 0;
      for (const auto& e : c.entries) bad += e.schurian ? 0 : 1;
      passed = passed && bad == 0;
      detail += std::string(lit) + ": " + std::to_string(c.entries.size()) + " S-rings, " +
                std::to_string(bad) + " nonschurian; ";
    }
    return std::make_pair(passed, detail);
  });

  if (options.include_c8c2c3) {
    timed("c8xc2xc3_nonschurian", [&] {
      const Catalog c = enumerate_srings(AbelianGroup::parse("8x2x3"), eo);
      const SRing t2 = build_t2_instance(3);
      int bad = 0;
      bool contains = false;
      for (const auto& e : c.entries) {
        bad += e.schurian ? 0 : 1;
        if (e.sring == t2) contains = !e.schurian;
      }
      return std::make_pair(bad > 0 && contains,
                            std::to_string(c.entries.size()) + " S-rings, " + std::to_string(bad) +
                                " nonschurian, t2(3) " + (contains ? "present" : "missing"));
    });
  }

  timed("t3_nonschurian", [&] {
    const ReproResult r = reproduce_t3(5, true);
    const bool ok = r.matches && r.schur && !r.schur->schurian;
    return std::make_pair(ok, std::string("classes ") + (r.matches ? "match" : "differ") +
                                  ", schurian " + (r.schur->schurian ? "true" : "false"));
  });

  timed("e4xc9_classified", [&] {
    EnumerateOptions quick = eo;
    quick.flags = false;
    const Catalog c = enumerate_srings(AbelianGroup::parse("2x2x9"), quick);
    int untagged = 0;
    int nontrivial = 0;
    for (const auto& e : c.entries) {
      if (e.rank <= 2) continue;
      ++nontrivial;
      if (classify_e4cn(e.sring).empty()) ++untagged;
    }
    return std::make_pair(untagged == 0, std::to_string(nontrivial) + " nontrivial, " +
                                             std::to_string(untagged) + " untagged");
  });
  return out;
}

}  // namespace sring
