// Acceptance run: one PASS/FAIL line per criterion. Exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "oracle.hpp"
#include "sring/autsearch.hpp"
#include "sring/enumerate.hpp"
#include "sring/property_suite.hpp"
#include "sring/repro.hpp"
#include "sring/schurity.hpp"

using namespace sring;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int threads() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

oracle::Partition to_oracle(const SRing& a) {
  oracle::Partition p;
  for (const auto& c : a.classes()) p.push_back(c.elements);
  return oracle::normalize(p);
}

std::map<std::string, Catalog> g_catalogs;

const Catalog& catalog(const AbelianGroup& g) {
  auto it = g_catalogs.find(g.literal());
  if (it != g_catalogs.end()) return it->second;
  EnumerateOptions o;
  o.threads = threads();
  return g_catalogs.emplace(g.literal(), enumerate_srings(g, o)).first->second;
}

std::vector<AbelianGroup> groups_up_to(int max_order, int min_order = 1) {
  std::vector<AbelianGroup> out;
  for (int n = min_order; n <= max_order; ++n)
    for (const auto& f : oracle::abelian_groups(n)) out.push_back(AbelianGroup::make(f));
  return out;
}

std::string summarize(const PropertyReport& r) {
  std::ostringstream out;
  long long total = 0;
  for (const auto& [k, v] : r.checks) total += v;
  out << total << " checks, " << r.failures.size() << " failures";
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    out << " (first: " << f.property << " #" << f.entry << " " << f.detail << ")";
  }
  return out.str();
}

Outcome t2_reproduction() {
  Outcome o;
  std::ostringstream d;
  for (int p : {3, 5}) {
    const auto start = std::chrono::steady_clock::now();
    const ReproResult r = reproduce_t2(p);
    const oracle::Group og(r.sring.group().factors());
    const bool oracle_nonschurian = !oracle::is_schurian(og, to_oracle(r.sring));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = r.matches && r.sring.rank() == 13 && r.schur && !r.schur->schurian &&
                    oracle_nonschurian && secs <= 300;
    o.pass = o.pass && ok;
    d << "p=" << p << ": rank " << r.sring.rank() << ", classes " << (r.matches ? "match" : "differ")
      << ", schurian=" << (r.schur && r.schur->schurian ? "true" : "false")
      << ", oracle nonschurian=" << (oracle_nonschurian ? "true" : "false") << "; ";
  }
  o.detail = d.str();
  return o;
}

Outcome t3_reproduction() {
  Outcome o;
  const ReproResult r = reproduce_t3(5);
  const SRing& a0 = r.parts[0].sring;
  const SRing& a1 = r.parts[1].sring;
  const BigInt aut0 = aut_search(a0).group.order();
  const oracle::Group og0(a0.group().factors());
  const std::uint64_t oracle_aut0 = oracle::aut_stabilizer(og0, to_oracle(a0)).stabilizer_order * 16;
  const bool schurian = r.schur && r.schur->schurian;
  std::ostringstream d;
  d << "A0 rank " << a0.rank() << (r.parts[0].matches ? " (match)" : " (differ)") << ", A1 rank "
    << a1.rank() << (r.parts[1].matches ? " (match)" : " (differ)") << ", |Aut(A0)| = " << aut0
    << " (oracle " << oracle_aut0 << ", expected 64), full ring rank " << r.sring.rank()
    << ", |Aut| = " << (r.schur ? r.schur->aut_order : BigInt(0))
    << ", schurian=" << (schurian ? "true" : "false") << " (expected false)";
  o.detail = d.str();
  o.pass = r.matches && a0.rank() == 6 && a1.rank() == 9 && aut0 == 64 && oracle_aut0 == 64 &&
           r.schur && !schurian;
  return o;
}

Outcome e4_schur() {
  Outcome o;
  std::ostringstream d;
  for (const char* lit : {"2x2x3", "2x2x5"}) {
    const Catalog& c = catalog(AbelianGroup::parse(lit));
    int bad = 0;
    for (const auto& e : c.entries) bad += !e.schurian;
    o.pass = o.pass && bad == 0;
    d << lit << ": " << c.entries.size() << " S-rings, " << bad << " nonschurian; ";
  }
  o.detail = d.str();
  return o;
}

Outcome c8c2c3() {
  Outcome o;
  const Catalog& c = catalog(AbelianGroup::parse("8x2x3"));
  const SRing t2 = build_t2_instance(3);
  int bad = 0;
  bool found = false;
  bool found_nonschurian = false;
  for (const auto& e : c.entries) {
    bad += !e.schurian;
    if (e.sring == t2) {
      found = true;
      found_nonschurian = !e.schurian;
    }
  }
  std::ostringstream d;
  d << c.entries.size() << " S-rings, " << bad << " nonschurian, t2(3) "
    << (found ? "present" : "absent") << (found_nonschurian ? " and flagged nonschurian" : "");
  o.detail = d.str();
  o.pass = bad >= 1 && found && found_nonschurian;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int groups = 0;
  long long total = 0;
  std::ostringstream d;
  for (const AbelianGroup& g : groups_up_to(12)) {
    const auto expected = oracle::all_srings(oracle::Group(g.factors()));
    std::set<oracle::Partition> got;
    const auto all = enumerate_all(g);
    for (const auto& a : all) got.insert(to_oracle(a));
    const bool ok = got == expected && all.size() == expected.size();
    if (!ok) d << g.literal() << " differs (" << all.size() << " vs " << expected.size() << "); ";
    o.pass = o.pass && ok;
    ++groups;
    total += static_cast<long long>(expected.size());
  }
  d << groups << " groups, " << total << " S-rings";
  o.detail = d.str();
  return o;
}

Outcome trivial_aut() {
  Outcome o;
  std::ostringstream d;
  for (const AbelianGroup& g : groups_up_to(7, 2)) {
    const BigInt order = aut_search(trivial_sring(g)).group.order();
    const bool ok = order == BigInt(oracle::factorial(g.order()));
    o.pass = o.pass && ok;
    d << g.literal() << ":" << order << " ";
  }
  o.pass = o.pass && aut_search(trivial_sring(AbelianGroup::parse("4"))).group.order() == 24 &&
           aut_search(trivial_sring(AbelianGroup::parse("2x2"))).group.order() == 24;
  o.detail = d.str();
  return o;
}

Outcome duality() {
  PropertyReport r;
  for (const AbelianGroup& g : groups_up_to(16)) r.merge(duality_suite(catalog(g)));
  return {r.ok() && r.checks.count("dual_involution") && r.checks.count("dual_rank"), summarize(r)};
}

Outcome tensor_law() {
  PropertyReport r;
  const auto gs = groups_up_to(8, 2);
  for (const auto& g1 : gs)
    for (const auto& g2 : gs) r.merge(tensor_suite(catalog(g1), catalog(g2)));
  return {r.ok() && r.checks.count("tensor_aut_order"), summarize(r)};
}

Outcome galois() {
  PropertyReport r;
  for (const AbelianGroup& g : groups_up_to(24)) r.merge(galois_suite(catalog(g)));
  for (const char* lit : {"8x2x3", "2x2x9"}) r.merge(galois_suite(catalog(AbelianGroup::parse(lit))));
  return {r.ok() && r.checks.count("schurian_idempotent"), summarize(r) + " over all catalogs built"};
}

Outcome e4c9() {
  Outcome o;
  const Catalog& c = catalog(AbelianGroup::parse("2x2x9"));
  int tagged = 0;
  int untagged = 0;
  for (const auto& e : c.entries) {
    if (e.rank <= 2) continue;
    if (classify_e4cn(e.sring).empty()) {
      ++untagged;
    } else {
      ++tagged;
    }
  }
  o.pass = untagged == 0;
  o.detail = std::to_string(tagged) + " nontrivial S-rings tagged, " + std::to_string(untagged) +
             " untagged";
  return o;
}

Outcome multipliers() {
  PropertyReport r;
  for (const AbelianGroup& g : groups_up_to(24)) r.merge(multiplier_suite(catalog(g)));
  return {r.ok() && r.checks.count("first_multiplier"), summarize(r)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"t2 reproduction for p = 3, 5", t2_reproduction},
      {"t3 reproduction for p = 5", t3_reproduction},
      {"E4 x C3 and E4 x C5 are Schur", e4_schur},
      {"C8 x C2 x C3 catalog", c8c2c3},
      {"enumeration equals partition filter, order <= 12", oracle_equivalence},
      {"Aut(T_G) = Sym(G), |G| <= 7", trivial_aut},
      {"duality suite, order <= 16", duality},
      {"tensor automorphism law, order <= 8", tensor_law},
      {"Galois implications", galois},
      {"E4 x C9 classifier", e4c9},
      {"multiplier suite, order <= 24", multipliers},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s [%zu] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
