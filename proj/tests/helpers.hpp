#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sring/enumerate.hpp"
#include "sring/error.hpp"
#include "sring/group.hpp"
#include "sring/sring.hpp"

namespace test {

// Kind of the sring::Error thrown by f, or nullopt.
inline std::optional<sring::ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const sring::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline oracle::Partition to_oracle(const sring::SRing& a) {
  oracle::Partition p;
  for (const auto& c : a.classes()) p.push_back(c.elements);
  return oracle::normalize(p);
}

inline oracle::Group oracle_group(const sring::AbelianGroup& g) { return oracle::Group(g.factors()); }

inline std::vector<sring::ElementSet> to_sets(const sring::AbelianGroup& g,
                                              const oracle::Partition& p) {
  std::vector<sring::ElementSet> out;
  for (const auto& c : p) out.emplace_back(g.order(), c);
  return out;
}

inline sring::SRing from_oracle(const sring::AbelianGroup& g, const oracle::Partition& p) {
  return sring::SRing::validate(g, to_sets(g, p));
}

// Partition from residue literals, e.g. {{"0"}, {"1", "3"}, {"2"}}.
inline std::vector<sring::ElementSet> sets(const sring::AbelianGroup& g,
                                           const std::vector<std::vector<std::string>>& classes) {
  std::vector<sring::ElementSet> out;
  for (const auto& c : classes) {
    sring::ElementSet s = g.empty_set();
    for (const auto& e : c) s.set(g.parse_element(e));
    out.push_back(s);
  }
  return out;
}

inline std::set<oracle::Partition> library_srings(const sring::AbelianGroup& g) {
  std::set<oracle::Partition> out;
  for (const auto& a : sring::enumerate_all(g)) out.insert(to_oracle(a));
  return out;
}

}  // namespace test
