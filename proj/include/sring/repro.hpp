#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sring/schurity.hpp"
#include "sring/sring.hpp"

namespace sring {

struct ExpectedClass {
  std::string label;
  ElementSet members;
  bool present = false;  // some class of the built S-ring equals `members`
};

struct ReproPart {
  std::string name;
  SRing sring;
  std::vector<ExpectedClass> expected;
  bool matches = false;  // every expected class present and rank agrees
};

struct ReproResult {
  std::string instance;  // "t2" or "t3"
  int p = 0;
  SRing sring;
  std::vector<ReproPart> parts;  // auxiliary S-rings, then the full one
  bool matches = false;          // all parts match
  std::optional<SchurReport> schur;
};

// S-ring over C8 x C2 x Cp (p odd prime, p <= 13) glued from a cyclotomic
// ring over C4 x Cp, T_B (x) T_P, cyc(<-1>, C8) and a six-class ring over
// C4 x C2 by three generalized wreath products. Its 13 classes are checked
// against the closed-form list.
ReproResult reproduce_t2(int p, bool decide_schurity = true);
// S-ring over E16 x Cp (p prime >= 5): cyc(<s0>, E16) glued with a
// fiber-product cyclotomic ring over E8 x Cp along U/P.
ReproResult reproduce_t3(int p, bool decide_schurity = true);

// Throw kPrecondition on bad p and kInternal if the classes differ from
// the closed-form lists.
SRing build_t2_instance(int p);
SRing build_t3_instance(int p);

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct TheoremOptions {
  int threads = 1;
  bool include_c8c2c3 = true;  // enumeration of C8 x C2 x C3 dominates
};

// (i) every S-ring over E4 x C3 and E4 x C5 is schurian;
// (ii) the C8 x C2 x C3 catalog has a nonschurian entry and contains the
//      t2 instance for p = 3;
// (iii) the t3 instance for p = 5 is nonschurian;
// (iv) classify_e4cn tags every nontrivial S-ring over E4 x C9.
std::vector<TheoremCheck> check_theorems(const TheoremOptions& options = {});

}  // namespace sring
