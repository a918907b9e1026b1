#pragma once

#include <vector>

#include "sring/permgroup.hpp"
#include "sring/sring.hpp"

namespace sring {

// Complete edge coloring of G x G with color(g, h) = class of h - g.
class ColorConfig {
 public:
  explicit ColorConfig(const SRing& a);

  int degree() const { return n_; }
  int num_colors() const { return colors_; }
  int color(int g, int h) const { return table_[g * n_ + h]; }

 private:
  int n_;
  int colors_;
  std::vector<int> table_;
};

// Stable vertex coloring refining `vertex_colors`. Result labels are cell
// ordinals; cells are ordered by the initial colors and then by the
// signatures that split them.
std::vector<int> refine(const ColorConfig& config, const std::vector<int>& vertex_colors);

struct AutResult {
  PermGroup group;       // Aut(A)
  PermGroup stabilizer;  // Aut(A)_e
  std::vector<Permutation> stabilizer_generators;
  long long search_nodes = 0;
};

// Aut(A) by individualization-refinement seeded with G_r. Throws
// kBoundExceeded above degree 256.
AutResult aut_search(const SRing& a);
PermGroup aut_sring(const SRing& a);

// True iff p preserves every relation r(X).
bool preserves_classes(const SRing& a, const Permutation& p);

}  // namespace sring
