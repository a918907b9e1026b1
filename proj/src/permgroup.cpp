#include "sring/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "sring/error.hpp"

namespace sring {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int y : images_) {
    if (y < 0 || y >= degree() || hit[y]) {
      fail(ErrorKind::kNonBijective, "permutation images are not a bijection");
    }
    hit[y] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<int> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = other.images_[images_[x]];
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Permutation translation(const AbelianGroup& group, Elem t) {
  std::vector<int> images(group.order());
  for (Elem x = 0; x < group.order(); ++x) images[x] = group.add(x, t);
  return Permutation(std::move(images));
}

std::vector<Permutation> regular_generators(const AbelianGroup& group) {
  std::vector<Permutation> gens;
  for (int i = 0; i < group.num_factors(); ++i) {
    if (group.factors()[i] > 1) gens.push_back(translation(group, group.generator(i)));
  }
  return gens;
}

Permutation as_permutation(const Automorphism& a) { return Permutation(a.table()); }

// ---------------------------------------------------------------------------

void PermGroup::rebuild_level(int i) {
  Level& level = levels_[i];
  level.gens.clear();
  for (const auto& s : strong_) {
    bool fixes = true;
    for (int j = 0; j < i && fixes; ++j) fixes = s[levels_[j].point] == levels_[j].point;
    if (fixes) level.gens.push_back(s);
  }
  level.orbit.assign(1, level.point);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.slot[level.point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int beta = level.orbit[k];
    for (const auto& s : level.gens) {
      const int gamma = s[beta];
      if (level.slot[gamma] >= 0) continue;
      level.slot[gamma] = static_cast<int>(level.transversal.size());
      level.transversal.push_back(level.transversal[level.slot[beta]] * s);
      level.orbit.push_back(gamma);
    }
  }
}

std::pair<Permutation, int> PermGroup::strip(Permutation p, int from) const {
  for (int l = from; l < static_cast<int>(levels_.size()); ++l) {
    const int beta = p[levels_[l].point];
    const int s = levels_[l].slot[beta];
    if (s < 0) return {std::move(p), l};
    p = p * levels_[l].transversal[s].inverse();
  }
  return {std::move(p), static_cast<int>(levels_.size())};
}

PermGroup PermGroup::bsgs(int degree, const std::vector<Permutation>& generators,
                          const std::vector<int>& base_prefix) {
  if (degree > kMaxDegree) {
    fail(ErrorKind::kBoundExceeded, "permutation degree exceeds " + std::to_string(kMaxDegree));
  }
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators) {
    if (s.degree() != degree) fail(ErrorKind::kNonBijective, "generator has wrong degree");
    if (s.is_identity()) continue;
    if (std::find(g.strong_.begin(), g.strong_.end(), s) == g.strong_.end()) {
      g.strong_.push_back(s);
    }
  }
  std::vector<int> base;
  for (int b : base_prefix) {
    if (b >= 0 && b < degree && std::find(base.begin(), base.end(), b) == base.end()) {
      base.push_back(b);
    }
  }
  for (const auto& s : g.strong_) {
    bool fixes_all = true;
    for (int b : base) fixes_all = fixes_all && s[b] == b;
    if (fixes_all) {
      for (int x = 0; x < degree; ++x) {
        if (s[x] != x) {
          base.push_back(x);
          break;
        }
      }
    }
  }
  for (int b : base) g.levels_.push_back(Level{b, {}, {}, {}, {}});
  for (int i = 0; i < static_cast<int>(g.levels_.size()); ++i) g.rebuild_level(i);

  int i = static_cast<int>(g.levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const Level& level = g.levels_[i];
    for (std::size_t k = 0; !restarted && k < level.orbit.size(); ++k) {
      const int beta = level.orbit[k];
      const Permutation& u = level.transversal[level.slot[beta]];
      for (const auto& s : level.gens) {
        const int gamma = s[beta];
        Permutation h = u * s * level.transversal[level.slot[gamma]].inverse();
        if (h.is_identity()) continue;
        auto [r, j] = g.strip(std::move(h), i + 1);
        if (r.is_identity()) continue;
        if (j == static_cast<int>(g.levels_.size())) {
          int moved = 0;
          while (r[moved] == moved) ++moved;
          g.levels_.push_back(Level{moved, {}, {}, {}, {}});
        }
        g.strong_.push_back(std::move(r));
        for (int l = i + 1; l <= j; ++l) g.rebuild_level(l);
        i = j;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return g;
}

PermGroup PermGroup::from_trusted_bsgs(int degree, const std::vector<int>& base,
                                       const std::vector<Permutation>& strong_generators) {
  if (degree > kMaxDegree) {
    fail(ErrorKind::kBoundExceeded, "permutation degree exceeds " + std::to_string(kMaxDegree));
  }
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : strong_generators) {
    if (!s.is_identity()) g.strong_.push_back(s);
  }
  for (int b : base) g.levels_.push_back(Level{b, {}, {}, {}, {}});
  for (int i = 0; i < static_cast<int>(g.levels_.size()); ++i) g.rebuild_level(i);
  return g;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> out;
  for (const auto& l : levels_) out.push_back(l.point);
  return out;
}

BigInt PermGroup::order() const {
  BigInt order = 1;
  for (const auto& l : levels_) order *= static_cast<unsigned>(l.orbit.size());
  return order;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return strip(p, 0).first.is_identity();
}

std::vector<int> PermGroup::orbit_labels() const {
  std::vector<int> label(degree_, -1);
  int next = 0;
  for (int x = 0; x < degree_; ++x) {
    if (label[x] >= 0) continue;
    label[x] = next;
    std::vector<int> queue{x};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const auto& s : strong_) {
        const int y = s[queue[k]];
        if (label[y] < 0) {
          label[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  const auto label = orbit_labels();
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree_; ++x) {
    if (label[x] == static_cast<int>(out.size())) out.emplace_back();
    out[label[x]].push_back(x);
  }
  return out;
}

std::vector<int> PermGroup::orbital_labels() const {
  const int n = degree_;
  std::vector<int> label(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  for (int pair = 0; pair < n * n; ++pair) {
    if (label[pair] >= 0) continue;
    label[pair] = next;
    std::vector<int> queue{pair};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int x = queue[k] / n;
      const int y = queue[k] % n;
      for (const auto& s : strong_) {
        const int q = s[x] * n + s[y];
        if (label[q] < 0) {
          label[q] = next;
          queue.push_back(q);
        }
      }
    }
    ++next;
  }
  return label;
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (levels_.empty() || levels_[0].point != point) {
    return bsgs(degree_, strong_, {point}).point_stabilizer(point);
  }
  std::vector<int> tail;
  for (std::size_t i = 1; i < levels_.size(); ++i) tail.push_back(levels_[i].point);
  if (levels_.size() < 2) return from_trusted_bsgs(degree_, {}, {});
  return from_trusted_bsgs(degree_, tail, levels_[1].gens);
}

bool is_normal(const PermGroup& n, const PermGroup& k) {
  for (const auto& g : n.generators()) {
    if (!k.contains(g)) fail(ErrorKind::kNotSubgroup, "N is not a subgroup of K");
  }
  for (const auto& t : k.generators()) {
    const Permutation ti = t.inverse();
    for (const auto& g : n.generators()) {
      if (!n.contains(ti * g * t)) return false;
    }
  }
  return true;
}

bool two_equivalent(const PermGroup& k1, const PermGroup& k2) {
  return k1.degree() == k2.degree() && k1.orbital_labels() == k2.orbital_labels();
}

SRing transitivity_module(const PermGroup& k, const AbelianGroup& group) {
  if (k.degree() != group.order()) {
    fail(ErrorKind::kDoesNotContainRegular, "degree differs from the group order");
  }
  for (Elem t = 0; t < group.order(); ++t) {
    if (!k.contains(translation(group, t))) {
      fail(ErrorKind::kDoesNotContainRegular, "K does not contain G_r");
    }
  }
  const PermGroup ke = k.point_stabilizer(0);
  try {
    return SRing::from_labels(group, ke.orbit_labels());
  } catch (const Error& e) {
    fail(ErrorKind::kInternal, std::string("V(K,G) failed validation: ") + e.what());
  }
}

std::vector<Automorphism> aut_group_generators(const AbelianGroup& group) {
  const auto& all = aut_group(group);
  std::vector<Automorphism> gens;
  std::vector<Permutation> perms;
  PermGroup current = PermGroup::bsgs(group.order(), {});
  for (const auto& a : all) {
    if (current.order() == static_cast<unsigned>(all.size())) break;
    Permutation p = as_permutation(a);
    if (current.contains(p)) continue;
    gens.push_back(a);
    perms.push_back(std::move(p));
    current = PermGroup::bsgs(group.order(), perms);
  }
  return gens;
}

PermGroup aut_group_as_permgroup(const AbelianGroup& group) {
  std::vector<Permutation> perms;
  for (const auto& a : aut_group_generators(group)) perms.push_back(as_permutation(a));
  return PermGroup::bsgs(group.order(), perms);
}

PermGroup holomorph(const AbelianGroup& group) {
  auto perms = regular_generators(group);
  for (const auto& a : aut_group_generators(group)) perms.push_back(as_permutation(a));
  return PermGroup::bsgs(group.order(), perms);
}

}  // namespace sring
