#include "sring/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <thread>

#include "sring/autsearch.hpp"
#include "sring/error.hpp"
#include "sring/schurity.hpp"

namespace sring {

namespace {

// Relabels by first occurrence; returns the number of labels.
int canonicalize(std::vector<int>& labels) {
  std::map<int, int> remap;
  for (int& l : labels) {
    auto it = remap.try_emplace(l, static_cast<int>(remap.size())).first;
    l = it->second;
  }
  return static_cast<int>(remap.size());
}

class Closure {
 public:
  explicit Closure(const AbelianGroup& group)
      : group_(group), n_(group.order()), slot_(n_ + 1, -1), f_(n_, 0) {}

  // `labels` must be canonical (first-occurrence ordinals).
  void run(std::vector<int>& labels) {
    count_ = 0;
    for (int l : labels) count_ = std::max(count_, l + 1);
    for (Elem x = 1; x < n_; ++x) {
      if (labels[x] == labels[0]) {
        labels[0] = count_++;
        break;
      }
    }
    rebuild(labels);
    while (true) {
      bool changed = false;
      for (Elem x = 0; x < n_; ++x) f_[x] = labels[group_.neg(x)];
      if (split(labels)) changed = true;
      const auto snapshot = members_;
      const int r = static_cast<int>(snapshot.size());
      for (int xi = 0; xi < r; ++xi) {
        for (int yi = xi; yi < r; ++yi) {
          std::fill(f_.begin(), f_.end(), 0);
          for (Elem x : snapshot[xi]) {
            for (Elem y : snapshot[yi]) ++f_[group_.add(x, y)];
          }
          if (split(labels)) changed = true;
        }
      }
      if (!changed) break;
    }
    canonicalize(labels);
  }

 private:
  void rebuild(const std::vector<int>& labels) {
    members_.assign(count_, {});
    for (Elem x = 0; x < n_; ++x) members_[labels[x]].push_back(x);
  }

  // Splits every class on which f_ is not constant.
  bool split(std::vector<int>& labels) {
    bool changed = false;
    for (int c = 0; c < static_cast<int>(members_.size()); ++c) {
      const auto& m = members_[c];
      const int v0 = f_[m.front()];
      bool uniform = true;
      for (Elem x : m) {
        if (f_[x] != v0) {
          uniform = false;
          break;
        }
      }
      if (uniform) continue;
      changed = true;
      slot_[v0] = c;
      for (Elem x : m) {
        const int k = f_[x];
        if (slot_[k] < 0) slot_[k] = count_++;
        labels[x] = slot_[k];
      }
      for (Elem x : m) slot_[f_[x]] = -1;
    }
    if (changed) rebuild(labels);
    return changed;
  }

  const AbelianGroup& group_;
  int n_;
  int count_ = 0;
  std::vector<int> slot_;
  std::vector<int> f_;
  std::vector<std::vector<Elem>> members_;
};

bool uniform_on(const std::vector<int>& labels, const std::vector<Elem>& set) {
  for (Elem x : set) {
    if (labels[x] != labels[set.front()]) return false;
  }
  return true;
}

// Search over S-rings whose classes are unions of rational classes.
class RationalSearch {
 public:
  explicit RationalSearch(const AbelianGroup& group)
      : group_(group), closure_(group) {
    for (const auto& c : rational_classes(group)) rcs_.push_back(c.elements());
  }

  std::vector<std::vector<int>> run() {
    std::vector<int> labels(group_.order(), 0);
    closure_.run(labels);
    completed_.assign(rcs_.size(), 0);
    dfs(labels);
    return std::move(found_);
  }

 private:
  void dfs(const std::vector<int>& labels) {
    int c = -1;
    for (std::size_t i = 0; i < rcs_.size(); ++i) {
      if (!completed_[i]) {
        c = static_cast<int>(i);
        break;
      }
    }
    if (c < 0) {
      found_.push_back(labels);
      return;
    }
    const int y = labels[rcs_[c].front()];
    std::vector<int> others;
    for (std::size_t i = 0; i < rcs_.size(); ++i) {
      if (static_cast<int>(i) != c && labels[rcs_[i].front()] == y) {
        others.push_back(static_cast<int>(i));
      }
    }
    const int k = static_cast<int>(others.size());
    const std::uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
    if (k > 30) fail(ErrorKind::kBoundExceeded, "too many rational classes");
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      std::vector<int> chosen{c};
      for (int j = 0; j < k; ++j) {
        if (mask >> j & 1) chosen.push_back(others[j]);
      }
      std::vector<Elem> x_elems;
      for (int i : chosen) x_elems.insert(x_elems.end(), rcs_[i].begin(), rcs_[i].end());
      std::vector<int> next = labels;
      if (mask != full) {
        const int fresh = *std::max_element(labels.begin(), labels.end()) + 1;
        for (int j = 0; j < k; ++j) {
          if (!(mask >> j & 1)) {
            for (Elem x : rcs_[others[j]]) next[x] = fresh;
          }
        }
        canonicalize(next);
        closure_.run(next);
        if (!uniform_on(next, x_elems)) continue;
        bool ok = true;
        for (const auto& done : done_classes_) {
          if (!uniform_on(next, done)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
      }
      for (int i : chosen) completed_[i] = 1;
      done_classes_.push_back(x_elems);
      dfs(next);
      done_classes_.pop_back();
      for (int i : chosen) completed_[i] = 0;
    }
  }

  const AbelianGroup& group_;
  Closure closure_;
  std::vector<std::vector<Elem>> rcs_;
  std::vector<char> completed_;
  std::vector<std::vector<Elem>> done_classes_;
  std::vector<std::vector<int>> found_;
};

using Mask = std::uint64_t;

// S-rings with a prescribed rational closure.
class GaloisSearch {
 public:
  explicit GaloisSearch(const AbelianGroup& group) : group_(group), closure_(group) {
    const int e = group.exponent();
    for (int m = 1; m <= std::max(e, 1); ++m) {
      if (gcd_ll(m, e) == 1) units_.push_back(m % std::max(e, 1));
    }
    if (units_.size() > 64) fail(ErrorKind::kBoundExceeded, "unit group too large");
    const int nu = static_cast<int>(units_.size());
    std::map<int, int> index;
    for (int i = 0; i < nu; ++i) index[units_[i]] = i;
    mul_.assign(nu * nu, 0);
    for (int i = 0; i < nu; ++i) {
      for (int j = 0; j < nu; ++j) {
        mul_[i * nu + j] = index.at(static_cast<int>(
            static_cast<long long>(units_[i]) * units_[j] % std::max(e, 1)));
      }
    }
    unit_subgroups();
    stab_.assign(group.order(), 0);
    for (Elem x = 0; x < group.order(); ++x) {
      for (int i = 0; i < nu; ++i) {
        if (group.scale(x, units_[i]) == x) stab_[x] |= Mask{1} << i;
      }
    }
    const auto rcs = rational_classes(group);
    rc_of_.assign(group.order(), 0);
    for (std::size_t i = 0; i < rcs.size(); ++i) {
      rcs_.push_back(rcs[i].elements());
      for (Elem x : rcs_.back()) rc_of_[x] = static_cast<int>(i);
    }
  }

  void run(const std::vector<int>& rational, std::vector<std::vector<int>>& out) {
    const int r = *std::max_element(rational.begin(), rational.end()) + 1;
    std::vector<std::vector<Elem>> classes(r);
    for (Elem x = 0; x < group_.order(); ++x) classes[rational[x]].push_back(x);
    options_.clear();
    for (const auto& w : classes) {
      if (w.front() == 0) continue;
      options_.push_back(options_for(w));
    }
    decided_.clear();
    dfs(0, rational, out);
  }

 private:
  void unit_subgroups() {
    const int nu = static_cast<int>(units_.size());
    auto close = [&](Mask m) {
      while (true) {
        Mask next = m;
        for (int i = 0; i < nu; ++i) {
          if (!(m >> i & 1)) continue;
          for (int j = 0; j < nu; ++j) {
            if (m >> j & 1) next |= Mask{1} << mul_[i * nu + j];
          }
        }
        if (next == m) return m;
        m = next;
      }
    };
    std::set<Mask> seen{1};
    std::vector<Mask> queue{1};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int i = 0; i < nu; ++i) {
        const Mask h = close(queue[k] | (Mask{1} << i));
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
    subgroups_.assign(seen.begin(), seen.end());
  }

  ElementSet translate(const std::vector<Elem>& set, int unit) const {
    ElementSet out = group_.empty_set();
    for (Elem x : set) out.set(group_.scale(x, units_[unit]));
    return out;
  }

  // Candidate block systems of the rational class `w`.
  std::vector<std::vector<std::vector<Elem>>> options_for(const std::vector<Elem>& w) {
    const int nu = static_cast<int>(units_.size());
    Mask stab_all = 0;
    for (Elem x : w) stab_all |= stab_[x];
    std::vector<int> rcs_in;
    for (Elem x : w) {
      if (rcs_in.empty() || std::find(rcs_in.begin(), rcs_in.end(), rc_of_[x]) == rcs_in.end()) {
        rcs_in.push_back(rc_of_[x]);
      }
    }
    std::sort(rcs_in.begin(), rcs_in.end());
    std::vector<std::vector<std::vector<Elem>>> result;
    for (Mask v : subgroups_) {
      if ((v & stab_all) != stab_all) continue;
      // V-orbits of each rational class; the first one is fixed to the
      // orbit of min(W).
      std::vector<std::vector<std::vector<Elem>>> orbit_choices;
      for (int rc : rcs_in) {
        std::vector<std::vector<Elem>> orbits;
        std::vector<char> seen(group_.order(), 0);
        for (Elem x : rcs_[rc]) {
          if (seen[x]) continue;
          std::vector<Elem> orbit;
          for (int i = 0; i < nu; ++i) {
            if (!(v >> i & 1)) continue;
            const Elem y = group_.scale(x, units_[i]);
            if (!seen[y]) {
              seen[y] = 1;
              orbit.push_back(y);
            }
          }
          std::sort(orbit.begin(), orbit.end());
          orbits.push_back(std::move(orbit));
          if (rc == rcs_in.front()) break;  // orbit of the least element only
        }
        orbit_choices.push_back(std::move(orbits));
      }
      std::vector<std::size_t> pick(orbit_choices.size(), 0);
      while (true) {
        std::vector<Elem> x;
        for (std::size_t j = 0; j < pick.size(); ++j) {
          const auto& o = orbit_choices[j][pick[j]];
          x.insert(x.end(), o.begin(), o.end());
        }
        std::sort(x.begin(), x.end());
        ElementSet xs = group_.empty_set();
        for (Elem e : x) xs.set(e);
        Mask stab = 0;
        std::set<ElementSet> translates;
        for (int i = 0; i < nu; ++i) {
          ElementSet t = translate(x, i);
          if (t == xs) stab |= Mask{1} << i;
          translates.insert(std::move(t));
        }
        if (stab == v) {
          std::vector<std::vector<Elem>> blocks;
          for (const auto& t : translates) blocks.push_back(t.elements());
          std::sort(blocks.begin(), blocks.end());
          result.push_back(std::move(blocks));
        }
        std::size_t j = pick.size();
        while (j > 0) {
          --j;
          if (++pick[j] < orbit_choices[j].size()) break;
          pick[j] = 0;
          if (j == 0) {
            j = pick.size() + 1;
            break;
          }
        }
        if (j == pick.size() + 1 || pick.empty()) break;
      }
    }
    return result;
  }

  void dfs(std::size_t i, const std::vector<int>& labels,
           std::vector<std::vector<int>>& out) {
    if (i == options_.size()) {
      out.push_back(labels);
      return;
    }
    for (const auto& blocks : options_[i]) {
      bool fits = true;
      for (const auto& b : blocks) fits = fits && uniform_on(labels, b);
      if (!fits) continue;
      std::vector<int> next = labels;
      if (blocks.size() > 1) {
        int fresh = *std::max_element(labels.begin(), labels.end()) + 1;
        for (std::size_t k = 1; k < blocks.size(); ++k, ++fresh) {
          for (Elem x : blocks[k]) next[x] = fresh;
        }
        canonicalize(next);
        closure_.run(next);
        bool ok = true;
        for (const auto& b : blocks) ok = ok && uniform_on(next, b);
        for (const auto* d : decided_) {
          for (const auto& b : *d) ok = ok && uniform_on(next, b);
        }
        if (!ok) continue;
      }
      decided_.push_back(&blocks);
      dfs(i + 1, next, out);
      decided_.pop_back();
    }
  }

  const AbelianGroup& group_;
  Closure closure_;
  std::vector<int> units_;
  std::vector<int> mul_;
  std::vector<Mask> subgroups_;
  std::vector<Mask> stab_;
  std::vector<std::vector<Elem>> rcs_;
  std::vector<int> rc_of_;
  std::vector<std::vector<std::vector<std::vector<Elem>>>> options_;
  std::vector<const std::vector<std::vector<Elem>>*> decided_;
};

std::vector<SRing> to_srings(const AbelianGroup& group,
                             const std::vector<std::vector<int>>& labels) {
  std::vector<SRing> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(SRing::from_labels(group, l));
  std::sort(out.begin(), out.end(), catalog_less);
  return out;
}

}  // namespace

std::vector<int> closure_labels(const AbelianGroup& group, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != group.order()) {
    fail(ErrorKind::kNotPartition, "label count does not match the group");
  }
  std::vector<int> out = labels;
  canonicalize(out);
  Closure(group).run(out);
  return out;
}

SRing sring_closure(const AbelianGroup& group, const std::vector<ElementSet>& partition) {
  std::vector<int> labels(group.order(), -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].universe() != group.order() || partition[i].empty()) {
      fail(ErrorKind::kNotPartition, "malformed class");
    }
    partition[i].for_each([&](Elem x) {
      if (labels[x] >= 0) fail(ErrorKind::kNotPartition, "classes are not disjoint");
      labels[x] = static_cast<int>(i);
    });
  }
  for (int l : labels) {
    if (l < 0) fail(ErrorKind::kNotPartition, "classes do not cover the group");
  }
  return SRing::from_labels(group, closure_labels(group, labels));
}

std::vector<ElementSet> rational_classes(const AbelianGroup& group) {
  const int e = group.exponent();
  std::vector<ElementSet> out;
  std::vector<char> seen(group.order(), 0);
  for (Elem x = 0; x < group.order(); ++x) {
    if (seen[x]) continue;
    ElementSet c = group.empty_set();
    for (int m = 1; m <= e; ++m) {
      if (gcd_ll(m, e) != 1) continue;
      const Elem y = group.scale(x, m);
      c.set(y);
      seen[y] = 1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool catalog_less(const SRing& a, const SRing& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (int i = 0; i < a.rank(); ++i) {
    const auto c = a.basic_set(i).members.compare(b.basic_set(i).members);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<SRing> enumerate_rational(const AbelianGroup& group) {
  return to_srings(group, RationalSearch(group).run());
}

std::vector<SRing> enumerate_all(const AbelianGroup& group, int max_order) {
  if (group.order() > max_order) {
    fail(ErrorKind::kBoundExceeded,
         "enumeration is limited to order " + std::to_string(max_order));
  }
  const auto rational = RationalSearch(group).run();
  GaloisSearch galois(group);
  std::vector<std::vector<int>> all;
  for (const auto& r : rational) galois.run(r, all);
  return to_srings(group, all);
}

Catalog make_catalog(const AbelianGroup& group, std::vector<SRing> srings,
                     const EnumerateOptions& options) {
  std::sort(srings.begin(), srings.end(), catalog_less);
  Catalog catalog;
  catalog.group = group;
  for (auto& s : srings) {
    CatalogEntry entry;
    entry.rank = s.rank();
    entry.primitive = is_primitive(s);
    entry.sring = std::move(s);
    catalog.entries.push_back(std::move(entry));
  }

  // Aut(G)-orbit representatives.
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    index.emplace(catalog.entries[i].sring.class_of_table(), i);
  }
  std::vector<Automorphism> gens;
  try {
    gens = aut_group_generators(group);
  } catch (const Error&) {
    gens.clear();
  }
  std::vector<char> visited(catalog.entries.size(), 0);
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    if (visited[i]) continue;
    catalog.entries[i].orbit_rep = true;
    visited[i] = 1;
    std::vector<std::size_t> queue{i};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto& labels = catalog.entries[queue[k]].sring.class_of_table();
      for (const auto& s : gens) {
        std::vector<int> image(labels.size());
        for (Elem x = 0; x < group.order(); ++x) image[s.apply(x)] = labels[x];
        canonicalize(image);
        auto it = index.find(image);
        if (it != index.end() && !visited[it->second]) {
          visited[it->second] = 1;
          queue.push_back(it->second);
        }
      }
    }
  }

  if (options.flags) {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= catalog.entries.size()) return;
        auto& entry = catalog.entries[i];
        const AutResult aut = aut_search(entry.sring);
        const SchurReport report = schur_report(entry.sring, aut);
        entry.schurian = report.schurian;
        entry.aut_order = report.aut_order;
        entry.normal = is_normal(entry.sring, aut.group);
        entry.cyclotomic = is_cyclotomic(entry.sring).cyclotomic;
      }
    };
    const int threads = std::max(1, options.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  return catalog;
}

Catalog enumerate_srings(const AbelianGroup& group, const EnumerateOptions& options) {
  return make_catalog(group, enumerate_all(group, options.max_order), options);
}

}  // namespace sring
