#include "sring/autsearch.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "sring/error.hpp"

namespace sring {

ColorConfig::ColorConfig(const SRing& a)
    : n_(a.group().order()), colors_(a.rank()) {
  const AbelianGroup& g = a.group();
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) table_[x * n_ + y] = a.class_of(g.sub(y, x));
  }
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

// Ordered partition of the vertex set; cells are contiguous ranges of
// `lab` identified by their start position.
struct Partition {
  std::vector<int> lab;
  std::vector<int> pos;
  std::vector<int> cell;  // vertex -> start of its cell
  std::vector<int> end;   // start -> one past the last position
  int cells = 0;

  int size() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return cells == size(); }
};

Partition from_colors(const std::vector<int>& colors) {
  const int n = static_cast<int>(colors.size());
  Partition p;
  p.lab.resize(n);
  std::iota(p.lab.begin(), p.lab.end(), 0);
  std::stable_sort(p.lab.begin(), p.lab.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  p.pos.resize(n);
  p.cell.resize(n);
  p.end.assign(n, 0);
  int start = 0;
  for (int k = 0; k < n; ++k) {
    p.pos[p.lab[k]] = k;
    if (k > 0 && colors[p.lab[k]] != colors[p.lab[k - 1]]) {
      p.end[start] = k;
      start = k;
      ++p.cells;
    }
    p.cell[p.lab[k]] = start;
  }
  if (n > 0) {
    p.end[start] = n;
    ++p.cells;
  }
  return p;
}

class Refiner {
 public:
  explicit Refiner(const ColorConfig& config) : config_(config) {}

  // Refines to the coarsest equitable partition below p, processing the
  // queued splitter cells first. Returns a label-invariant trace.
  std::uint64_t run(Partition& p, std::deque<int> queue) const {
    const int n = p.size();
    std::vector<char> queued(n, 0);
    for (int s : queue) queued[s] = 1;
    std::uint64_t trace = 0;
    std::vector<int> splitter;
    std::vector<std::pair<std::vector<int>, int>> sigs;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      queued[w] = 0;
      splitter.assign(p.lab.begin() + w, p.lab.begin() + p.end[w]);
      trace = mix(trace, static_cast<std::uint64_t>(w));
      int start = 0;
      while (start < n) {
        const int stop = p.end[start];
        if (stop - start > 1) {
          sigs.clear();
          for (int k = start; k < stop; ++k) {
            const int v = p.lab[k];
            std::vector<int> sig;
            sig.reserve(splitter.size());
            for (int u : splitter) sig.push_back(config_.color(v, u));
            std::sort(sig.begin(), sig.end());
            sigs.emplace_back(std::move(sig), v);
          }
          bool uniform = true;
          for (std::size_t k = 1; k < sigs.size() && uniform; ++k) {
            uniform = sigs[k].first == sigs[0].first;
          }
          if (!uniform) {
            std::sort(sigs.begin(), sigs.end());
            trace = mix(trace, static_cast<std::uint64_t>(start) * 1315423911ULL);
            int frag = start;
            for (std::size_t k = 0; k < sigs.size(); ++k) {
              const int at = start + static_cast<int>(k);
              if (k > 0 && sigs[k].first != sigs[k - 1].first) {
                p.end[frag] = at;
                trace = mix(trace, static_cast<std::uint64_t>(at - frag));
                frag = at;
                ++p.cells;
              }
              p.lab[at] = sigs[k].second;
              p.pos[sigs[k].second] = at;
              p.cell[sigs[k].second] = frag;
              if (k == 0 || sigs[k].first != sigs[k - 1].first) {
                for (int c : sigs[k].first) trace = mix(trace, static_cast<std::uint64_t>(c));
              }
            }
            p.end[frag] = stop;
            trace = mix(trace, static_cast<std::uint64_t>(stop - frag));
            for (int f = start; f < stop; f = p.end[f]) {
              if (!queued[f]) {
                queued[f] = 1;
                queue.push_back(f);
              }
            }
          }
        }
        start = stop;
      }
    }
    return mix(trace, static_cast<std::uint64_t>(p.cells));
  }

  // Moves v into a singleton cell in front of its cell and refines.
  std::uint64_t individualize(Partition& p, int v) const {
    const int s = p.cell[v];
    const int t = p.end[s];
    const int k = p.pos[v];
    std::swap(p.lab[s], p.lab[k]);
    p.pos[p.lab[k]] = k;
    p.pos[v] = s;
    p.end[s] = s + 1;
    p.end[s + 1] = t;
    for (int j = s + 1; j < t; ++j) p.cell[p.lab[j]] = s + 1;
    ++p.cells;
    return run(p, std::deque<int>{s});
  }

 private:
  const ColorConfig& config_;
};

// Smallest non-singleton cell, ties by position.
int target_cell(const Partition& p) {
  int best = -1;
  int best_size = 0;
  for (int s = 0; s < p.size(); s = p.end[s]) {
    const int size = p.end[s] - s;
    if (size > 1 && (best < 0 || size < best_size)) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

std::vector<int> cell_members(const Partition& p, int start) {
  std::vector<int> out(p.lab.begin() + start, p.lab.begin() + p.end[start]);
  std::sort(out.begin(), out.end());
  return out;
}

struct Node {
  Partition partition;
  std::uint64_t trace = 0;
  int target = -1;
  int chosen = -1;
};

class Search {
 public:
  Search(const SRing& a, const ColorConfig& config)
      : a_(a), config_(config), refiner_(config) {}

  AutResult run() {
    const int n = config_.degree();
    std::vector<int> colors(n, 1);
    colors[0] = 0;
    Partition root = from_colors(colors);
    std::deque<int> all;
    for (int s = 0; s < n; s = root.end[s]) all.push_back(s);
    const std::uint64_t root_trace = refiner_.run(root, all);
    path_.push_back(Node{root, root_trace, -1, -1});
    while (!path_.back().partition.discrete()) {
      Node& node = path_.back();
      node.target = target_cell(node.partition);
      node.chosen = cell_members(node.partition, node.target).front();
      Partition child = node.partition;
      const std::uint64_t trace = refiner_.individualize(child, node.chosen);
      path_.push_back(Node{std::move(child), trace, -1, -1});
      ++nodes_;
    }
    leaf_ = path_.back().partition.lab;

    std::vector<Permutation> gens;
    std::vector<int> base{0};
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) base.push_back(path_[i].chosen);

    // Orbits of the generators found at levels >= i, via union-find.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto absorb = [&](const Permutation& g) {
      for (int x = 0; x < n; ++x) {
        const int u = find(x);
        const int v = find(g[x]);
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
      }
    };

    for (int i = static_cast<int>(path_.size()) - 2; i >= 0; --i) {
      const Node& node = path_[i];
      std::vector<int> failed_roots;
      for (int w : cell_members(node.partition, node.target)) {
        if (find(w) == find(node.chosen)) continue;
        bool known_bad = false;
        for (int r : failed_roots) known_bad = known_bad || find(r) == find(w);
        if (known_bad) continue;
        Partition child = node.partition;
        const std::uint64_t trace = refiner_.individualize(child, w);
        ++nodes_;
        std::optional<Permutation> found;
        if (trace == path_[i + 1].trace && child.cells == path_[i + 1].partition.cells) {
          found = explore(child, i + 1);
        }
        if (found) {
          absorb(*found);
          gens.push_back(std::move(*found));
        } else {
          failed_roots.push_back(w);
        }
      }
    }

    AutResult result;
    result.stabilizer_generators = gens;
    result.stabilizer = PermGroup::from_trusted_bsgs(
        n, std::vector<int>(base.begin() + 1, base.end()), gens);
    std::vector<Permutation> strong = regular_generators(a_.group());
    strong.insert(strong.end(), gens.begin(), gens.end());
    result.group = PermGroup::from_trusted_bsgs(n, base, strong);
    result.search_nodes = nodes_;
    return result;
  }

 private:
  std::optional<Permutation> explore(const Partition& p, std::size_t depth) {
    if (p.discrete()) {
      std::vector<int> images(p.size());
      for (int k = 0; k < p.size(); ++k) images[leaf_[k]] = p.lab[k];
      Permutation g(std::move(images));
      if (preserves_classes(a_, g)) return g;
      return std::nullopt;
    }
    const Node& ref = path_[depth];
    if (p.end[ref.target] != ref.partition.end[ref.target]) return std::nullopt;
    for (int u : cell_members(p, ref.target)) {
      Partition child = p;
      const std::uint64_t trace = refiner_.individualize(child, u);
      ++nodes_;
      if (trace != path_[depth + 1].trace ||
          child.cells != path_[depth + 1].partition.cells) {
        continue;
      }
      if (auto g = explore(child, depth + 1)) return g;
    }
    return std::nullopt;
  }

  const SRing& a_;
  const ColorConfig& config_;
  Refiner refiner_;
  std::vector<Node> path_;
  std::vector<int> leaf_;
  long long nodes_ = 0;
};

}  // namespace

std::vector<int> refine(const ColorConfig& config, const std::vector<int>& vertex_colors) {
  if (static_cast<int>(vertex_colors.size()) != config.degree()) {
    fail(ErrorKind::kInvalidArgument, "vertex coloring has the wrong length");
  }
  Partition p = from_colors(vertex_colors);
  std::deque<int> all;
  for (int s = 0; s < p.size(); s = p.end[s]) all.push_back(s);
  Refiner(config).run(p, all);
  std::vector<int> labels(p.size());
  int ordinal = 0;
  for (int s = 0; s < p.size(); s = p.end[s], ++ordinal) {
    for (int k = s; k < p.end[s]; ++k) labels[p.lab[k]] = ordinal;
  }
  return labels;
}

bool preserves_classes(const SRing& a, const Permutation& p) {
  const AbelianGroup& g = a.group();
  const int n = g.order();
  if (p.degree() != n) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a.class_of(g.sub(p[y], p[x])) != a.class_of(g.sub(y, x))) return false;
    }
  }
  return true;
}

AutResult aut_search(const SRing& a) {
  if (a.group().order() > kMaxDegree) {
    fail(ErrorKind::kBoundExceeded, "degree exceeds " + std::to_string(kMaxDegree));
  }
  const ColorConfig config(a);
  return Search(a, config).run();
}

PermGroup aut_sring(const SRing& a) { return aut_search(a).group; }

}  // namespace sring
