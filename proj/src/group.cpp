#include "sring/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "sring/error.hpp"

namespace sring {

namespace {

constexpr int kAddTableLimit = 1024;
constexpr long long kSylowCandidateLimit = 1LL << 20;

int parse_int(std::string_view text, const char* what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::kParseError,
         std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

long long mod_inverse(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  for (long long x = 1; x < m; ++x) {
    if (a * x % m == 1) return x;
  }
  return m == 1 ? 0 : -1;
}

}  // namespace

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

std::vector<int> prime_divisors(long long n) {
  std::vector<int> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::size_t default_max_order() {
  if (const char* env = std::getenv("SRING_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

struct AbelianGroup::Impl {
  std::vector<int> factors;
  std::vector<int> strides;
  int order = 1;
  int exponent = 1;
  std::vector<Elem> add_table;
  std::vector<Elem> neg_table;
  std::vector<int> orders;
};

AbelianGroup::AbelianGroup() : AbelianGroup(make({1})) {}

AbelianGroup::AbelianGroup(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

AbelianGroup AbelianGroup::make(std::vector<int> factors) {
  return make(std::move(factors), default_max_order());
}

AbelianGroup AbelianGroup::make(std::vector<int> factors,
                                std::size_t max_order) {
  if (factors.empty()) fail(ErrorKind::kInvalidArgument, "no cyclic factors");
  auto impl = std::make_shared<Impl>();
  long long order = 1;
  long long exponent = 1;
  for (int n : factors) {
    if (n < 1) {
      fail(ErrorKind::kInvalidArgument,
           "cyclic factor " + std::to_string(n) + " is smaller than 1");
    }
    order *= n;
    if (order > static_cast<long long>(max_order)) {
      fail(ErrorKind::kBoundExceeded,
           "group order exceeds bound " + std::to_string(max_order));
    }
    exponent = std::lcm(exponent, static_cast<long long>(n));
  }
  impl->factors = std::move(factors);
  impl->order = static_cast<int>(order);
  impl->exponent = static_cast<int>(exponent);
  const int k = static_cast<int>(impl->factors.size());
  impl->strides.assign(k, 1);
  for (int i = k - 2; i >= 0; --i) {
    impl->strides[i] = impl->strides[i + 1] * impl->factors[i + 1];
  }

  const int n = impl->order;
  impl->neg_table.resize(n);
  impl->orders.resize(n);
  std::vector<int> c(k, 0);
  for (Elem x = 0; x < n; ++x) {
    Elem neg = 0;
    long long ord = 1;
    for (int i = 0; i < k; ++i) {
      const int ni = impl->factors[i];
      neg += ((ni - c[i]) % ni) * impl->strides[i];
      ord = std::lcm(ord, static_cast<long long>(ni / std::gcd(ni, c[i])));
    }
    impl->neg_table[x] = neg;
    impl->orders[x] = static_cast<int>(ord);
    for (int i = k - 1; i >= 0; --i) {
      if (++c[i] < impl->factors[i]) break;
      c[i] = 0;
    }
  }
  AbelianGroup group(impl);
  if (n <= kAddTableLimit) {
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) table[x * n + y] = group.add(x, y);
    }
    impl->add_table = std::move(table);
  }
  return group;
}

AbelianGroup AbelianGroup::parse(std::string_view literal) {
  if (literal.empty()) fail(ErrorKind::kParseError, "empty group literal");
  std::vector<int> factors;
  for (auto part : split(literal, 'x')) {
    factors.push_back(parse_int(part, "group literal"));
  }
  return make(std::move(factors));
}

const std::vector<int>& AbelianGroup::factors() const { return impl_->factors; }
int AbelianGroup::num_factors() const {
  return static_cast<int>(impl_->factors.size());
}
int AbelianGroup::order() const { return impl_->order; }
int AbelianGroup::exponent() const { return impl_->exponent; }

std::string AbelianGroup::literal() const {
  std::string out;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(impl_->factors[i]);
  }
  return out;
}

Elem AbelianGroup::add(Elem x, Elem y) const {
  if (!impl_->add_table.empty()) return impl_->add_table[x * impl_->order + y];
  Elem result = 0;
  for (int i = 0; i < num_factors(); ++i) {
    const int ni = impl_->factors[i];
    const int s = impl_->strides[i];
    result += ((x / s % ni + y / s % ni) % ni) * s;
  }
  return result;
}

Elem AbelianGroup::neg(Elem x) const { return impl_->neg_table[x]; }

Elem AbelianGroup::scale(Elem x, long long m) const {
  const long long ord = impl_->orders[x];
  m %= ord;
  if (m < 0) m += ord;
  Elem result = 0;
  for (int i = 0; i < num_factors(); ++i) {
    const long long ni = impl_->factors[i];
    const int s = impl_->strides[i];
    result += static_cast<Elem>((x / s % ni) * m % ni) * s;
  }
  return result;
}

int AbelianGroup::element_order(Elem x) const { return impl_->orders[x]; }

std::vector<int> AbelianGroup::coords(Elem x) const {
  std::vector<int> c(num_factors());
  for (int i = 0; i < num_factors(); ++i) c[i] = coord(x, i);
  return c;
}

int AbelianGroup::coord(Elem x, int factor) const {
  return x / impl_->strides[factor] % impl_->factors[factor];
}

Elem AbelianGroup::index(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != num_factors()) {
    fail(ErrorKind::kInvalidArgument, "coordinate count does not match group");
  }
  Elem result = 0;
  for (int i = 0; i < num_factors(); ++i) {
    const int ni = impl_->factors[i];
    result += ((coords[i] % ni + ni) % ni) * impl_->strides[i];
  }
  return result;
}

Elem AbelianGroup::generator(int factor) const {
  return impl_->factors[factor] == 1 ? 0 : impl_->strides[factor];
}

std::string AbelianGroup::format(Elem x) const {
  std::string out;
  for (int i = 0; i < num_factors(); ++i) {
    if (i) out += ',';
    out += std::to_string(coord(x, i));
  }
  return out;
}

Elem AbelianGroup::parse_element(std::string_view text) const {
  auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != num_factors()) {
    fail(ErrorKind::kParseError, "element '" + std::string(text) +
                                     "' does not match group " + literal());
  }
  std::vector<int> c;
  for (int i = 0; i < num_factors(); ++i) {
    int v = parse_int(parts[i], "element literal");
    if (v < 0 || v >= impl_->factors[i]) {
      fail(ErrorKind::kParseError,
           "residue out of range in element '" + std::string(text) + "'");
    }
    c.push_back(v);
  }
  return index(c);
}

ElementSet AbelianGroup::full_set() const {
  ElementSet s(order());
  s.fill();
  return s;
}

bool AbelianGroup::operator==(const AbelianGroup& other) const {
  return impl_ == other.impl_ || impl_->factors == other.impl_->factors;
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(AbelianGroup group, Elem index)
    : group_(std::move(group)), index_(index) {
  if (index < 0 || index >= group_.order()) {
    fail(ErrorKind::kInvalidArgument, "element index out of range");
  }
}

GroupElement GroupElement::parse(const AbelianGroup& group,
                                 std::string_view text) {
  return GroupElement(group, group.parse_element(text));
}

GroupElement GroupElement::inverse() const {
  return GroupElement(group_, group_.neg(index_));
}

GroupElement GroupElement::pow(long long m) const {
  return GroupElement(group_, group_.scale(index_, m));
}

GroupElement operator+(const GroupElement& x, const GroupElement& y) {
  if (!(x.group_ == y.group_)) {
    fail(ErrorKind::kMismatchedGroups, "elements belong to different groups");
  }
  return GroupElement(x.group_, x.group_.add(x.index_, y.index_));
}

bool GroupElement::operator==(const GroupElement& other) const {
  return group_ == other.group_ && index_ == other.index_;
}

// ---------------------------------------------------------------------------

bool Subgroup::operator<(const Subgroup& other) const {
  const int a = order();
  const int b = other.order();
  if (a != b) return a < b;
  return members_ < other.members_;
}

namespace {

// H + <g> for a subgroup H given as a set.
ElementSet extend(const AbelianGroup& group, const ElementSet& h, Elem g) {
  ElementSet result = h;
  const auto base = h.elements();
  Elem cur = g;
  while (!h.test(cur)) {
    for (Elem x : base) result.set(group.add(x, cur));
    cur = group.add(cur, g);
  }
  return result;
}

std::vector<Elem> small_generators(const AbelianGroup& group,
                                   const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet span = group.empty_set();
  span.set(0);
  members.for_each([&](Elem x) {
    if (!span.test(x)) {
      span = extend(group, span, x);
      gens.push_back(x);
    }
  });
  return gens;
}

std::vector<Subgroup> compute_subgroups(const AbelianGroup& group) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> result;
  Subgroup start = trivial_subgroup(group);
  seen.insert(start.members());
  result.push_back(start);
  for (std::size_t i = 0; i < result.size(); ++i) {
    const Subgroup h = result[i];
    for (Elem g = 1; g < group.order(); ++g) {
      if (h.contains(g)) continue;
      ElementSet ext = extend(group, h.members(), g);
      if (seen.insert(ext).second) {
        auto gens = h.generators();
        gens.push_back(g);
        result.emplace_back(std::move(ext), std::move(gens));
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

Subgroup generated_subgroup(const AbelianGroup& group,
                            std::span<const Elem> generators) {
  ElementSet span = group.empty_set();
  span.set(0);
  for (Elem g : generators) {
    if (!span.test(g)) span = extend(group, span, g);
  }
  return Subgroup(std::move(span),
                  std::vector<Elem>(generators.begin(), generators.end()));
}

Subgroup generated_subgroup(const AbelianGroup& group, const ElementSet& set) {
  auto elems = set.elements();
  ElementSet span = group.empty_set();
  span.set(0);
  std::vector<Elem> gens;
  for (Elem g : elems) {
    if (!span.test(g)) {
      span = extend(group, span, g);
      gens.push_back(g);
    }
  }
  return Subgroup(std::move(span), std::move(gens));
}

Subgroup trivial_subgroup(const AbelianGroup& group) {
  ElementSet s = group.empty_set();
  s.set(0);
  return Subgroup(std::move(s), {});
}

Subgroup whole_group(const AbelianGroup& group) {
  std::vector<Elem> gens;
  for (int i = 0; i < group.num_factors(); ++i) {
    if (group.factors()[i] > 1) gens.push_back(group.generator(i));
  }
  return Subgroup(group.full_set(), std::move(gens));
}

bool is_subgroup(const AbelianGroup& group, const ElementSet& set) {
  if (!set.test(0)) return false;
  const auto elems = set.elements();
  for (Elem x : elems) {
    for (Elem y : elems) {
      if (!set.test(group.add(x, y))) return false;
    }
  }
  return true;
}

Subgroup intersection(const AbelianGroup& group, const Subgroup& a,
                      const Subgroup& b) {
  ElementSet m = a.members() & b.members();
  auto gens = small_generators(group, m);
  return Subgroup(std::move(m), std::move(gens));
}

Subgroup join(const AbelianGroup& group, const Subgroup& a, const Subgroup& b) {
  ElementSet span = a.members();
  for (Elem g : small_generators(group, b.members())) {
    if (!span.test(g)) span = extend(group, span, g);
  }
  auto gens = small_generators(group, span);
  return Subgroup(std::move(span), std::move(gens));
}

Subgroup omega(const AbelianGroup& group, int p) {
  ElementSet m = group.empty_set();
  for (Elem x = 0; x < group.order(); ++x) {
    if (group.scale(x, p) == 0) m.set(x);
  }
  auto gens = small_generators(group, m);
  return Subgroup(std::move(m), std::move(gens));
}

const std::vector<Subgroup>& AbelianGroup::subgroups() const {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::unique_ptr<std::vector<Subgroup>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[factors()];
  if (!slot) {
    slot = std::make_unique<std::vector<Subgroup>>(compute_subgroups(*this));
  }
  return *slot;
}

// ---------------------------------------------------------------------------

Section::Section(const AbelianGroup& group, Subgroup upper, Subgroup lower)
    : group_(group), upper_(std::move(upper)), lower_(std::move(lower)) {
  if (!upper_.contains(lower_)) {
    fail(ErrorKind::kNotSubgroup, "lower subgroup is not contained in upper");
  }
  const int n = group.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Elem> rep;
  const auto lower_elems = lower_.members().elements();
  upper_.members().for_each([&](Elem u) {
    if (coset_of[u] >= 0) return;
    const int id = static_cast<int>(rep.size());
    rep.push_back(u);
    for (Elem l : lower_elems) coset_of[group.add(u, l)] = id;
  });
  const int m = static_cast<int>(rep.size());
  auto cadd = [&](int a, int b) { return coset_of[group.add(rep[a], rep[b])]; };
  auto corder = [&](int c) {
    int k = 1;
    int cur = c;
    while (cur != 0) {
      cur = cadd(cur, c);
      ++k;
    }
    return k;
  };

  // Greedy primary basis of the coset group.
  std::vector<int> factors;
  std::vector<int> basis;
  for (int p : prime_divisors(m)) {
    std::vector<int> sylow;
    for (int c = 0; c < m; ++c) {
      int o = corder(c);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(c);
    }
    std::vector<char> span(m, 0);
    span[0] = 1;
    int span_size = 1;
    while (span_size < static_cast<int>(sylow.size())) {
      int best = -1;
      int best_order = 0;
      for (int c : sylow) {
        int k = 1;
        int cur = c;
        while (!span[cur]) {
          cur = cadd(cur, c);
          ++k;
        }
        if (k > best_order) {
          best_order = k;
          best = c;
        }
      }
      int chosen = -1;
      for (int c : sylow) {
        if (corder(c) != best_order) continue;
        // c must lie in best + span.
        int diff = coset_of[group.sub(rep[c], rep[best])];
        if (span[diff]) {
          chosen = c;
          break;
        }
      }
      if (chosen < 0) fail(ErrorKind::kInternal, "quotient basis lift failed");
      std::vector<int> members;
      for (int c = 0; c < m; ++c) {
        if (span[c]) members.push_back(c);
      }
      int mult = chosen;
      for (int j = 1; j < best_order; ++j) {
        for (int s : members) span[cadd(s, mult)] = 1;
        mult = cadd(mult, chosen);
      }
      span_size *= best_order;
      basis.push_back(chosen);
      factors.push_back(best_order);
    }
  }
  if (factors.empty()) factors.push_back(1);
  quotient_ = AbelianGroup::make(factors, static_cast<std::size_t>(m));

  std::vector<Elem> coset_to_q(m, -1);
  lift_.assign(m, 0);
  for (Elem q = 0; q < m; ++q) {
    int c = 0;
    if (!basis.empty()) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        for (int t = 0; t < quotient_.coord(q, static_cast<int>(j)); ++t) {
          c = cadd(c, basis[j]);
        }
      }
    }
    if (coset_to_q[c] >= 0) fail(ErrorKind::kInternal, "quotient map not injective");
    coset_to_q[c] = q;
    lift_[q] = rep[c];
  }
  project_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) project_[x] = coset_to_q[coset_of[x]];
  }
}

Elem Section::project(Elem x) const {
  if (project_[x] < 0) {
    fail(ErrorKind::kInvalidArgument,
         "element " + group_.format(x) + " lies outside the section");
  }
  return project_[x];
}

ElementSet Section::project_set(const ElementSet& set) const {
  ElementSet out = quotient_.empty_set();
  set.for_each([&](Elem x) { out.set(project(x)); });
  return out;
}

ElementSet Section::preimage(const ElementSet& set) const {
  ElementSet out = group_.empty_set();
  for (Elem x = 0; x < group_.order(); ++x) {
    if (project_[x] >= 0 && set.test(project_[x])) out.set(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

Automorphism::Automorphism(AbelianGroup group, std::vector<Elem> images,
                           std::vector<Elem> table)
    : group_(std::move(group)),
      images_(std::move(images)),
      table_(std::move(table)) {}

Automorphism::Automorphism(AbelianGroup group,
                           std::vector<Elem> generator_images)
    : group_(std::move(group)), images_(std::move(generator_images)) {
  const int k = group_.num_factors();
  if (static_cast<int>(images_.size()) != k) {
    fail(ErrorKind::kInvalidArgument, "wrong number of generator images");
  }
  for (int i = 0; i < k; ++i) {
    if (images_[i] < 0 || images_[i] >= group_.order() ||
        group_.factors()[i] % group_.element_order(images_[i]) != 0) {
      fail(ErrorKind::kInvalidArgument,
           "generator image order does not divide the factor order");
    }
  }
  const int n = group_.order();
  table_.assign(n, 0);
  std::vector<char> hit(n, 0);
  for (Elem x = 0; x < n; ++x) {
    Elem y = 0;
    for (int i = 0; i < k; ++i) {
      y = group_.add(y, group_.scale(images_[i], group_.coord(x, i)));
    }
    table_[x] = y;
    if (hit[y]) fail(ErrorKind::kInvalidArgument, "endomorphism is not bijective");
    hit[y] = 1;
  }
}

Automorphism Automorphism::identity(const AbelianGroup& group) {
  std::vector<Elem> images;
  for (int i = 0; i < group.num_factors(); ++i) images.push_back(group.generator(i));
  std::vector<Elem> table(group.order());
  std::iota(table.begin(), table.end(), 0);
  return Automorphism(group, std::move(images), std::move(table));
}

Automorphism Automorphism::power_map(const AbelianGroup& group, long long m) {
  if (std::gcd(m, static_cast<long long>(group.order())) != 1) {
    fail(ErrorKind::kNotCoprime,
         std::to_string(m) + " is not coprime to the group order");
  }
  std::vector<Elem> images;
  for (int i = 0; i < group.num_factors(); ++i) {
    images.push_back(group.scale(group.generator(i), m));
  }
  return Automorphism(group, std::move(images));
}

ElementSet Automorphism::apply(const ElementSet& set) const {
  ElementSet out = group_.empty_set();
  set.for_each([&](Elem x) { out.set(table_[x]); });
  return out;
}

Automorphism Automorphism::then(const Automorphism& next) const {
  std::vector<Elem> table(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) table[x] = next.table_[table_[x]];
  std::vector<Elem> images;
  for (Elem g : images_) images.push_back(next.table_[g]);
  return Automorphism(group_, std::move(images), std::move(table));
}

Automorphism Automorphism::inverse() const {
  std::vector<Elem> table(table_.size());
  for (std::size_t x = 0; x < table_.size(); ++x) table[table_[x]] = static_cast<Elem>(x);
  std::vector<Elem> images;
  for (int i = 0; i < group_.num_factors(); ++i) {
    images.push_back(table[group_.generator(i)]);
  }
  return Automorphism(group_, std::move(images), std::move(table));
}

bool Automorphism::is_identity() const {
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] != static_cast<Elem>(x)) return false;
  }
  return true;
}

namespace {

struct SylowAuts {
  // Indices of factors with a nontrivial p-part and the p-part generators.
  std::vector<int> factor_ids;
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> images;  // one image list per automorphism
};

SylowAuts sylow_automorphisms(const AbelianGroup& group, int p) {
  SylowAuts out;
  std::vector<int> qs;
  for (int i = 0; i < group.num_factors(); ++i) {
    int n = group.factors()[i];
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) {
      out.factor_ids.push_back(i);
      out.gens.push_back(group.scale(group.generator(i), group.factors()[i] / q));
      qs.push_back(q);
    }
  }
  const int r = static_cast<int>(out.gens.size());
  // Sylow elements with their coefficient vectors.
  std::vector<std::vector<int>> coeffs;
  std::vector<Elem> elems;
  {
    std::vector<int> c(r, 0);
    while (true) {
      Elem x = 0;
      for (int j = 0; j < r; ++j) x = group.add(x, group.scale(out.gens[j], c[j]));
      coeffs.push_back(c);
      elems.push_back(x);
      int j = r - 1;
      while (j >= 0 && ++c[j] == qs[j]) c[j--] = 0;
      if (j < 0) break;
    }
  }
  std::vector<std::vector<Elem>> candidates(r);
  long long total = 1;
  for (int j = 0; j < r; ++j) {
    for (Elem x : elems) {
      if (group.scale(x, qs[j]) == 0) candidates[j].push_back(x);
    }
    std::sort(candidates[j].begin(), candidates[j].end());
    total *= static_cast<long long>(candidates[j].size());
    if (total > kSylowCandidateLimit) {
      fail(ErrorKind::kBoundExceeded,
           "Sylow " + std::to_string(p) + "-subgroup has too many endomorphisms");
    }
  }
  std::vector<char> hit(group.order(), 0);
  std::vector<int> pick(r, 0);
  std::vector<Elem> image(r);
  while (true) {
    for (int j = 0; j < r; ++j) image[j] = candidates[j][pick[j]];
    bool injective = true;
    std::vector<Elem> touched;
    for (const auto& c : coeffs) {
      Elem y = 0;
      for (int j = 0; j < r; ++j) y = group.add(y, group.scale(image[j], c[j]));
      if (hit[y]) {
        injective = false;
        break;
      }
      hit[y] = 1;
      touched.push_back(y);
    }
    for (Elem y : touched) hit[y] = 0;
    if (injective) out.images.push_back(image);
    int j = r - 1;
    while (j >= 0 && ++pick[j] == static_cast<int>(candidates[j].size())) {
      pick[j--] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

std::vector<Automorphism> compute_automorphisms(const AbelianGroup& group) {
  const auto primes = prime_divisors(group.order());
  std::vector<SylowAuts> parts;
  for (int p : primes) parts.push_back(sylow_automorphisms(group, p));
  const int k = group.num_factors();

  // Coefficient of e_i's p-component on the p-part generator.
  std::vector<std::vector<long long>> coeff(parts.size(), std::vector<long long>(k, 0));
  for (std::size_t t = 0; t < parts.size(); ++t) {
    for (std::size_t j = 0; j < parts[t].factor_ids.size(); ++j) {
      const int i = parts[t].factor_ids[j];
      const int n = group.factors()[i];
      int q = 1;
      while (n % (q * primes[t]) == 0) q *= primes[t];
      coeff[t][i] = mod_inverse(n / q, q);
    }
  }

  std::vector<Automorphism> result;
  std::vector<std::size_t> pick(parts.size(), 0);
  while (true) {
    std::vector<Elem> images(k, 0);
    for (std::size_t t = 0; t < parts.size(); ++t) {
      const auto& img = parts[t].images[pick[t]];
      for (std::size_t j = 0; j < parts[t].factor_ids.size(); ++j) {
        const int i = parts[t].factor_ids[j];
        images[i] = group.add(images[i], group.scale(img[j], coeff[t][i]));
      }
    }
    result.emplace_back(group, std::move(images));
    int t = static_cast<int>(parts.size()) - 1;
    while (t >= 0 && ++pick[t] == parts[t].images.size()) pick[t--] = 0;
    if (t < 0) break;
  }
  auto id = std::find_if(result.begin(), result.end(),
                         [](const Automorphism& a) { return a.is_identity(); });
  std::rotate(result.begin(), id, id + 1);
  return result;
}

}  // namespace

const std::vector<Automorphism>& AbelianGroup::automorphisms() const {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::unique_ptr<std::vector<Automorphism>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[factors()];
  if (!slot) {
    slot = std::make_unique<std::vector<Automorphism>>(compute_automorphisms(*this));
  }
  return *slot;
}

const std::vector<Automorphism>& aut_group(const AbelianGroup& group) {
  return group.automorphisms();
}

}  // namespace sring
