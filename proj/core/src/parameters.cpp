#include "cvxtop/parameters.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cvxtop/errors.hpp"
#include "parallel.hpp"

namespace cvxtop {
namespace {

constexpr int kMaxTableMembers = 26;
constexpr int kClique = 127;  // minimum non-clique size of a clique: none

// Meets of all subfamilies plus, for every subfamily, the size of its
// smallest non-clique sub-subfamily.
class MemberTable {
 public:
  static std::optional<MemberTable> build(const SetSystem& f, Budget& budget) {
    const int n = f.size();
    if (n > kMaxTableMembers || !budget.spend(std::uint64_t{2} << n)) return std::nullopt;
    MemberTable t;
    t.n_ = n;
    const std::size_t count = std::size_t{1} << n;
    t.meet_.resize(count);
    t.min_nc_.resize(count);
    t.meet_[0] = f.ground();
    t.min_nc_[0] = kClique;
    for (std::size_t mask = 1; mask < count; ++mask) {
      const int low = std::countr_zero(mask);
      t.meet_[mask] = t.meet_[mask & (mask - 1)] & f.members()[static_cast<std::size_t>(low)];
      if (!t.meet_[mask].empty()) {
        t.min_nc_[mask] = kClique;
        continue;
      }
      int best = std::popcount(mask);
      for (std::size_t b = mask; b; b &= b - 1)
        best = std::min<int>(best, t.min_nc_[mask ^ (b & -b)]);
      t.min_nc_[mask] = static_cast<std::int8_t>(best);
    }
    return t;
  }

  int size() const { return n_; }
  std::size_t count() const { return meet_.size(); }
  bool clique(std::size_t mask) const { return !meet_[mask].empty(); }
  /// Every sub-subfamily of at most c members is a clique.
  bool cwise(std::size_t mask, int c) const { return min_nc_[mask] > c; }
  int min_non_clique(std::size_t mask) const { return min_nc_[mask]; }

 private:
  int n_ = 0;
  std::vector<ElementSet> meet_;
  std::vector<std::int8_t> min_nc_;
};

BudgetExceeded over(const Budget& b, std::optional<std::int64_t> lower = std::nullopt) {
  return BudgetExceeded{b.used(), lower};
}

// conv(P) for all P when the ground set is small, on demand otherwise.
class HullOracle {
 public:
  HullOracle(int ground_size, std::vector<ElementSet> members)
      : ground_(ElementSet::full(ground_size)), members_(std::move(members)) {
    if (ground_size <= kTableGround) {
      const std::size_t count = std::size_t{1} << ground_size;
      table_.assign(count, ground_);
      for (const auto& a : members_) table_[a.bits()] &= a;
      // AND over all supersets.
      for (int i = 0; i < ground_size; ++i)
        for (std::size_t p = 0; p < count; ++p)
          if (!(p >> i & 1u)) table_[p] &= table_[p | (std::size_t{1} << i)];
    }
  }

  ElementSet operator()(ElementSet p) const {
    if (!table_.empty()) return table_[p.bits()];
    ElementSet acc = ground_;
    for (const auto& a : members_)
      if (p.subset_of(a)) acc &= a;
    return acc;
  }

  ElementSet ground() const { return ground_; }

 private:
  static constexpr int kTableGround = 16;
  ElementSet ground_;
  std::vector<ElementSet> members_;
  std::vector<ElementSet> table_;
};

// True iff S splits into two nonempty parts with intersecting hulls.
// Returns nullopt when the budget runs out.
std::optional<bool> has_radon_partition(const HullOracle& conv, ElementSet s, Budget& budget) {
  if (s.size() < 2) return false;
  const std::uint64_t low = s.bits() & -s.bits();
  const std::uint64_t rest = s.bits() ^ low;
  // P1 = low + sub, P2 = rest - sub, with P2 nonempty.
  for (std::uint64_t sub = 0;; sub = (sub - rest) & rest) {
    if (sub != rest) {
      if (!budget.spend()) return std::nullopt;
      if (conv(ElementSet(low | sub)).intersects(conv(ElementSet(rest ^ sub)))) return true;
    }
    if (sub == rest) break;
  }
  return false;
}

struct RadonResult {
  int radon = 0;
  ElementSet witness;
};

// Bad sets (no Radon partition) are closed under taking subsets, so a DFS
// that only extends bad sets visits all of them.
std::optional<RadonResult> radon_search(int ground_size, std::vector<ElementSet> members,
                                        Budget& budget) {
  HullOracle conv(ground_size, std::move(members));
  RadonResult best{1, ElementSet{}};
  bool ok = true;
  auto dfs = [&](auto&& self, ElementSet s, int next) -> void {
    if (s.size() + 1 > best.radon ||
        (s.size() + 1 == best.radon && s.bits() < best.witness.bits())) {
      best.radon = s.size() + 1;
      best.witness = s;
    }
    for (int x = next; x < ground_size && ok; ++x) {
      ElementSet t = s;
      t.insert(x);
      auto split = has_radon_partition(conv, t, budget);
      if (!split) {
        ok = false;
        return;
      }
      if (!*split) self(self, t, x + 1);
    }
  };
  dfs(dfs, ElementSet{}, 0);
  if (!ok) return std::nullopt;
  return best;
}

// Sorted distinct members: subfamilies with equal keys have equal hulls.
std::vector<std::uint64_t> hull_key(const SetSystem& f, std::uint64_t mask) {
  std::vector<std::uint64_t> key;
  for (std::uint64_t b = mask; b; b &= b - 1) key.push_back(f.members()[std::countr_zero(b)].bits());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

void check_t_max(int t_max) {
  if (t_max < 1) throw InputError("t_max must be at least 1");
}

Budgeted<GradedProfile> graded_helly(const SetSystem& f, int t_max, const SearchOptions& opts) {
  check_t_max(t_max);
  Budget budget(opts.budget);
  auto table = MemberTable::build(f, budget);
  if (!table) return over(budget);
  const int n = f.size();
  // by_size[k]: largest minimal non-clique size among non-cliques with k members.
  std::vector<int> by_size(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t mask = 0; mask < table->count(); ++mask)
    if (!table->clique(mask)) {
      auto& slot = by_size[static_cast<std::size_t>(std::popcount(mask))];
      slot = std::max(slot, table->min_non_clique(mask));
    }
  GradedProfile out;
  int running = n > 0 ? 1 : 0;
  for (int t = 1; t <= t_max; ++t) {
    if (t <= n) running = std::max(running, by_size[static_cast<std::size_t>(t)]);
    out.values.push_back(running);
  }
  return out;
}

Budgeted<GradedProfile> graded_radon(const SetSystem& f, int t_max, const SearchOptions& opts) {
  check_t_max(t_max);
  const int n = f.size();
  if (n > kMaxTableMembers) return BudgetExceeded{opts.budget + 1, std::nullopt};
  const int cap = std::min(t_max, n);
  // Deduplicate subfamilies by their distinct members.
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  std::vector<std::vector<std::uint64_t>> unique;
  std::vector<std::pair<int, std::size_t>> item_of;  // (size, unique index) per mask
  const std::uint64_t count = std::uint64_t{1} << n;
  if (count > opts.budget) return BudgetExceeded{count, std::nullopt};
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const int k = std::popcount(mask);
    if (k > cap) continue;
    auto key = hull_key(f, mask);
    auto [it, fresh] = index.emplace(key, unique.size());
    if (fresh) unique.push_back(std::move(key));
    item_of.emplace_back(k, it->second);
  }
  auto run = detail::run_ordered<int>(unique.size(), opts, count, [&](std::size_t i, Budget& b) {
    std::vector<ElementSet> members;
    for (auto bits : unique[i]) members.emplace_back(bits);
    auto r = radon_search(f.ground_size(), std::move(members), b);
    return r ? std::optional<int>(r->radon) : std::nullopt;
  });
  if (!run.complete) {
    std::int64_t lower = 0;
    for (int v : run.values) lower = std::max<std::int64_t>(lower, v);
    return BudgetExceeded{run.nodes, lower > 0 ? std::optional(lower) : std::nullopt};
  }
  std::vector<int> by_size(static_cast<std::size_t>(cap) + 1, 0);
  for (auto [k, u] : item_of) by_size[static_cast<std::size_t>(k)] = std::max(by_size[static_cast<std::size_t>(k)], run.values[u]);
  GradedProfile out;
  int running = by_size[0];
  for (int t = 1; t <= t_max; ++t) {
    if (t <= cap) running = std::max(running, by_size[static_cast<std::size_t>(t)]);
    out.values.push_back(running);
  }
  return out;
}

// For every subfamily G (|G| <= cap), the bit set of color counts m that
// admit a bad surjective coloring of G: every rainbow selection is a
// (c-wise) clique, yet no color class is.
class ColoringSearch {
 public:
  ColoringSearch(const MemberTable& table, std::optional<int> arity, Budget& budget)
      : table_(table), arity_(arity), budget_(budget) {}

  int lowest_colors() const { return arity_ ? *arity_ : 1; }

  // Returns false when the budget ran out.
  bool run(int cap, std::vector<std::uint32_t>& bad) {
    bad.assign(table_.count(), 0);
    for (std::size_t g = 1; g < table_.count(); ++g) {
      if (std::popcount(g) > cap) continue;
      members_ = Selector(g).indices();
      blocks_.clear();
      found_ = 0;
      if (!partitions(0)) {
        bad[g] = found_;
        partial_ |= found_;
        return false;
      }
      bad[g] = found_;
      partial_ |= found_;
    }
    return true;
  }

  // Union of bad color counts seen so far (valid even after a budget stop).
  std::uint32_t partial() const { return partial_; }

 private:
  bool class_ok(std::size_t block) const {
    return arity_ ? table_.cwise(block, *arity_) : table_.clique(block);
  }

  // Every choice of `need` members from distinct blocks (index >= from),
  // together with `acc`, is a clique.
  bool rainbow(std::size_t from, int need, std::size_t acc) {
    if (!budget_.spend()) {
      stopped_ = true;
      return false;
    }
    if (!table_.clique(acc)) return false;
    if (need == 0) return true;
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= blocks_.size(); ++i)
      for (std::size_t b = blocks_[i]; b; b &= b - 1)
        if (!rainbow(i + 1, need - 1, acc | (b & -b))) return false;
    return true;
  }

  bool bad_coloring() {
    const int m = static_cast<int>(blocks_.size());
    if (m < lowest_colors()) return false;
    for (auto block : blocks_)
      if (class_ok(block)) return false;
    const int need = arity_ ? std::min(*arity_, m) : m;
    return rainbow(0, need, 0);
  }

  // Restricted-growth enumeration: set partitions of members_, i.e.
  // surjective colorings up to permutation of the colors.
  bool partitions(std::size_t i) {
    if (i == members_.size()) {
      if (!budget_.spend()) return false;
      const bool bad = bad_coloring();
      if (stopped_) return false;
      if (bad) found_ |= std::uint32_t{1} << blocks_.size();
      return true;
    }
    const std::size_t bit = std::size_t{1} << members_[i];
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      blocks_[b] |= bit;
      const bool ok = partitions(i + 1);
      blocks_[b] ^= bit;
      if (!ok) return false;
    }
    blocks_.push_back(bit);
    const bool ok = partitions(i + 1);
    blocks_.pop_back();
    return ok;
  }

  const MemberTable& table_;
  std::optional<int> arity_;
  Budget& budget_;
  std::vector<int> members_;
  std::vector<std::size_t> blocks_;
  std::uint32_t found_ = 0;
  std::uint32_t partial_ = 0;
  bool stopped_ = false;
};

int lowest_absent(std::uint32_t bad, int from) {
  int m = from;
  while (m < 32 && (bad >> m & 1u)) ++m;
  return m;
}

Budgeted<GradedProfile> graded_colorful(const SetSystem& f, int t_max, std::optional<int> arity,
                                        const SearchOptions& opts) {
  check_t_max(t_max);
  if (arity && *arity < 1) throw InputError("colorful arity c must be at least 1");
  Budget budget(opts.budget);
  auto table = MemberTable::build(f, budget);
  if (!table) return over(budget);
  ColoringSearch search(*table, arity, budget);
  const int lo = search.lowest_colors();
  const int cap = std::min(t_max, f.size());
  std::vector<std::uint32_t> bad;
  if (!search.run(cap, bad)) return over(budget, lowest_absent(search.partial(), lo));
  // OR over sub-subfamilies.
  for (int i = 0; i < table->size(); ++i)
    for (std::size_t mask = 0; mask < bad.size(); ++mask)
      if (mask >> i & 1u) bad[mask] |= bad[mask ^ (std::size_t{1} << i)];
  std::vector<int> by_size(static_cast<std::size_t>(cap) + 1, lo);
  for (std::size_t mask = 0; mask < bad.size(); ++mask) {
    const int k = std::popcount(mask);
    if (k > cap) continue;
    auto& slot = by_size[static_cast<std::size_t>(k)];
    slot = std::max(slot, lowest_absent(bad[mask], lo));
  }
  GradedProfile out;
  int running = lo;
  for (int t = 1; t <= t_max; ++t) {
    if (t <= cap) running = std::max(running, by_size[static_cast<std::size_t>(t)]);
    out.values.push_back(running);
  }
  return out;
}

// Multisets with multiplicities below k, as mixed-radix counters.
class PartitionSearch {
 public:
  PartitionSearch(const SetSystem& f, int k, Budget& budget)
      : conv_(f.ground_size(), f.members()), g_(f.ground_size()), k_(k), budget_(budget) {}

  std::optional<int> run() {
    std::uint64_t total = 1;
    for (int i = 0; i < g_; ++i) {
      total *= static_cast<std::uint64_t>(k_);
      if (total > budget_.remaining()) return std::nullopt;
    }
    std::vector<char> good(total, 0);
    std::vector<int> mult(static_cast<std::size_t>(g_), 0);
    int worst = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      decode(code, mult);
      int size = 0;
      for (int m : mult) size += m;
      // A multiset is good as soon as one sub-multiset is.
      bool is_good = false;
      std::uint64_t place = 1;
      for (int i = 0; i < g_ && !is_good; ++i, place *= static_cast<std::uint64_t>(k_))
        if (mult[static_cast<std::size_t>(i)] > 0 && good[code - place]) is_good = true;
      if (!is_good && size >= k_) {
        auto split = splits(mult);
        if (!split) return std::nullopt;
        is_good = *split;
      }
      good[code] = is_good;
      if (!is_good) worst = std::max(worst, size);
    }
    return worst + 1;
  }

 private:
  void decode(std::uint64_t code, std::vector<int>& mult) const {
    for (int i = 0; i < g_; ++i) {
      mult[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(k_));
      code /= static_cast<std::uint64_t>(k_);
    }
  }

  // Parts are described by their underlying sets U_1 <= ... <= U_k; an
  // element of multiplicity m lies in between 1 and m of them.
  std::optional<bool> splits(const std::vector<int>& mult) {
    support_ = 0;
    for (int i = 0; i < g_; ++i)
      if (mult[static_cast<std::size_t>(i)] > 0) support_ |= std::uint64_t{1} << i;
    mult_ = &mult;
    used_.assign(static_cast<std::size_t>(g_), 0);
    stopped_ = false;
    const bool ok = place(0, 1, conv_.ground(), 0);
    if (stopped_) return std::nullopt;
    return ok;
  }

  bool place(int part, std::uint64_t min_mask, ElementSet common, std::uint64_t covered) {
    if (!budget_.spend()) {
      stopped_ = true;
      return false;
    }
    if (part == k_) return covered == support_;
    for (std::uint64_t u = min_mask; u <= support_; ++u) {
      if ((u & ~support_) != 0) continue;
      bool fits = true;
      for (std::uint64_t b = u; b; b &= b - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(b));
        if (used_[x] + 1 > (*mult_)[x]) fits = false;
      }
      if (!fits) continue;
      const ElementSet next = common & conv_(ElementSet(u));
      if (next.empty()) continue;
      for (std::uint64_t b = u; b; b &= b - 1) ++used_[static_cast<std::size_t>(std::countr_zero(b))];
      const bool ok = place(part + 1, u, next, covered | u);
      for (std::uint64_t b = u; b; b &= b - 1) --used_[static_cast<std::size_t>(std::countr_zero(b))];
      if (ok || stopped_) return ok;
    }
    return false;
  }

  HullOracle conv_;
  int g_;
  int k_;
  Budget& budget_;
  std::uint64_t support_ = 0;
  const std::vector<int>* mult_ = nullptr;
  std::vector<int> used_;
  bool stopped_ = false;
};

}  // namespace

Budgeted<int> helly(const SetSystem& f, const SearchOptions& opts) {
  Budget budget(opts.budget);
  auto table = MemberTable::build(f, budget);
  if (!table) return over(budget);
  if (f.size() == 0) return 0;
  // Direct definition: h works iff every subfamily whose subfamilies of at
  // most h members all intersect is itself a clique.
  for (int h = 1;; ++h) {
    bool works = true;
    for (std::size_t g = 0; g < table->count() && works; ++g) {
      if (!budget.spend()) return over(budget, h);
      if (table->cwise(g, h) && !table->clique(g)) works = false;
    }
    if (works) return h;
  }
}

Budgeted<std::vector<Obstruction>> minimal_obstructions(const SetSystem& f,
                                                        const SearchOptions& opts) {
  Budget budget(opts.budget);
  auto table = MemberTable::build(f, budget);
  if (!table) return over(budget);
  std::vector<Obstruction> out;
  for (std::size_t g = 0; g < table->count(); ++g) {
    if (!budget.spend()) return over(budget);
    if (table->clique(g)) continue;
    bool minimal = true;
    for (std::size_t b = g; b && minimal; b &= b - 1)
      if (!table->clique(g ^ (b & -b))) minimal = false;
    if (minimal) out.push_back({Selector(g)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Obstruction& a, const Obstruction& b) {
    return a.members.size() != b.members.size() ? a.members.size() < b.members.size()
                                                : a.members.bits() < b.members.bits();
  });
  return out;
}

Budgeted<int> radon(const SetSystem& f, const SearchOptions& opts) {
  auto w = radon_witness(f, opts);
  if (!w) return w.exceeded();
  return w->size() + 1;
}

Budgeted<ElementSet> radon_witness(const SetSystem& f, const SearchOptions& opts) {
  Budget budget(opts.budget);
  auto key = hull_key(f, f.all().bits());
  std::vector<ElementSet> members;
  for (auto bits : key) members.emplace_back(bits);
  auto r = radon_search(f.ground_size(), std::move(members), budget);
  if (!r) return over(budget);
  return r->witness;
}

Budgeted<int> partition_number(const SetSystem& f, int k, const SearchOptions& opts) {
  if (k < 2) throw InputError("partition number needs k >= 2");
  Budget budget(opts.budget);
  PartitionSearch search(f, k, budget);
  auto r = search.run();
  if (!r) return over(budget, k);
  return *r;
}

Budgeted<int> colorful_helly(const SetSystem& f, std::optional<int> arity,
                             const SearchOptions& opts) {
  auto profile = graded_colorful(f, std::max(1, f.size()), arity, opts);
  if (!profile) return profile.exceeded();
  return profile->values.back();
}

Budgeted<GradedProfile> graded(const SetSystem& f, GradedParameter which, int t_max,
                               std::optional<int> arity, const SearchOptions& opts) {
  switch (which) {
    case GradedParameter::helly: return graded_helly(f, t_max, opts);
    case GradedParameter::radon: return graded_radon(f, t_max, opts);
    case GradedParameter::colorful: return graded_colorful(f, t_max, arity, opts);
  }
  throw InputError("unknown graded parameter");
}

Budgeted<FractionalProfile> fh_profile(const SetSystem& f, int s, int c,
                                       const SearchOptions& opts) {
  if (s < 1 || s > f.size())
    throw InputError("tuple size s must be in [1, " + std::to_string(f.size()) + "]");
  if (c < 1) throw InputError("arity c must be at least 1");
  Budget budget(opts.budget);
  auto table = MemberTable::build(f, budget);
  if (!table) return over(budget);
  boost::multiprecision::cpp_int hits = 0;
  boost::multiprecision::cpp_int tuples = 0;
  int largest = 0;
  for (std::size_t g = 0; g < table->count(); ++g) {
    if (!budget.spend()) return over(budget);
    const bool cw = table->cwise(g, c);
    const int k = std::popcount(g);
    if (k == s) {
      ++tuples;
      if (cw) ++hits;
    }
    if (cw) largest = std::max(largest, k);
  }
  FractionalProfile out;
  out.s = s;
  out.c = c;
  out.alpha = Rational(hits, tuples);
  out.max_cwise_clique = largest;
  out.n = f.size();
  return out;
}

}  // namespace cvxtop
