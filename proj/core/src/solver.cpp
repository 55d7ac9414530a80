#include "awtk/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "awtk/closed_forms.hpp"
#include "awtk/errors.hpp"
#include "awtk/progression.hpp"

namespace awtk {

namespace {

using Clock = std::chrono::steady_clock;

// Colors live in bits 1..63 of a domain mask; bit 0 marks "a fresh color
// may still go here".
constexpr int kMaxPalette = 63;
constexpr std::uint64_t kFreshBit = 1;
constexpr std::uint64_t kAllColors = ~std::uint64_t{0};

// Interval arcs longer than this are bounded by growth (+1 per element) from
// the longest solved arc instead of being solved, when bounding cyclic
// searches.
constexpr std::size_t kCyclicArcSolveLimit = 24;

/// AP incidence over element indices, arranged for left-to-right search:
/// for each index t, the progressions whose second-largest member is t,
/// stored as groups of k-1 indices [largest, rest...].
struct Space {
  std::size_t n = 0;
  int k = 0;
  std::size_t ap_count = 0;
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> data;

  std::size_t stride() const { return static_cast<std::size_t>(k - 1); }
};

Space build_space(const GroupInstance& g, int k) {
  Space s;
  s.n = g.size();
  s.k = k;
  const long long n = g.order();
  auto specs = ap_specs(g, k);
  s.ap_count = specs.size();
  std::vector<std::vector<std::uint32_t>> groups(s.n);
  std::vector<std::uint32_t> idx(static_cast<std::size_t>(k));
  for (auto [a, d] : specs) {
    for (int i = 0; i < k; ++i) {
      long long x = a + d * i;
      if (!g.is_interval()) x %= n;
      idx[static_cast<std::size_t>(i)] =
          static_cast<std::uint32_t>(x - g.first_element());
    }
    std::sort(idx.begin(), idx.end());
    auto& bucket = groups[idx[static_cast<std::size_t>(k - 2)]];
    bucket.push_back(idx[static_cast<std::size_t>(k - 1)]);
    for (int i = 0; i < k - 2; ++i) bucket.push_back(idx[static_cast<std::size_t>(i)]);
  }
  s.offsets.assign(s.n + 1, 0);
  for (std::size_t t = 0; t < s.n; ++t) {
    s.offsets[t + 1] = s.offsets[t] + static_cast<std::uint32_t>(groups[t].size());
    s.data.insert(s.data.end(), groups[t].begin(), groups[t].end());
  }
  return s;
}

struct Goal {
  int target = 1;  // minimum palette at a leaf
  int cap = kMaxPalette;
  bool unitary = false;
  bool unique_first = false;
  bool unique_last = false;
};

struct Shared {
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
};

/// One depth-first search over canonical partial colorings.
class Search {
 public:
  // Leaf callback returns true to end the search.
  using LeafFn = std::function<bool(std::span<const Color>)>;

  Search(const Space& space, std::span<const int> suffix_bound, Goal goal,
         Shared& shared)
      : space_(space),
        suffix_bound_(suffix_bound),
        goal_(goal),
        shared_(shared),
        color_(space.n, 0),
        domain_(space.n, kAllColors),
        class_size_(kMaxPalette + 2, 0),
        fresh_ok_(space.n) {}

  std::uint64_t nodes() const { return nodes_; }

  /// Explore from the current state at index t. Entries at t == limit (when
  /// limit < n) go to on_prefix instead of descending.
  bool dfs(std::size_t t, const LeafFn& on_leaf, std::size_t limit,
           const LeafFn& on_prefix) {
    if ((++nodes_ & 0xfff) == 0) poll_deadline();
    if (shared_.stop.load(std::memory_order_relaxed)) return true;

    const std::size_t n = space_.n;
    if (t == n) {
      if (used_ < goal_.target) return false;
      if (goal_.unitary && singletons_ == 0) return false;
      return on_leaf(std::span<const Color>(color_.data(), n));
    }
    if (t == limit) return on_prefix(std::span<const Color>(color_.data(), t));

    if (!feasible_bounds(t)) return false;

    std::uint64_t dom = domain_[t];
    std::uint64_t old_colors = (dom >> 1) & low_mask(used_);
    if (goal_.unique_first && t > 0) old_colors &= ~std::uint64_t{1};
    bool fresh = (dom & kFreshBit) != 0 && used_ < goal_.cap;
    if (goal_.unique_last && t == n - 1) old_colors = 0;

    while (old_colors != 0) {
      int bit = std::countr_zero(old_colors);
      old_colors &= old_colors - 1;
      if (descend(t, bit + 1, on_leaf, limit, on_prefix)) return true;
    }
    if (fresh && descend(t, used_ + 1, on_leaf, limit, on_prefix)) return true;
    return false;
  }

  /// Re-apply a prefix recorded by another Search over the same space.
  bool replay(std::span<const Color> prefix) {
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      if (!assign(t, prefix[t])) return false;
    }
    return true;
  }

 private:
  static std::uint64_t low_mask(int bits) {
    return bits >= 64 ? kAllColors : ((std::uint64_t{1} << bits) - 1);
  }

  void poll_deadline() {
    if (shared_.deadline && Clock::now() > *shared_.deadline) {
      shared_.timed_out = true;
      shared_.stop = true;
    }
  }

  bool feasible_bounds(std::size_t t) const {
    const std::size_t n = space_.n;
    const int need = goal_.target - used_;
    if (need > 0) {
      if (need > fresh_ok_) return false;
      if (used_ + need > goal_.cap) return false;
      std::size_t remaining = n - t;
      int bound = suffix_bound_[remaining];
      if ((domain_[t] & kFreshBit) == 0) bound = suffix_bound_[remaining - 1];
      if (need > bound) return false;
    }
    if (goal_.unitary && singletons_ == 0 &&
        (used_ >= goal_.cap || fresh_ok_ == 0)) {
      return false;
    }
    if (goal_.unique_last &&
        ((domain_[n - 1] & kFreshBit) == 0 || used_ >= goal_.cap)) {
      return false;
    }
    return true;
  }

  bool descend(std::size_t t, Color c, const LeafFn& on_leaf,
               std::size_t limit, const LeafFn& on_prefix) {
    std::size_t mark = trail_.size();
    bool found = false;
    if (assign(t, c)) found = dfs(t + 1, on_leaf, limit, on_prefix);
    unassign(t, c, mark);
    return found;
  }

  /// Color index t and forward-check every progression whose only
  /// uncolored member is now its largest one. False on a domain wipeout;
  /// the caller still unassigns.
  bool assign(std::size_t t, Color c) {
    color_[t] = c;
    if (c > used_) used_ = c;
    auto& size = class_size_[static_cast<std::size_t>(c)];
    ++size;
    if (size == 1) ++singletons_;
    if (size == 2) --singletons_;
    if (domain_[t] & kFreshBit) --fresh_ok_;

    const std::uint64_t own = std::uint64_t{1} << c;
    const std::size_t stride = space_.stride();
    const int want = space_.k - 1;
    const std::uint32_t* p = space_.data.data() + space_.offsets[t] * 1;
    const std::uint32_t* end = space_.data.data() + space_.offsets[t + 1];
    for (; p != end; p += stride) {
      std::uint64_t mask = own;
      for (std::size_t j = 1; j < stride; ++j) mask |= std::uint64_t{1} << color_[p[j]];
      if (std::popcount(mask) != want) continue;
      const std::uint32_t x = p[0];
      const std::uint64_t before = domain_[x];
      const std::uint64_t after = before & mask;
      if (after == before) continue;
      trail_.push_back({x, before});
      if (before & kFreshBit) --fresh_ok_;
      domain_[x] = after;
      if (after == 0) return false;
    }
    return true;
  }

  void unassign(std::size_t t, Color c, std::size_t mark) {
    while (trail_.size() > mark) {
      auto [x, before] = trail_.back();
      trail_.pop_back();
      if (before & kFreshBit) ++fresh_ok_;
      domain_[x] = before;
    }
    if (domain_[t] & kFreshBit) ++fresh_ok_;
    auto& size = class_size_[static_cast<std::size_t>(c)];
    if (size == 1) --singletons_;
    if (size == 2) ++singletons_;
    --size;
    if (size == 0 && c == used_) --used_;
    color_[t] = 0;
  }

  struct TrailEntry {
    std::uint32_t index;
    std::uint64_t domain;
  };

  const Space& space_;
  std::span<const int> suffix_bound_;
  Goal goal_;
  Shared& shared_;

  std::vector<Color> color_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> class_size_;
  std::vector<TrailEntry> trail_;
  int used_ = 0;
  int singletons_ = 0;
  int fresh_ok_ = 0;
  std::uint64_t nodes_ = 0;
};

struct Decision {
  std::optional<std::vector<Color>> witness;
  std::uint64_t nodes = 0;
};

/// Lexicographically first canonical coloring meeting `goal`, if any.
Decision find_first(const Space& space, std::span<const int> suffix_bound,
                    Goal goal, Shared& shared, unsigned workers) {
  Decision result;
  auto capture = [&result](std::span<const Color> colors) {
    result.witness.emplace(colors.begin(), colors.end());
    return true;
  };
  auto never = [](std::span<const Color>) { return false; };

  if (workers <= 1 || space.n < 4) {
    Search search(space, suffix_bound, goal, shared);
    search.dfs(0, capture, space.n, never);
    result.nodes = search.nodes();
    return result;
  }

  // Split at the shallowest depth giving a few prefixes per worker.
  std::vector<std::vector<Color>> prefixes;
  std::uint64_t split_nodes = 0;
  for (std::size_t depth = 1; depth < space.n; ++depth) {
    prefixes.clear();
    Search splitter(space, suffix_bound, goal, shared);
    auto keep = [&prefixes](std::span<const Color> prefix) {
      prefixes.emplace_back(prefix.begin(), prefix.end());
      return false;
    };
    splitter.dfs(0, capture, depth, keep);
    split_nodes += splitter.nodes();
    if (result.witness) {  // solved before reaching the split depth
      result.nodes = split_nodes;
      return result;
    }
    if (prefixes.size() >= 4 * static_cast<std::size_t>(workers) ||
        prefixes.empty() || depth + 1 == space.n) {
      break;
    }
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{prefixes.size()};
  std::atomic<std::uint64_t> nodes{split_nodes};
  std::vector<std::optional<std::vector<Color>>> found(prefixes.size());

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || i > best.load() || shared.stop.load()) return;
      Search search(space, suffix_bound, goal, shared);
      if (!search.replay(prefixes[i])) continue;
      std::optional<std::vector<Color>> hit;
      auto grab = [&hit](std::span<const Color> colors) {
        hit.emplace(colors.begin(), colors.end());
        return true;
      };
      search.dfs(prefixes[i].size(), grab, space.n, never);
      nodes += search.nodes();
      if (hit && !shared.timed_out) {
        found[i] = std::move(hit);
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  result.nodes = nodes.load();
  if (best.load() < prefixes.size()) result.witness = found[best.load()];
  return result;
}

// ---------------------------------------------------------------------------
// Existence search for cyclic groups: dynamic variable order, unit
// propagation, and symmetry breaking by the group's affine maps. It decides
// feasibility only; witnesses come from the ordered search above.

std::vector<Color> canonicalize_ids(const std::vector<Color>& colors) {
  std::vector<Color> relabel(kMaxPalette + 2, 0);
  std::vector<Color> out(colors.size());
  Color next = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    auto& r = relabel[static_cast<std::size_t>(colors[i])];
    if (r == 0) r = ++next;
    out[i] = r;
  }
  return out;
}

struct Incidence {
  std::size_t n = 0;
  int k = 0;
  std::vector<std::uint32_t> members;  // k per progression
  std::vector<std::uint32_t> offsets;  // per element, into `through`
  std::vector<std::uint32_t> through;
};

Incidence build_incidence(const GroupInstance& g, int k) {
  Incidence inc;
  inc.n = g.size();
  inc.k = k;
  std::vector<std::vector<std::uint32_t>> per(inc.n);
  std::uint32_t id = 0;
  for (auto [a, d] : ap_specs(g, k)) {
    for (int i = 0; i < k; ++i) {
      long long x = a + d * i;
      if (!g.is_interval()) x %= g.order();
      auto e = static_cast<std::uint32_t>(x - g.first_element());
      inc.members.push_back(e);
      per[e].push_back(id);
    }
    ++id;
  }
  inc.offsets.assign(inc.n + 1, 0);
  for (std::size_t x = 0; x < inc.n; ++x) {
    inc.offsets[x + 1] = inc.offsets[x] + static_cast<std::uint32_t>(per[x].size());
    inc.through.insert(inc.through.end(), per[x].begin(), per[x].end());
  }
  return inc;
}

class ExistSearch {
 public:
  ExistSearch(const Incidence& inc, Goal goal, int max_first_class, Shared& shared)
      : inc_(inc),
        goal_(goal),
        max_first_class_(max_first_class),
        shared_(shared),
        color_(inc.n, 0),
        domain_(inc.n, kAllColors),
        class_size_(kMaxPalette + 2, 0),
        fresh_ok_(static_cast<int>(inc.n)) {}

  std::uint64_t nodes() const { return nodes_; }

  /// Remove `color` from every element except `keep`.
  bool forbid_elsewhere(Color color, std::size_t keep) {
    for (std::size_t x = 0; x < inc_.n; ++x) {
      if (x != keep && !narrow(x, ~(std::uint64_t{1} << color))) return false;
    }
    return propagate();
  }

  bool place(std::size_t x, Color c) {
    if (color_[x] != 0) return color_[x] == c;
    const std::uint64_t bit = c == used_ + 1 ? kFreshBit : std::uint64_t{1} << c;
    if (c > used_ + 1 || !(options(x) & bit)) return false;
    return assign(x, c) && propagate();
  }

  const std::vector<Color>& solution() const { return solution_; }

  /// Called at each full coloring; return true to stop, false to continue.
  void set_visitor(std::function<bool(const std::vector<Color>&)> visit) {
    on_solution_ = std::move(visit);
  }

  bool solve() {
    if ((++nodes_ & 0xfff) == 0) poll_deadline();
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    if (!bounds_ok()) return false;

    std::size_t best = inc_.n;
    int best_options = 1 << 30;
    for (std::size_t x = 0; x < inc_.n; ++x) {
      if (color_[x] != 0) continue;
      int o = option_count(x);
      if (o < best_options) {
        best_options = o;
        best = x;
        if (o <= 1) break;
      }
    }
    if (best == inc_.n) {
      if (used_ < goal_.target || (goal_.unitary && singletons_ == 0)) return false;
      solution_ = color_;
      return !on_solution_ || on_solution_(solution_);
    }
    if (best_options == 0) return false;

    std::uint64_t opts = options(best);
    while (opts != 0) {
      int bit = std::countr_zero(opts);
      opts &= opts - 1;
      Color c = bit == 0 ? used_ + 1 : bit;
      std::size_t mark = trail_.size();
      bool ok = place(best, c) && solve();
      undo(mark);
      if (ok) return true;
      if (shared_.stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

 private:
  enum class Kind : std::uint8_t { Domain, Color };
  struct TrailEntry {
    Kind kind;
    std::uint32_t index;
    std::uint64_t value;
  };

  void poll_deadline() {
    if (shared_.deadline && Clock::now() > *shared_.deadline) {
      shared_.timed_out = true;
      shared_.stop = true;
    }
  }

  // Bit 0 stands for the fresh color; bit c for existing color c.
  std::uint64_t options(std::size_t x) const {
    std::uint64_t dom = domain_[x];
    std::uint64_t mask = dom & (used_ >= 63 ? kAllColors : ((std::uint64_t{2} << used_) - 2));
    if ((dom & kFreshBit) && used_ < goal_.cap) mask |= kFreshBit;
    return mask;
  }
  int option_count(std::size_t x) const { return std::popcount(options(x)); }

  bool bounds_ok() const {
    const int need = goal_.target - used_;
    if (need > 0 && (need > fresh_ok_ || used_ + need > goal_.cap)) return false;
    if (goal_.unitary && singletons_ == 0 && (used_ >= goal_.cap || fresh_ok_ == 0)) {
      return false;
    }
    if (max_first_class_ < 0) return true;
    // Class 1 must end no larger than any other class.
    const int first = class_size_[1];
    if (first > max_first_class_) return false;
    if (first <= 1) return true;
    if (used_ < goal_.target && fresh_ok_ < first) return false;
    for (int c = 2; c <= used_; ++c) {
      if (class_size_[static_cast<std::size_t>(c)] >= first) continue;
      int room = class_size_[static_cast<std::size_t>(c)];
      const std::uint64_t bit = std::uint64_t{1} << c;
      for (std::size_t x = 0; x < inc_.n && room < first; ++x) {
        if (color_[x] == 0 && (domain_[x] & bit)) ++room;
      }
      if (room < first) return false;
    }
    return true;
  }

  bool narrow(std::size_t x, std::uint64_t mask) {
    const std::uint64_t before = domain_[x];
    const std::uint64_t after = before & mask;
    if (after == before) return true;
    trail_.push_back({Kind::Domain, static_cast<std::uint32_t>(x), before});
    domain_[x] = after;
    if (color_[x] == 0) {
      if ((before & kFreshBit) && !(after & kFreshBit)) --fresh_ok_;
      int o = option_count(x);
      if (o == 0) return false;
      if (o == 1) pending_.push_back(static_cast<std::uint32_t>(x));
    }
    return true;
  }

  bool assign(std::size_t x, Color c) {
    trail_.push_back({Kind::Color, static_cast<std::uint32_t>(x), 0});
    color_[x] = c;
    if (domain_[x] & kFreshBit) --fresh_ok_;
    if (c > used_) used_ = c;
    auto& size = class_size_[static_cast<std::size_t>(c)];
    ++size;
    if (size == 1) ++singletons_;
    if (size == 2) --singletons_;
    queue_.push_back(static_cast<std::uint32_t>(x));
    return true;
  }

  bool propagate() {
    const auto k = static_cast<std::size_t>(inc_.k);
    bool ok = true;
    while (ok && (!queue_.empty() || !pending_.empty())) {
      if (queue_.empty()) {
        std::uint32_t x = pending_.back();
        pending_.pop_back();
        if (color_[x] != 0) continue;
        std::uint64_t o = options(x);
        if (o == 0) { ok = false; break; }
        if (std::popcount(o) != 1) continue;
        int bit = std::countr_zero(o);
        assign(x, bit == 0 ? used_ + 1 : bit);
        continue;
      }
      std::uint32_t x = queue_.back();
      queue_.pop_back();
      for (std::uint32_t i = inc_.offsets[x]; ok && i < inc_.offsets[x + 1]; ++i) {
        const std::uint32_t* m = inc_.members.data() + std::size_t{inc_.through[i]} * k;
        std::uint64_t mask = 0;
        std::size_t assigned = 0;
        std::uint32_t open = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (color_[m[j]] != 0) {
            ++assigned;
            mask |= std::uint64_t{1} << color_[m[j]];
          } else {
            open = m[j];
          }
        }
        const auto distinct = static_cast<std::size_t>(std::popcount(mask));
        if (assigned == k && distinct == k) ok = false;
        else if (assigned + 1 == k && distinct + 1 == k) ok = narrow(open, mask);
      }
    }
    if (!ok) {
      queue_.clear();
      pending_.clear();
    }
    return ok && bounds_ok();
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      TrailEntry e = trail_.back();
      trail_.pop_back();
      if (e.kind == Kind::Domain) {
        if (color_[e.index] == 0 && (e.value & kFreshBit) && !(domain_[e.index] & kFreshBit)) {
          ++fresh_ok_;
        }
        domain_[e.index] = e.value;
      } else {
        Color c = color_[e.index];
        auto& size = class_size_[static_cast<std::size_t>(c)];
        if (size == 1) --singletons_;
        if (size == 2) ++singletons_;
        --size;
        if (size == 0 && c == used_) --used_;
        color_[e.index] = 0;
        if (domain_[e.index] & kFreshBit) ++fresh_ok_;
      }
    }
  }

  const Incidence& inc_;
  Goal goal_;
  int max_first_class_;
  Shared& shared_;

  std::vector<Color> color_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> class_size_;
  std::vector<TrailEntry> trail_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> pending_;
  std::vector<Color> solution_;
  std::function<bool(const std::vector<Color>&)> on_solution_;
  int used_ = 0;
  int singletons_ = 0;
  int fresh_ok_ = 0;
  std::uint64_t nodes_ = 0;
};

/// Whether Z_n has an exact rainbow-free coloring with exactly goal.target
/// colors. A translation puts a smallest class on 0 (a singleton one, for
/// unitary goals); for prime n the affine group is 2-transitive, so 1 may
/// also be taken from a different class.
bool cyclic_feasible(const GroupInstance& g, const Incidence& inc, Goal goal,
                     Shared& shared, std::uint64_t& nodes) {
  const auto n = static_cast<int>(g.size());
  ExistSearch search(inc, goal, n / goal.target, shared);
  bool ok = search.place(0, 1);
  if (ok && goal.unitary) ok = search.forbid_elsewhere(1, 0);
  if (ok && !goal.unitary && goal.target >= 2 && n >= 2 && is_prime(n)) {
    ok = search.place(1, 2);
  }
  ok = ok && search.solve();
  nodes += search.nodes();
  return ok;
}

/// Lexicographically first canonical coloring of Z_p (p prime) meeting
/// `goal`: every solution is an affine image of one in the reduced space
/// searched by cyclic_feasible, so minimize over the images of all of those.
std::optional<std::vector<Color>> prime_lex_first(const Incidence& inc, Goal goal,
                                                  Shared& shared, std::uint64_t& nodes) {
  const auto p = static_cast<long long>(inc.n);
  std::optional<std::vector<Color>> best;
  std::vector<Color> image(inc.n);
  auto consider = [&](const std::vector<Color>& colors) {
    for (long long a = 1; a < p; ++a) {
      for (long long b = 0; b < p; ++b) {
        // image(x) = colors(a*x + b)
        long long y = b;
        for (long long x = 0; x < p; ++x) {
          image[static_cast<std::size_t>(x)] = colors[static_cast<std::size_t>(y)];
          y += a;
          if (y >= p) y -= p;
        }
        auto canon = canonicalize_ids(image);
        if (!best || canon < *best) best = std::move(canon);
      }
    }
    return false;
  };
  ExistSearch search(inc, goal, static_cast<int>(p) / goal.target, shared);
  search.set_visitor(consider);
  bool ok = search.place(0, 1);
  if (ok && goal.unitary) ok = search.forbid_elsewhere(1, 0);
  if (ok && !goal.unitary) ok = search.place(1, 2);
  if (ok) search.solve();
  nodes += search.nodes();
  return best;
}

// ---------------------------------------------------------------------------
// Interval r_max memo, per k. Entry L holds r_max([L], k); entry 0 is 0.

std::mutex memo_mutex;
std::map<int, std::vector<int>> interval_memo;

std::vector<int> memo_snapshot(int k) {
  std::lock_guard lock(memo_mutex);
  auto it = interval_memo.find(k);
  return it == interval_memo.end() ? std::vector<int>{0} : it->second;
}

void memo_store(int k, std::size_t length, int value) {
  std::lock_guard lock(memo_mutex);
  auto& table = interval_memo[k];
  if (table.empty()) table.push_back(0);
  if (table.size() == length) table.push_back(value);
}

/// Suffix bounds for a search over n elements: entry L bounds the colors
/// any L consecutive elements can carry.
std::vector<int> suffix_bounds(const std::vector<int>& interval, std::size_t n) {
  std::vector<int> bound(n + 1, 0);
  for (std::size_t len = 0; len <= n; ++len) {
    if (len < interval.size()) {
      bound[len] = interval[len];
    } else {
      std::size_t last = interval.size() - 1;
      bound[len] = std::min<long long>(
          static_cast<long long>(len),
          interval[last] + static_cast<long long>(len - last));
    }
  }
  return bound;
}

struct Context {
  Shared shared;
  unsigned workers = 1;
  std::uint64_t nodes = 0;

  explicit Context(const SolverOptions& options) : workers(std::max(1u, options.workers)) {
    if (options.timeout) shared.deadline = Clock::now() + *options.timeout;
  }

  Decision decide(const Space& space, const std::vector<int>& bound, Goal goal) {
    Decision d = find_first(space, bound, goal, shared, workers);
    nodes += d.nodes;
    if (shared.timed_out) throw SolverTimeout("solver exceeded its time budget");
    return d;
  }
};

std::vector<Color> all_distinct(std::size_t n) {
  std::vector<Color> colors(n);
  std::iota(colors.begin(), colors.end(), 1);
  return colors;
}

void require_palette(int r) {
  if (r > kMaxPalette) {
    throw std::invalid_argument("palette " + std::to_string(r) +
                                " exceeds the solver limit of " +
                                std::to_string(kMaxPalette));
  }
}

struct Level {
  int r = 0;
  std::vector<Color> witness;
};

/// r_max([length], k), assuming the memo holds every shorter length.
Level solve_interval_level(std::size_t length, int k, Context& ctx) {
  auto table = memo_snapshot(k);
  if (length < static_cast<std::size_t>(k)) {
    return {static_cast<int>(length), all_distinct(length)};
  }
  const GroupInstance g = GroupInstance::interval(static_cast<long long>(length));
  const Space space = build_space(g, k);
  auto bound = suffix_bounds(table, length);
  bound[length] = static_cast<int>(length);

  const int floor_r = k - 1;  // any (k-1)-coloring is rainbow-free
  int start = table.size() > length ? table[length]
                                    : std::min<int>(static_cast<int>(length),
                                                    table[length - 1] + 1);
  require_palette(start);
  for (int target = start; target >= floor_r; --target) {
    Decision d = ctx.decide(space, bound, Goal{target, target});
    if (d.witness) return {target, std::move(*d.witness)};
  }
  throw std::logic_error("no rainbow-free coloring at the trivial floor");
}

std::vector<int> ensure_interval_table(std::size_t upto, int k, Context& ctx) {
  auto table = memo_snapshot(k);
  for (std::size_t len = table.size(); len <= upto; ++len) {
    Level level = solve_interval_level(len, k, ctx);
    memo_store(k, len, level.r);
  }
  return memo_snapshot(k);
}

PaletteResult solve_interval(const GroupInstance& g, int k, bool unitary,
                             Context& ctx) {
  const std::size_t n = g.size();
  ensure_interval_table(n - 1, k, ctx);
  Level level = solve_interval_level(n, k, ctx);
  memo_store(k, n, level.r);
  if (!unitary) return {level.r, Coloring(g, std::move(level.witness)), ctx.nodes};

  auto table = memo_snapshot(k);
  const Space space = build_space(g, k);
  auto bound = suffix_bounds(table, n);
  for (int target = level.r; target >= 1; --target) {
    Decision d = ctx.decide(space, bound, Goal{target, target, true});
    if (d.witness) return {target, Coloring(g, std::move(*d.witness)), ctx.nodes};
  }
  throw std::logic_error("no unitary rainbow-free coloring found");
}

PaletteResult solve_cyclic(const GroupInstance& g, int k, bool unitary,
                           Context& ctx) {
  const std::size_t n = g.size();
  auto table = ensure_interval_table(std::min(n - 1, kCyclicArcSolveLimit), k, ctx);
  const Space space = build_space(g, k);
  auto bound = suffix_bounds(table, n);
  bound[n] = static_cast<int>(n);

  // Feasibility is downward closed in the target (merging two classes keeps
  // a coloring rainbow-free, and keeps a singleton when r >= 3), so climb
  // until the first failure, then fetch the ordered witness once. A unitary
  // coloring of n >= 2 elements needs two colors, so that climb starts at 2.
  const Incidence inc = build_incidence(g, k);
  int best = 0;
  for (int target = unitary ? 2 : 1; target <= static_cast<int>(n); ++target) {
    require_palette(target);
    bool ok = cyclic_feasible(g, inc, Goal{target, target, unitary}, ctx.shared, ctx.nodes);
    if (ctx.shared.timed_out) throw SolverTimeout("solver exceeded its time budget");
    if (!ok) break;
    best = target;
  }
  const Goal goal{best, best, unitary};
  std::optional<std::vector<Color>> witness;
  if (best >= 3 && is_prime(static_cast<long long>(n))) {
    witness = prime_lex_first(inc, goal, ctx.shared, ctx.nodes);
    if (ctx.shared.timed_out) throw SolverTimeout("solver exceeded its time budget");
  } else {
    witness = ctx.decide(space, bound, goal).witness;
  }
  if (!witness) throw std::logic_error("witness search missed a feasible palette");
  return {best, Coloring(g, std::move(*witness)), ctx.nodes};
}

void require_length(int k) {
  if (k < 3) throw std::invalid_argument("progression length k must be >= 3");
}

}  // namespace

PaletteResult max_rainbow_free_palette(const GroupInstance& g, int k,
                                       bool unitary,
                                       const SolverOptions& options) {
  require_length(k);
  Context ctx(options);
  if (ap_specs(g, k).empty()) {
    return {static_cast<int>(g.order()), Coloring(g, all_distinct(g.size())), 0};
  }
  return g.is_interval() ? solve_interval(g, k, unitary, ctx)
                         : solve_cyclic(g, k, unitary, ctx);
}

namespace {

SolverOutcome outcome(const GroupInstance& g, int k, bool unitary,
                      const SolverOptions& options) {
  auto start = Clock::now();
  PaletteResult r = max_rainbow_free_palette(g, k, unitary, options);
  SolverOutcome out;
  out.aw_value = r.r_max + 1;
  out.witness = std::move(r.witness);
  out.unitary = unitary;
  out.nodes_explored = r.nodes_explored;
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return out;
}

}  // namespace

SolverOutcome aw(const GroupInstance& g, int k, const SolverOptions& options) {
  return outcome(g, k, false, options);
}

SolverOutcome aw_u(const GroupInstance& g, int k, const SolverOptions& options) {
  return outcome(g, k, true, options);
}

Coloring merge_colors(const Coloring& c, Color i, Color j) {
  if (i == j) throw std::invalid_argument("cannot merge a color with itself");
  if (i < 1 || j < 1 || i > c.palette() || j > c.palette()) {
    throw std::invalid_argument("merge_colors: color not in use");
  }
  std::vector<Color> colors(c.assignment().begin(), c.assignment().end());
  for (auto& col : colors) {
    if (col == j) col = i;
  }
  // Close the gap left by j so the result is exact before canonicalizing.
  for (auto& col : colors) {
    if (col > j) --col;
  }
  return canonicalize(Coloring(c.group(), std::move(colors)));
}

std::uint64_t for_each_rainbow_free(
    const GroupInstance& g, int k, const EnumerationOptions& options,
    const std::function<void(const Coloring&)>& visit) {
  require_length(k);
  const std::size_t n = g.size();
  Goal goal;
  goal.target = std::max(1, options.min_palette);
  goal.cap = options.max_palette > 0 ? std::min(options.max_palette, kMaxPalette)
                                     : std::min<int>(static_cast<int>(n), kMaxPalette);
  if (options.unique_endpoints && n >= 2) {
    goal.unique_first = true;
    goal.unique_last = true;
  }
  const Space space = build_space(g, k);
  std::vector<int> bound(n + 1);
  std::iota(bound.begin(), bound.end(), 0);
  Shared shared;
  std::uint64_t count = 0;
  Search search(space, bound, goal, shared);
  auto on_leaf = [&](std::span<const Color> colors) {
    ++count;
    visit(Coloring(g, std::vector<Color>(colors.begin(), colors.end())));
    return false;
  };
  auto never = [](std::span<const Color>) { return false; };
  search.dfs(0, on_leaf, n, never);
  return count;
}

void clear_solver_cache() {
  std::lock_guard lock(memo_mutex);
  interval_memo.clear();
}

}  // namespace awtk
