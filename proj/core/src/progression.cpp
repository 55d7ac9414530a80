#include "awtk/progression.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace awtk {

namespace {

void require_length(int k) {
  if (k < 3) throw std::invalid_argument("progression length k must be >= 3");
}

struct VectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (Element x : v) {
      h ^= std::hash<Element>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace

bool Progression::contains(Element x) const noexcept {
  return std::find(elements.begin(), elements.end(), x) != elements.end();
}

std::vector<Element> Progression::as_set() const {
  auto sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Progression make_progression(const GroupInstance& g, Element start,
                             long long difference, int k) {
  Progression p{start, difference, {}};
  p.elements.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Element x = start + difference * i;
    if (!g.is_interval()) x %= g.order();
    p.elements.push_back(x);
  }
  return p;
}

std::vector<ApSpec> ap_specs(const GroupInstance& g, int k) {
  require_length(k);
  const long long n = g.order();
  std::vector<ApSpec> specs;
  if (g.is_interval()) {
    for (long long d = 1; d * (k - 1) <= n - 1; ++d) {
      for (Element a = 1; a + d * (k - 1) <= n; ++a) specs.push_back({a, d});
    }
    return specs;
  }
  std::unordered_set<std::vector<Element>, VectorHash> seen;
  for (long long d = 1; d <= n / 2; ++d) {
    // a + i*d repeats within k terms iff the order of d is below k.
    if (n / std::gcd(n, d) < k) continue;
    for (Element a = 0; a < n; ++a) {
      auto key = make_progression(g, a, d, k).as_set();
      if (seen.insert(std::move(key)).second) specs.push_back({a, d});
    }
  }
  return specs;
}

std::vector<Progression> enumerate_aps(const GroupInstance& g, int k) {
  std::vector<Progression> out;
  for (auto [a, d] : ap_specs(g, k)) out.push_back(make_progression(g, a, d, k));
  return out;
}

std::vector<Progression> aps_through(const GroupInstance& g, int k,
                                     Element x) {
  (void)g.index_of(x);
  std::vector<Progression> out;
  for (auto& p : enumerate_aps(g, k)) {
    if (p.contains(x)) out.push_back(std::move(p));
  }
  return out;
}

long long interval_ap_count(long long n, int k) {
  require_length(k);
  long long total = 0;
  for (long long d = 1; d * (k - 1) <= n - 1; ++d) total += n - (k - 1) * d;
  return total;
}

ApIndex::ApIndex(const GroupInstance& g, int k)
    : group_(g), k_(k), progressions_(enumerate_aps(g, k)) {
  std::vector<std::size_t> counts(g.size(), 0);
  for (const auto& p : progressions_) {
    for (Element x : p.elements) ++counts[g.index_of(x)];
  }
  offsets_.assign(g.size() + 1, 0);
  std::partial_sum(counts.begin(), counts.end(), offsets_.begin() + 1);
  incidences_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t id = 0; id < progressions_.size(); ++id) {
    const auto& p = progressions_[id];
    for (int pos = 0; pos < p.length(); ++pos) {
      auto slot = fill[g.index_of(p.elements[static_cast<std::size_t>(pos)])]++;
      incidences_[slot] = {id, pos};
    }
  }
}

std::span<const ApIndex::Incidence> ApIndex::incidences(Element x) const {
  auto i = group_.index_of(x);
  return std::span<const Incidence>(incidences_).subspan(
      offsets_[i], offsets_[i + 1] - offsets_[i]);
}

}  // namespace awtk
