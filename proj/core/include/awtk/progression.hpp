#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "awtk/group.hpp"

namespace awtk {

/// A k-term arithmetic progression {start + i*difference}, reduced mod n in
/// the cyclic case. Elements are listed in progression order.
struct Progression {
  Element start = 0;
  long long difference = 0;
  std::vector<Element> elements;

  int length() const noexcept { return static_cast<int>(elements.size()); }
  bool contains(Element x) const noexcept;
  /// The elements in ascending order (the set the progression denotes).
  std::vector<Element> as_set() const;

  friend bool operator==(const Progression&, const Progression&) = default;
};

Progression make_progression(const GroupInstance& g, Element start,
                             long long difference, int k);

/// (start, difference) of one progression set.
struct ApSpec {
  Element start;
  long long difference;
};

/// Every k-element AP set of `g` exactly once, ordered by difference then
/// start. Cyclic sets reachable from several (start, difference) pairs keep
/// the pair with the smallest difference, then smallest start; pairs that
/// revisit an element are dropped.
std::vector<ApSpec> ap_specs(const GroupInstance& g, int k);

std::vector<Progression> enumerate_aps(const GroupInstance& g, int k);

/// The progressions of enumerate_aps(g, k) containing x. Throws
/// std::out_of_range if x is not an element of g.
std::vector<Progression> aps_through(const GroupInstance& g, int k, Element x);

/// sum_{d=1}^{floor((n-1)/(k-1))} (n - (k-1) d).
long long interval_ap_count(long long n, int k);

/// Element -> (progression, position) incidence table over enumerate_aps.
class ApIndex {
 public:
  struct Incidence {
    std::size_t progression;
    int position;
  };

  ApIndex(const GroupInstance& g, int k);

  const GroupInstance& group() const noexcept { return group_; }
  int length() const noexcept { return k_; }
  std::span<const Progression> progressions() const noexcept {
    return progressions_;
  }
  std::span<const Incidence> incidences(Element x) const;
  std::size_t total_incidences() const noexcept { return incidences_.size(); }

 private:
  GroupInstance group_;
  int k_;
  std::vector<Progression> progressions_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidences_;
};

}  // namespace awtk
