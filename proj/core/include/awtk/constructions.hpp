#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "awtk/coloring.hpp"
#include "awtk/verify.hpp"

namespace awtk {

/// Coloring of [n], n = 3h - s with s in {0,1,2}, from a unitary
/// rainbow-3-AP-free coloring `base` of [h]: x = 1 (mod 3) takes
/// base((x+2)/3), everything else a fresh color palette(base)+1.
/// Throws PreconditionViolation if `base` does not qualify.
Coloring construct_c1(long long n, const Coloring& base);

/// Coloring of [n], n = 3h - s with s in {1,2}: x = 0 (mod 3) takes a base
/// color, everything else a fresh one. `base` covers either [h-1] (then
/// 3j takes base(j)) or [h] (then 3j takes base(j+1) when the class of h is
/// the only singleton class of base, base(j) otherwise).
Coloring construct_c2(long long n, const Coloring& base);

/// Unitary rainbow-3-AP-free coloring of [n] with f(n)-1 colors, built
/// recursively from c1 and c2.
Coloring construct_extremal(long long n);

/// Coloring of [7q+1]: endpoints get their own colors, alpha sits on
/// q+1, 2q+1, 4q+1 and beta on 3q+1, 5q+1, 6q+1. The gaps between these
/// anchors mirror one another; position x with s = (x-1) mod 2q takes the
/// filler color of s, or of 2q-s when s > q. The result is always special
/// but not necessarily rainbow-free. Throws PreconditionViolation unless
/// `filler` is a rainbow-3-AP-free coloring of Z_2q.
Coloring canonical_special(long long q, const Coloring& filler);

struct BehrendParams {
  int dimension = 0;
  int digit_bound = 0;  // digits lie in [0, digit_bound)
  long long base = 0;   // 2*digit_bound - 1, so doubling never carries
  /// Squared norm of the chosen sphere, or -1 for the whole digit box
  /// (only AP-free when digit_bound == 2).
  long long shell = 0;
  friend bool operator==(const BehrendParams&, const BehrendParams&) = default;
};

struct BehrendResult {
  ApFreeSet set;
  BehrendParams params;
};

/// Largest 3-AP-free subset of [n] obtainable from a single sphere (or the
/// binary box) in Behrend's digit construction, over all parameters.
BehrendResult behrend_set(long long n);

/// Add 1, 2, ..., n in turn whenever no 3-AP forms.
ApFreeSet greedy_ap_free_set(long long n);

/// Members of b get distinct colors in increasing order; non-members share
/// one more color. Returned only if the result has no rainbow k-AP.
std::optional<Coloring> lower_bound_coloring(long long n, const ApFreeSet& b, int k);

}  // namespace awtk
