#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "awtk/coloring.hpp"
#include "awtk/verify.hpp"

namespace awtk {

struct DichotomyReport {
  long long n = 0;
  std::uint64_t examined = 0;
  /// Indexed by DichotomyBranch.
  std::array<std::uint64_t, 3> branches{};
  std::vector<Coloring> failures;

  std::uint64_t count(DichotomyBranch b) const {
    return branches[static_cast<std::size_t>(b)];
  }
};

/// Run dichotomy_holds on every exact rainbow-3-AP-free coloring of [n]
/// whose endpoints are uniquely colored. Requires n >= 2.
DichotomyReport exhaustive_dichotomy(long long n);

}  // namespace awtk
