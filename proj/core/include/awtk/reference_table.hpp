#pragma once

#include <optional>
#include <vector>

namespace awtk::reference {

// Published values of aw([n],k) for 3 <= n <= 25 and 3 <= k <= (n+3)/2.
// Used only to diff computed results against; nothing computes from these.
inline const std::vector<std::vector<int>>& published_rows() {
  static const std::vector<std::vector<int>> rows = {
      {3},
      {4},
      {4, 5},
      {4, 6},
      {4, 6, 7},
      {5, 6, 8},
      {4, 7, 8, 9},
      {5, 8, 9, 10},
      {5, 8, 9, 10, 11},
      {5, 8, 10, 11, 12},
      {5, 8, 11, 11, 12, 13},
      {5, 8, 11, 12, 13, 14},
      {5, 9, 11, 13, 14, 14, 15},
      {5, 9, 12, 13, 15, 15, 16},
      {5, 9, 13, 13, 15, 16, 16, 17},
      {5, 10, 14, 14, 16, 17, 17, 18},
      {5, 10, 14, 15, 17, 17, 18, 18, 19},
      {5, 10, 14, 16, 17, 18, 19, 19, 20},
      {5, 11, 14, 16, 17, 19, 20, 20, 20, 21},
      {6, 12, 14, 17, 18, 20, 21, 21, 21, 22},
      {6, 12, 14, 17, 19, 20, 21, 22, 22, 22, 23},
      {6, 12, 15, 18, 20, 20, 22, 23, 23, 23, 24},
      {6, 12, 15, 19, 21, 21, 23, 23, 24, 24, 24, 25},
  };
  return rows;
}

inline constexpr int kPublishedMinN = 3;
inline constexpr int kPublishedMaxN = 25;

/// Largest k in the table's row n.
inline constexpr int published_max_k(int n) { return (n + 3) / 2; }

inline std::optional<int> published(int n, int k) {
  if (n < kPublishedMinN || n > kPublishedMaxN || k < 3 || k > published_max_k(n)) {
    return std::nullopt;
  }
  return published_rows()[static_cast<std::size_t>(n - kPublishedMinN)][static_cast<std::size_t>(k - 3)];
}

}  // namespace awtk::reference
