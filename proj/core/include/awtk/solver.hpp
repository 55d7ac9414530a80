#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "awtk/coloring.hpp"
#include "awtk/group.hpp"

namespace awtk {

struct SolverOptions {
  /// Worker threads for the top-level branch split. Results do not depend
  /// on this value; only wall time and node counts do.
  unsigned workers = 1;
  /// Wall-clock budget for the whole call; SolverTimeout when exceeded.
  std::optional<std::chrono::milliseconds> timeout;
};

/// Maximum palette over exact rainbow-k-AP-free colorings, with the
/// lexicographically smallest canonical coloring attaining it.
struct PaletteResult {
  int r_max = 0;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
};

struct SolverOutcome {
  int aw_value = 0;
  std::optional<Coloring> witness;
  bool unitary = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Largest r admitting an exact (and, if `unitary`, unitary) coloring of g
/// with r colors and no rainbow k-AP. Groups without a k-AP give r = |G|.
PaletteResult max_rainbow_free_palette(const GroupInstance& g, int k,
                                       bool unitary,
                                       const SolverOptions& options = {});

SolverOutcome aw(const GroupInstance& g, int k, const SolverOptions& options = {});
SolverOutcome aw_u(const GroupInstance& g, int k, const SolverOptions& options = {});

/// Recolor class j as class i and re-canonicalize. Throws
/// std::invalid_argument unless i != j and both colors are in use.
Coloring merge_colors(const Coloring& c, Color i, Color j);

struct EnumerationOptions {
  /// Element 1 and element N each carry a color used nowhere else.
  bool unique_endpoints = false;
  int min_palette = 1;
  /// 0 means no cap.
  int max_palette = 0;
};

/// Visit every canonical exact coloring of g with no rainbow k-AP that
/// satisfies `options`, in lexicographic order. Returns the number visited.
std::uint64_t for_each_rainbow_free(
    const GroupInstance& g, int k, const EnumerationOptions& options,
    const std::function<void(const Coloring&)>& visit);

/// Drop the in-process memo of interval r_max values (benchmarks use this to
/// time cold solves).
void clear_solver_cache();

}  // namespace awtk
