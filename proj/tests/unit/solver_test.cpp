#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "awtk/errors.hpp"
#include "awtk/solver.hpp"
#include "awtk/verify.hpp"
#include "oracles.hpp"

using namespace awtk;

namespace {

std::vector<Color> ids(const Coloring& c) { return {c.assignment().begin(), c.assignment().end()}; }

Coloring on_interval(std::vector<Color> a) {
  const auto n = static_cast<long long>(a.size());
  return Coloring(GroupInstance::interval(n), std::move(a));
}

struct StopEnumeration {};

// First coloring the ordered enumeration reaches with exactly `palette`
// colors, i.e. the lexicographically smallest canonical one.
std::optional<Coloring> first_with_palette(const GroupInstance& g, int palette) {
  std::optional<Coloring> first;
  EnumerationOptions opts;
  opts.min_palette = palette;
  opts.max_palette = palette;
  try {
    for_each_rainbow_free(g, 3, opts, [&](const Coloring& c) {
      first = c;
      throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
  return first;
}

void expect_valid_witness(const SolverOutcome& o, const GroupInstance& g, int k) {
  ASSERT_TRUE(o.witness);
  EXPECT_EQ(o.witness->group(), g);
  EXPECT_EQ(o.witness->palette(), o.aw_value - 1);
  EXPECT_TRUE(o.witness->is_canonical());
  EXPECT_TRUE(is_rainbow_free(*o.witness, k));
  if (o.unitary) EXPECT_TRUE(o.witness->is_unitary());
}

}  // namespace

TEST(Solver, PaletteExamples) {
  EXPECT_EQ(max_rainbow_free_palette(GroupInstance::interval(9), 3, false).r_max, 3);
  auto two = max_rainbow_free_palette(GroupInstance::interval(2), 3, false);
  EXPECT_EQ(two.r_max, 2);
  EXPECT_EQ(ids(two.witness), (std::vector<Color>{1, 2}));
  EXPECT_EQ(max_rainbow_free_palette(GroupInstance::cyclic(5), 3, false).r_max, 2);
  EXPECT_THROW(max_rainbow_free_palette(GroupInstance::interval(5), 2, false), std::invalid_argument);
}

TEST(Solver, AwExamples) {
  for (auto [g, k, expect] : {std::tuple{GroupInstance::interval(17), 5, 13},
                              std::tuple{GroupInstance::interval(25), 3, 6},
                              std::tuple{GroupInstance::cyclic(9), 3, 4},
                              std::tuple{GroupInstance::interval(1), 3, 2}}) {
    auto o = aw(g, k);
    EXPECT_EQ(o.aw_value, expect) << g.name() << " k=" << k;
    EXPECT_FALSE(o.unitary);
    expect_valid_witness(o, g, k);
  }
}

TEST(Solver, AwUnitaryExamples) {
  for (auto [n, expect] : {std::pair{9, 4}, std::pair{2, 3}, std::pair{14, 5}}) {
    auto g = GroupInstance::interval(n);
    auto o = aw_u(g, 3);
    EXPECT_EQ(o.aw_value, expect) << "n=" << n;
    EXPECT_TRUE(o.unitary);
    expect_valid_witness(o, g, 3);
  }
}

TEST(Solver, MergeColors) {
  EXPECT_EQ(ids(merge_colors(on_interval({1, 2, 3}), 2, 3)), (std::vector<Color>{1, 2, 2}));
  EXPECT_EQ(ids(merge_colors(on_interval({1, 2, 3, 1}), 3, 1)), (std::vector<Color>{1, 2, 1, 1}));
  EXPECT_EQ(ids(merge_colors(on_interval({1, 2}), 1, 2)), (std::vector<Color>{1, 1}));
  EXPECT_THROW(merge_colors(on_interval({1, 2}), 1, 1), std::invalid_argument);
  EXPECT_THROW(merge_colors(on_interval({1, 2}), 1, 3), std::invalid_argument);
}

TEST(SolverProperty, MatchesNaiveOracle) {
  for (int n = 1; n <= 10; ++n) {
    for (bool cyclic : {false, true}) {
      for (int k : {3, 4}) {
        for (bool unitary : {false, true}) {
          GroupInstance g(cyclic ? GroupKind::Cyclic : GroupKind::Interval, n);
          auto expect = oracle::max_palette(n, cyclic, k, unitary);
          auto got = max_rainbow_free_palette(g, k, unitary);
          ASSERT_EQ(got.r_max, expect.r_max) << g.name() << " k=" << k << " u=" << unitary;
          EXPECT_EQ(ids(got.witness), expect.witness) << g.name() << " k=" << k << " u=" << unitary;
        }
      }
    }
  }
}

TEST(SolverProperty, EnumerationCountsMatchOracle) {
  // With k > n every partition qualifies, giving the Bell numbers.
  const std::vector<std::uint64_t> bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    auto count = for_each_rainbow_free(GroupInstance::interval(n), std::max(3, n + 1), {}, [](const Coloring&) {});
    EXPECT_EQ(count, bell[static_cast<std::size_t>(n)]);
  }
  for (int n = 1; n <= 10; ++n) {
    for (bool cyclic : {false, true}) {
      std::uint64_t expect = 0;
      oracle::for_each_partition(n, [&](const std::vector<int>& s) {
        if (!oracle::has_rainbow(s, cyclic, 3)) ++expect;
      });
      std::vector<Color> prev;
      GroupInstance g(cyclic ? GroupKind::Cyclic : GroupKind::Interval, n);
      auto count = for_each_rainbow_free(g, 3, {}, [&](const Coloring& c) {
        auto cur = ids(c);
        EXPECT_TRUE(prev.empty() || prev < cur);
        EXPECT_TRUE(c.is_canonical());
        prev = cur;
      });
      EXPECT_EQ(count, expect) << g.name();
    }
  }
}

TEST(SolverProperty, EveryPaletteBelowMaximumIsReachable) {
  for (int n = 3; n <= 20; ++n) {
    auto g = GroupInstance::interval(n);
    Coloring c = max_rainbow_free_palette(g, 3, false).witness;
    while (c.palette() > 1) {
      c = merge_colors(c, 1, c.palette());
      EXPECT_TRUE(is_rainbow_free(c, 3)) << to_text(c);
    }
  }
}

TEST(SolverProperty, DeterministicAcrossWorkerCounts) {
  const std::vector<std::tuple<GroupInstance, int, bool>> cases = {
      {GroupInstance::interval(22), 3, false}, {GroupInstance::interval(21), 3, true},
      {GroupInstance::interval(18), 6, false}, {GroupInstance::cyclic(24), 3, false},
      {GroupInstance::cyclic(17), 3, false},   {GroupInstance::cyclic(15), 4, true}};
  for (const auto& [g, k, unitary] : cases) {
    std::optional<SolverOutcome> first;
    for (unsigned workers : {1u, 2u, 4u, 1u}) {
      clear_solver_cache();
      SolverOptions opts;
      opts.workers = workers;
      auto o = unitary ? aw_u(g, k, opts) : aw(g, k, opts);
      if (!first) {
        first = o;
        continue;
      }
      EXPECT_EQ(o.aw_value, first->aw_value) << g.name() << " workers=" << workers;
      EXPECT_EQ(o.witness, first->witness) << g.name() << " workers=" << workers;
    }
  }
}

TEST(SolverProperty, UnitaryNeverBelowPlain) {
  for (int n = 3; n <= 16; ++n) {
    for (int k = 3; k <= 5; ++k) {
      for (auto g : {GroupInstance::interval(n), GroupInstance::cyclic(n)}) {
        EXPECT_GE(aw_u(g, k).aw_value, aw(g, k).aw_value) << g.name() << " k=" << k;
      }
    }
  }
}

TEST(Solver, PrimeWitnessIsLexFirst) {
  for (long long p : {17, 23, 41}) {
    auto g = GroupInstance::cyclic(p);
    auto o = aw(g, 3);
    expect_valid_witness(o, g, 3);
    auto first = first_with_palette(g, o.aw_value - 1);
    ASSERT_TRUE(first) << g.name();
    EXPECT_EQ(*o.witness, *first) << g.name();
    EXPECT_FALSE(first_with_palette(g, o.aw_value)) << g.name();
  }
}

TEST(Solver, TimeoutIsReported) {
  SolverOptions opts;
  opts.timeout = std::chrono::milliseconds(1);
  EXPECT_THROW(aw(GroupInstance::cyclic(79), 3, opts), SolverTimeout);
}
