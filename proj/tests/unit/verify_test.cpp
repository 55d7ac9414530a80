#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "awtk/dichotomy.hpp"
#include "awtk/errors.hpp"
#include "awtk/solver.hpp"
#include "awtk/verify.hpp"
#include "oracles.hpp"

using namespace awtk;

namespace {

Coloring on_interval(std::vector<Color> a) {
  const auto n = static_cast<long long>(a.size());
  return Coloring(GroupInstance::interval(n), std::move(a));
}

const std::vector<Color> kSpecial8 = {1, 2, 2, 3, 2, 3, 3, 4};

std::vector<Color> random_assignment(std::mt19937& rng, int n, int r) {
  std::vector<Color> a(static_cast<std::size_t>(n));
  std::iota(a.begin(), a.begin() + r, 1);
  for (int i = r; i < n; ++i) a[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(1, r)(rng);
  std::shuffle(a.begin(), a.end(), rng);
  return a;
}

}  // namespace

TEST(FindRainbow, Examples) {
  auto w = find_rainbow(on_interval({1, 2, 3}), 3);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->elements, (std::vector<Element>{1, 2, 3}));
  EXPECT_FALSE(find_rainbow(on_interval({1, 2, 2, 1}), 3));
  EXPECT_FALSE(find_rainbow(on_interval(kSpecial8), 3));

  EXPECT_FALSE(is_rainbow_free(on_interval({1, 2, 3}), 3));
  EXPECT_TRUE(is_rainbow_free(on_interval({1, 2, 2, 1}), 3));
  EXPECT_TRUE(is_rainbow_free(on_interval(kSpecial8), 3));

  EXPECT_THROW(find_rainbow(on_interval({1, 2, 3}), 2), std::invalid_argument);
}

TEST(FindRainbow, CyclicWrapsAround) {
  Coloring c(GroupInstance::cyclic(5), {1, 1, 1, 2, 3});
  auto w = find_rainbow(c, 3);
  ASSERT_TRUE(w);
  std::set<Color> seen;
  for (Element x : w->elements) seen.insert(c.color_of(x));
  EXPECT_EQ(seen.size(), 3u);
}

TEST(FindRainbowProperty, AgreesWithOracleAndWitnessChecks) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 3000; ++trial) {
    const bool cyclic = trial % 2;
    const int n = std::uniform_int_distribution<int>(1, 24)(rng);
    const int r = std::uniform_int_distribution<int>(1, std::min(n, 4))(rng);
    const int k = std::uniform_int_distribution<int>(3, 4)(rng);
    auto a = random_assignment(rng, n, r);
    Coloring c(GroupInstance(cyclic ? GroupKind::Cyclic : GroupKind::Interval, n), a);
    auto w = find_rainbow(c, k);
    ASSERT_EQ(w.has_value(), oracle::has_rainbow(a, cyclic, k)) << to_text(c);
    if (!w) continue;
    ASSERT_EQ(w->length(), k);
    std::set<Element> elems(w->elements.begin(), w->elements.end());
    std::set<Color> colors;
    for (Element x : w->elements) colors.insert(c.color_of(x));
    EXPECT_EQ(elems.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(colors.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(make_progression(c.group(), w->start, w->difference, k), *w);
  }
}

TEST(FindRainbowProperty, FullScanMatchesOracleOnLargeColorings) {
  std::mt19937 rng(5);
  for (int n : {200, 500, 1000}) {
    std::vector<Color> a(static_cast<std::size_t>(n), 2);
    a[0] = 1;
    EXPECT_TRUE(is_rainbow_free(on_interval(a), 3));
    a[static_cast<std::size_t>(n - 1)] = 3;
    EXPECT_EQ(is_rainbow_free(on_interval(a), 3), !oracle::has_rainbow(a, false, 3));
    a = random_assignment(rng, n, 3);
    EXPECT_EQ(is_rainbow_free(on_interval(a), 3), !oracle::has_rainbow(a, false, 3));
  }
}

TEST(RainbowProperty, PermutingLabelsKeepsVerdict) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 20)(rng);
    const int r = std::uniform_int_distribution<int>(1, std::min(n, 5))(rng);
    auto a = random_assignment(rng, n, r);
    std::vector<Color> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto b = a;
    for (auto& x : b) x = perm[static_cast<std::size_t>(x - 1)];
    EXPECT_EQ(is_rainbow_free(on_interval(a), 3), is_rainbow_free(on_interval(b), 3));
  }
}

TEST(RainbowProperty, MergingClassesKeepsRainbowFree) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 18)(rng);
    const int r = std::uniform_int_distribution<int>(2, std::min(n, 5))(rng);
    Coloring c = on_interval(random_assignment(rng, n, r));
    if (!is_rainbow_free(c, 3)) continue;
    ++checked;
    for (Color i = 1; i <= r; ++i) {
      for (Color j = 1; j <= r; ++j) {
        if (i == j) continue;
        Coloring m = merge_colors(c, i, j);
        EXPECT_EQ(m.palette(), r - 1);
        EXPECT_TRUE(is_rainbow_free(m, 3)) << to_text(c) << i << "<-" << j;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Special, Examples) {
  auto cert = is_special(on_interval(kSpecial8));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->q, 1);
  EXPECT_EQ(cert->alpha, 2);
  EXPECT_EQ(cert->beta, 3);
  EXPECT_EQ(cert->first_color, 1);
  EXPECT_EQ(cert->last_color, 4);

  EXPECT_FALSE(is_special(on_interval({1, 2, 2, 3, 2, 3, 3, 4, 4})));

  std::vector<Color> fifteen(15, 5);
  fifteen[0] = 1;
  fifteen[14] = 4;
  for (int x : {3, 5, 9}) fifteen[static_cast<std::size_t>(x - 1)] = 2;
  for (int x : {7, 11, 13}) fifteen[static_cast<std::size_t>(x - 1)] = 3;
  auto q2 = is_special(on_interval(fifteen));
  ASSERT_TRUE(q2);
  EXPECT_EQ(q2->q, 2);

  fifteen[1] = 2;  // alpha class now too large
  EXPECT_FALSE(is_special(on_interval(fifteen)));
  EXPECT_FALSE(is_special(Coloring(GroupInstance::cyclic(8), kSpecial8)));
}

TEST(Residues, Examples) {
  EXPECT_EQ(residue_color_count(on_interval({1, 2, 2}), 1), 1);
  EXPECT_EQ(residue_color_count(on_interval({1, 2, 3, 4}), 1), 2);
  EXPECT_EQ(residue_color_count(on_interval(kSpecial8), 2), 2);
  EXPECT_EQ(residue_color_count(on_interval(kSpecial8), 0), 2);
}

TEST(Dichotomy, Examples) {
  auto r = dichotomy_holds(on_interval(kSpecial8));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.branch, DichotomyBranch::Special);
  EXPECT_THROW(dichotomy_holds(on_interval({1, 2, 2, 2, 3})), PreconditionViolation);
  EXPECT_THROW(dichotomy_holds(on_interval({1, 2, 2, 1})), PreconditionViolation);
  EXPECT_THROW(dichotomy_holds(Coloring(GroupInstance::cyclic(8), kSpecial8)), PreconditionViolation);
}

TEST(Dichotomy, ExhaustiveSmallEvenN) {
  for (int n : {4, 6, 8, 10, 12}) {
    auto report = exhaustive_dichotomy(n);
    EXPECT_TRUE(report.failures.empty()) << "N=" << n;
    EXPECT_EQ(report.examined, oracle::count_dichotomy_inputs(n)) << "N=" << n;
    EXPECT_EQ(report.count(DichotomyBranch::Special) + report.count(DichotomyBranch::ResidueOne) +
                  report.count(DichotomyBranch::ResidueN),
              report.examined);
  }
}

TEST(Dichotomy, OddNHasNoQualifyingColorings) {
  for (int n : {3, 5, 7, 9, 11}) {
    EXPECT_EQ(exhaustive_dichotomy(n).examined, 0u) << "N=" << n;
    EXPECT_EQ(oracle::count_dichotomy_inputs(n), 0u) << "N=" << n;
  }
}

TEST(ApFree, Examples) {
  EXPECT_TRUE(is_ap_free({5, {1, 2, 4, 5}, 3}));
  EXPECT_FALSE(is_ap_free({3, {1, 2, 3}, 3}));
  EXPECT_TRUE(is_ap_free({3, {}, 3}));
  EXPECT_FALSE(is_ap_free({20, {1, 4, 7, 10}, 4}));
  EXPECT_TRUE(is_ap_free({20, {1, 4, 7, 11}, 4}));
  EXPECT_THROW(is_ap_free({3, {1, 5}, 3}), std::invalid_argument);
}

TEST(ApFreeProperty, AgreesWithOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const long long n = std::uniform_int_distribution<long long>(1, 60)(rng);
    std::vector<Element> members;
    for (Element x = 1; x <= n; ++x) {
      if (std::bernoulli_distribution(0.3)(rng)) members.push_back(x);
    }
    EXPECT_EQ(is_ap_free({n, members, 3}), oracle::ap3_free(members));
  }
}
