#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "awtk/coloring.hpp"
#include "awtk/group.hpp"

using namespace awtk;

namespace {

std::vector<Color> ids(const Coloring& c) { return {c.assignment().begin(), c.assignment().end()}; }

Coloring on_interval(std::vector<Color> a) {
  const auto n = static_cast<long long>(a.size());
  return Coloring(GroupInstance::interval(n), std::move(a));
}

std::set<std::vector<Element>> partition_of(const Coloring& c) {
  std::set<std::vector<Element>> out;
  for (auto& [color, members] : color_classes(c)) out.insert(members);
  return out;
}

}  // namespace

TEST(Group, ElementsAndNames) {
  auto g = GroupInstance::interval(5);
  EXPECT_EQ(g.first_element(), 1);
  EXPECT_EQ(g.last_element(), 5);
  EXPECT_EQ(g.index_of(3), 2u);
  EXPECT_THROW(g.index_of(0), std::out_of_range);
  EXPECT_EQ(g.name(), "[5]");

  auto z = GroupInstance::cyclic(9);
  EXPECT_EQ(z.first_element(), 0);
  EXPECT_EQ(z.last_element(), 8);
  EXPECT_EQ(z.name(), "Z9");
  EXPECT_THROW(GroupInstance::cyclic(0), std::invalid_argument);
  EXPECT_EQ(parse_group_kind("cyclic"), GroupKind::Cyclic);
  EXPECT_THROW(parse_group_kind("torus"), std::invalid_argument);
}

TEST(Coloring, RejectsNonExact) {
  EXPECT_THROW(on_interval({1, 3, 3}), std::invalid_argument);
  EXPECT_THROW(on_interval({0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(Coloring(GroupInstance::interval(3), {1, 2}), std::invalid_argument);
  EXPECT_EQ(on_interval({2, 1, 1}).palette(), 2);
}

TEST(Coloring, Canonicalize) {
  EXPECT_EQ(ids(canonicalize(on_interval({2, 1, 1}))), (std::vector<Color>{1, 2, 2}));
  EXPECT_EQ(ids(canonicalize(on_interval({1, 2, 2}))), (std::vector<Color>{1, 2, 2}));
  EXPECT_EQ(ids(canonicalize(on_interval({3, 1, 2, 1}))), (std::vector<Color>{1, 2, 3, 2}));
  EXPECT_TRUE(canonicalize(on_interval({3, 1, 2, 1})).is_canonical());
  EXPECT_FALSE(on_interval({3, 1, 2, 1}).is_canonical());
}

TEST(Coloring, ColorClasses) {
  auto c = color_classes(on_interval({1, 2, 2}));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1], (std::vector<Element>{1}));
  EXPECT_EQ(c[2], (std::vector<Element>{2, 3}));
  EXPECT_EQ(color_classes(on_interval({1, 1, 1, 1}))[1], (std::vector<Element>{1, 2, 3, 4}));

  auto special = color_classes(on_interval({1, 2, 2, 3, 2, 3, 3, 4}));
  EXPECT_EQ(special[2], (std::vector<Element>{2, 3, 5}));
  EXPECT_EQ(special[3], (std::vector<Element>{4, 6, 7}));
}

TEST(Coloring, UnitaryAndSizes) {
  auto c = on_interval({1, 2, 2, 3, 2});
  EXPECT_EQ(c.class_sizes(), (std::vector<std::size_t>{1, 3, 1}));
  EXPECT_TRUE(c.is_unitary());
  EXPECT_FALSE(on_interval({1, 2, 2, 1}).is_unitary());
}

TEST(Coloring, TextRoundTrip) {
  Coloring c(GroupInstance::cyclic(6), {1, 2, 1, 3, 3, 2});
  EXPECT_EQ(to_text(c), "group=cyclic n=6\n1 2 1 3 3 2\n");
  EXPECT_EQ(parse_coloring(to_text(c)), c);
  EXPECT_THROW(parse_coloring("group=interval n=3\n1 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_coloring("group=interval n=3\n1 3 3\n"), std::invalid_argument);
  EXPECT_THROW(parse_coloring("grp=interval n=3\n1 2 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_coloring("group=ring n=3\n1 2 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_coloring(""), std::invalid_argument);
}

TEST(ColoringProperty, CanonicalizeIsIdempotentAndKeepsClasses) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const int r = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<Color> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i < r ? i + 1 : 0;
    for (auto& x : a) {
      if (x == 0) x = std::uniform_int_distribution<int>(1, r)(rng);
    }
    std::shuffle(a.begin(), a.end(), rng);
    Coloring c = on_interval(a);
    Coloring once = canonicalize(c);
    EXPECT_EQ(canonicalize(once), once);
    EXPECT_TRUE(once.is_canonical());
    EXPECT_EQ(partition_of(once), partition_of(c));
    EXPECT_EQ(once.palette(), r);
  }
}

TEST(ColoringProperty, NonSurjectiveAssignmentsRejected) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    const int r = std::uniform_int_distribution<int>(2, n)(rng);
    const int missing = std::uniform_int_distribution<int>(1, r - 1)(rng);
    std::vector<Color> a(static_cast<std::size_t>(n));
    for (auto& x : a) {
      do x = std::uniform_int_distribution<int>(1, r)(rng);
      while (x == missing);
    }
    a[0] = r;
    EXPECT_THROW(on_interval(a), std::invalid_argument);
  }
}
