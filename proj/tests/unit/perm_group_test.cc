#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "colorgroups/oracles.h"
#include "colorgroups/perm_group.h"

using colorgroups::BigInt;
using colorgroups::Permutation;
using colorgroups::PermutationGroup;
using colorgroups::Point;
namespace oracle = colorgroups::oracle;

namespace {

Permutation cyc(const char* text, std::size_t n) { return Permutation::parse_cycles(text, n); }

PermutationGroup gl32() {
  return PermutationGroup(7, {cyc("(1 2)(3 4)", 7), cyc("(2 3)(5 6)", 7), cyc("(0 1)(2 5)", 7)});
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

Permutation random_involution(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> points(n);
  std::iota(points.begin(), points.end(), Point{0});
  std::shuffle(points.begin(), points.end(), rng);
  std::uniform_int_distribution<std::size_t> pairs(1, n / 2);
  std::vector<std::vector<Point>> cycles;
  for (std::size_t i = 0, m = pairs(rng); i < m; ++i) cycles.push_back({points[2 * i], points[2 * i + 1]});
  return Permutation::from_cycles(n, cycles);
}

// Random small groups: a few involutions or a mix of arbitrary permutations.
std::vector<PermutationGroup> random_groups(std::size_t count, std::size_t max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PermutationGroup> out;
  while (out.size() < count) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_degree)(rng);
    std::size_t gens = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Permutation> g;
    bool involutions = rng() % 2;
    for (std::size_t i = 0; i < gens; ++i)
      g.push_back(involutions ? random_involution(n, rng) : random_permutation(n, rng));
    out.emplace_back(n, g);
  }
  return out;
}

}  // namespace

TEST(PermutationGroup, Gl32OrderAndPrimitivity) {
  auto g = gl32();
  EXPECT_EQ(g.order(), 168);
  EXPECT_TRUE(g.is_transitive());
  EXPECT_TRUE(g.is_primitive());
  EXPECT_FALSE(g.contains_alternating());
}

TEST(PermutationGroup, SmallExamples) {
  PermutationGroup swap(3, {cyc("(0 1)", 3)});
  EXPECT_EQ(swap.order(), 2);
  EXPECT_EQ(swap.orbits(), (std::vector<std::vector<Point>>{{0, 1}, {2}}));
  EXPECT_FALSE(swap.is_transitive());
  EXPECT_FALSE(swap.is_primitive());

  PermutationGroup c5(5, {cyc("(0 1 2 3 4)", 5)});
  EXPECT_TRUE(c5.is_primitive());
  EXPECT_TRUE(c5.is_abelian());

  PermutationGroup s5(5, {cyc("(0 1)", 5), cyc("(0 1 2 3 4)", 5)});
  EXPECT_EQ(s5.order(), 120);
  EXPECT_TRUE(s5.contains_alternating());

  PermutationGroup trivial(1, {});
  EXPECT_EQ(trivial.order(), 1);
}

TEST(PermutationGroup, PathFourBlocks) {
  PermutationGroup g(4, {cyc("(0 1)(2 3)", 4), cyc("(1 2)", 4)});
  EXPECT_FALSE(g.is_primitive());
  auto systems = g.block_systems();
  ASSERT_EQ(systems.size(), 1u);
  EXPECT_EQ(systems[0].blocks, (std::vector<std::vector<Point>>{{0, 3}, {1, 2}}));
  EXPECT_EQ(oracle::invariant_partitions(g), std::vector<std::vector<std::vector<Point>>>({{{0, 3}, {1, 2}}}));
}

TEST(PermutationGroup, OrderMatchesBruteForce) {
  for (const auto& g : random_groups(300, 8, 11)) {
    auto elements = oracle::brute_force_elements(g, 50'000);
    EXPECT_EQ(g.order(), BigInt(elements.size()));
    for (const auto& x : elements) ASSERT_TRUE(g.contains(x));
  }
}

TEST(PermutationGroup, RejectsNonMembers) {
  std::mt19937_64 rng(5);
  std::size_t rejected = 0;
  for (const auto& g : random_groups(200, 7, 12)) {
    if (g.order() == colorgroups::factorial(g.degree())) continue;
    auto elements = oracle::brute_force_elements(g);
    std::set<Permutation> set(elements.begin(), elements.end());
    for (int i = 0; i < 20; ++i) {
      Permutation x = random_permutation(g.degree(), rng);
      EXPECT_EQ(g.contains(x), set.count(x) == 1) << x.to_cycle_string();
      rejected += set.count(x) == 0;
    }
  }
  EXPECT_GT(rejected, 1000u);
}

TEST(PermutationGroup, RandomProductsAreMembers) {
  std::mt19937_64 rng(3);
  for (const auto& g : random_groups(50, 12, 13)) {
    if (g.generators().empty()) continue;
    for (int i = 0; i < 20; ++i) {
      Permutation x(g.degree());
      for (int j = 0; j < 15; ++j) x = x * g.generators()[rng() % g.generators().size()];
      EXPECT_TRUE(g.contains(x));
      EXPECT_TRUE(g.contains(g.random_element(rng)));
    }
  }
}

TEST(PermutationGroup, PrimitivityMatchesPartitionOracle) {
  std::size_t transitive_seen = 0;
  for (const auto& g : random_groups(400, 7, 14)) {
    auto invariant = oracle::invariant_partitions(g);
    if (g.is_transitive()) {
      ++transitive_seen;
      EXPECT_EQ(g.is_primitive(), invariant.empty());
      for (const auto& system : g.block_systems()) {
        EXPECT_TRUE(g.preserves(system.blocks));
        EXPECT_NE(std::find(invariant.begin(), invariant.end(), system.blocks), invariant.end());
      }
    } else {
      EXPECT_FALSE(g.is_primitive());
    }
  }
  EXPECT_GT(transitive_seen, 50u);
}

TEST(PermutationGroup, AlternatingContainmentMatchesThreeCycles) {
  for (const auto& g : random_groups(300, 6, 15)) {
    const std::size_t n = g.degree();
    bool all = true;
    for (Point a = 0; a < n && all; ++a)
      for (Point b = 0; b < n && all; ++b)
        for (Point c = 0; c < n && all; ++c)
          if (a != b && b != c && a != c) all = g.contains(Permutation::from_cycles(n, {{a, b, c}}));
    EXPECT_EQ(g.contains_alternating(), all);
  }
}

TEST(PermutationGroup, DerivedSubgroups) {
  PermutationGroup s4(4, {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
  EXPECT_EQ(s4.derived_subgroup().order(), 12);
  EXPECT_EQ(gl32().derived_subgroup().order(), 168);
  PermutationGroup d10(10, {cyc("(0 1)(2 3)(4 5)(6 7)(8 9)", 10), cyc("(1 2)(3 4)(5 6)(7 8)", 10)});
  EXPECT_EQ(d10.order(), 20);
  EXPECT_EQ(d10.derived_subgroup().order(), 5);
}

TEST(PermutationGroup, Fingerprints) {
  PermutationGroup d10(10, {cyc("(0 1)(2 3)(4 5)(6 7)(8 9)", 10), cyc("(1 2)(3 4)(5 6)(7 8)", 10)});
  auto f = colorgroups::fingerprint(d10);
  EXPECT_EQ(f.degree, 10u);
  EXPECT_EQ(f.order, 20);
  EXPECT_TRUE(f.transitive);
  EXPECT_FALSE(f.primitive);
  EXPECT_FALSE(f.abelian);

  auto t = colorgroups::fingerprint(PermutationGroup(1, {}));
  EXPECT_EQ(t.order, 1);
  EXPECT_TRUE(t.transitive);
  EXPECT_FALSE(t.primitive);
  EXPECT_TRUE(t.abelian);
  ASSERT_TRUE(t.derived_order.has_value());
  EXPECT_EQ(*t.derived_order, 1);
}
