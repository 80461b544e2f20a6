#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "colorgroups/automorphisms.h"
#include "colorgroups/coloring_group.h"
#include "fixtures.h"

using namespace colorgroups;

TEST(Generators, ReadOffColorClasses) {
  auto taus = generators(fixtures::gl32_tree());
  ASSERT_EQ(taus.size(), 3u);
  EXPECT_EQ(taus[0], Permutation::parse_cycles("(1 2)(3 4)", 7));
  EXPECT_EQ(taus[1], Permutation::parse_cycles("(2 3)(5 6)", 7));
  EXPECT_EQ(taus[2], Permutation::parse_cycles("(0 1)(2 5)", 7));

  auto p4 = generators(EdgeColoredGraph::path({1, 2, 1}));
  EXPECT_EQ(p4[0], Permutation::parse_cycles("(0 1)(2 3)", 4));
  EXPECT_EQ(p4[1], Permutation::parse_cycles("(1 2)", 4));
  for (const auto& t : p4) EXPECT_TRUE(t.is_involution());
}

TEST(Analyze, Gl32Tree) {
  auto r = analyze(fixtures::gl32_tree());
  EXPECT_EQ(r.order, 168);
  EXPECT_TRUE(r.primitive);
  EXPECT_EQ(r.aut_order, 1u);
  EXPECT_FALSE(r.vertex_coloring.has_value());
  ASSERT_TRUE(r.size_bound.has_value());
  EXPECT_TRUE(r.size_bound->holds);
  EXPECT_EQ(r.size_bound->bound_string(), "49");
  ASSERT_TRUE(r.long_cycle_type.has_value());
  EXPECT_EQ(r.long_cycle_type->parts, std::vector<std::size_t>{7});
  auto j = to_json(r);
  EXPECT_EQ(j.at("order"), 168);
  EXPECT_EQ(j.at("primitive"), true);
  EXPECT_TRUE(j.at("imprimitive_vertex_coloring").is_null());
}

TEST(Analyze, ImprimitivePath) {
  auto g = fixtures::imprimitive_path15();
  auto r = analyze(g);
  EXPECT_FALSE(r.primitive);
  ASSERT_TRUE(r.vertex_coloring.has_value());
  EXPECT_EQ(r.vertex_coloring->class_count(), 5u);
  for (const auto& c : r.vertex_coloring->classes()) EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(check_vertex_coloring(g, *r.vertex_coloring).ok());
  EXPECT_EQ(r.toggle_clean, false);
}

TEST(Analyze, DihedralPaths) {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto r = analyze(construction(ConstructionKind::dihedral, n));
    EXPECT_EQ(r.order, 2 * n);
  }
}

TEST(ImprimitiveVertexColoring, ThreeRowTree) {
  auto g = fixtures::three_row_tree();
  auto group = coloring_group(g);
  EXPECT_EQ(group.order(), 6912);
  BlockSystem rows{{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}};
  auto systems = group.block_systems();
  EXPECT_NE(std::find(systems.begin(), systems.end(), rows), systems.end());
  EXPECT_TRUE(check_vertex_coloring(g, vertex_coloring_from_blocks(g, rows)).ok());
  EXPECT_TRUE(imprimitive_vertex_coloring(g).has_value());
}

TEST(ImprimitiveVertexColoring, AbsentForPrimitiveAndSmallPath) {
  EXPECT_FALSE(imprimitive_vertex_coloring(fixtures::gl32_tree()).has_value());
  auto p4 = EdgeColoredGraph::path({1, 2, 1});
  auto nu = imprimitive_vertex_coloring(p4);
  ASSERT_TRUE(nu.has_value());
  EXPECT_EQ(nu->classes(), (std::vector<std::vector<Vertex>>{{0, 3}, {1, 2}}));
  EXPECT_THROW(imprimitive_vertex_coloring(EdgeColoredGraph(3, 1, {{0, 1, 1}})), std::domain_error);
}

TEST(ImprimitiveVertexColoring, ChecksRejectBadColorings) {
  auto p4 = EdgeColoredGraph::path({1, 2, 1});
  EXPECT_FALSE(check_vertex_coloring(p4, {{1, 1, 2, 2}}).condition_i);
  EXPECT_FALSE(check_vertex_coloring(p4, {{1, 2, 3, 4}}).condition_ii);
  EXPECT_FALSE(check_vertex_coloring(p4, {{1, 1, 1, 1}}).condition_ii);
}

TEST(LongCycle, RandomForests) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng() % 11;
    auto g = fixtures::random_proper_coloring(n, fixtures::random_forest_edges(n, rng), 3, rng);
    auto order = all_colors(g);
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_TRUE(long_cycle_check(g, order).matches());
    }
  }
}

TEST(LongCycle, SmallCases) {
  auto two = EdgeColoredGraph(4, 1, {{0, 1, 1}, {2, 3, 1}});
  EXPECT_EQ(long_cycle_check(two, {1}).product.parts, (std::vector<std::size_t>{2, 2}));
  auto mixed = EdgeColoredGraph(5, 2, {{0, 1, 1}, {1, 2, 2}, {3, 4, 1}});
  EXPECT_EQ(long_cycle_check(mixed, {2, 1}).product.parts, (std::vector<std::size_t>{3, 2}));
  EXPECT_THROW(long_cycle_check(mixed, {1}), std::invalid_argument);
  EXPECT_THROW(long_cycle_check(EdgeColoredGraph(3, 3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}), {1, 2, 3}),
               std::invalid_argument);
}

TEST(SizeBound, TotientAndExamples) {
  EXPECT_EQ(euler_totient(1), 1u);
  EXPECT_EQ(euler_totient(7), 6u);
  EXPECT_EQ(euler_totient(9), 6u);
  EXPECT_EQ(euler_totient(12), 4u);
  auto b = size_bound_check(fixtures::table_tree_648());
  EXPECT_EQ(b.bound_string(), "27");
  EXPECT_TRUE(b.holds);
  EXPECT_THROW(size_bound_check(EdgeColoredGraph::path({1, 2, 1})), std::invalid_argument);
}

TEST(TreeCentralizer, ReflectiveTree) {
  auto t = tree_centralizer_check(fixtures::reflective_tree12());
  EXPECT_EQ(t.aut_order, 2u);
  ASSERT_TRUE(t.signed_embedding.has_value());
  EXPECT_EQ(t.signed_embedding->m, 6u);
  EXPECT_TRUE(t.signed_embedding->divides);
  EXPECT_TRUE(t.ok());
}

TEST(TreeCentralizer, OddTreesAreRigid) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 3 + 2 * (rng() % 5);
    auto g = fixtures::random_proper_coloring(n, fixtures::random_tree_edges(n, rng), 3, rng);
    EXPECT_EQ(tree_centralizer_check(g).aut_order, 1u);
  }
}

TEST(SymmetricEdgeWitness, ForcesSymmetricGroup) {
  for (const auto& g : {fixtures::symmetric_edge_path10(), construction(ConstructionKind::symmetric, 10),
                        EdgeColoredGraph::path({1, 2, 3, 4, 5, 6})}) {
    auto w = symmetric_edge_theorem_check(g);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->ok());
    EXPECT_EQ(coloring_group(g).order(), factorial(g.vertex_count()));
  }
  EXPECT_FALSE(symmetric_edge_theorem_check(EdgeColoredGraph::path({1, 2, 1, 2})).has_value());
}

TEST(RestrictedTrees, Report) {
  auto gl = restricted_tree_report(fixtures::gl32_tree());
  auto full = std::find_if(gl.begin(), gl.end(), [](const RestrictedTree& r) { return r.colors.size() == 3; });
  ASSERT_NE(full, gl.end());
  EXPECT_EQ(full->m, 7u);
  EXPECT_EQ(full->n_minus_m, 0u);

  auto p10 = restricted_tree_report(EdgeColoredGraph::path({1, 2, 1, 3, 1, 2, 1, 3, 1}));
  EXPECT_TRUE(std::none_of(p10.begin(), p10.end(), [](const RestrictedTree& r) {
    return r.colors == std::vector<Color>{1, 2};
  }));
}

TEST(Constructions, StandardFamilies) {
  EXPECT_EQ(coloring_group(construction(ConstructionKind::alternating, 9)).order(), factorial(9) / 2);
  EXPECT_EQ(construction(ConstructionKind::alternating, 9), EdgeColoredGraph::path({1, 2, 3, 4, 1, 2, 3, 4}));
  EXPECT_EQ(coloring_group(construction(ConstructionKind::alternating, 7)).order(), factorial(7) / 2);
  EXPECT_EQ(coloring_group(construction(ConstructionKind::dihedral, 10)).order(), 20);
  EXPECT_EQ(construction(ConstructionKind::symmetric, 10),
            EdgeColoredGraph::path({1, 2, 1, 2, 1, 2, 1, 2, 3}));
  EXPECT_EQ(coloring_group(construction(ConstructionKind::symmetric, 10)).order(), factorial(10));
  EXPECT_THROW(construction(ConstructionKind::alternating, 5), std::invalid_argument);
  EXPECT_THROW(construction(ConstructionKind::alternating, 8), std::invalid_argument);
}

TEST(Constructions, SignedPermutations) {
  auto b4 = construction(ConstructionKind::signed_permutations, 4);
  EXPECT_TRUE(is_valid(b4));
  EXPECT_TRUE(is_tree(b4));
  EXPECT_EQ(b4.vertex_count(), 8u);
  EXPECT_EQ(coloring_group(b4).order(), 384);
  // Two 5-vertex stars joined at their centers: 10 vertices, order 2^5 * 5!.
  auto b5 = construction(ConstructionKind::signed_permutations, 5);
  EXPECT_EQ(b5.vertex_count(), 10u);
  EXPECT_EQ(coloring_group(b5).order(), 3840);
  EXPECT_EQ(tree_centralizer_check(b5).aut_order, 2u);
}
