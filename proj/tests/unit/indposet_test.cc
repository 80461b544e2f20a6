#include <gtest/gtest.h>

#include <random>
#include <set>

#include "colorgroups/coloring_group.h"
#include "colorgroups/graph_io.h"
#include "colorgroups/indposet.h"
#include "corpora.h"
#include "fixtures.h"

using namespace colorgroups;

namespace {

Dag increasing_p3() { return Dag(3, {{1, 2}, {2, 3}}); }

constexpr VertexMask set_of(std::initializer_list<int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= VertexMask{1} << (v - 1);
  return m;
}

std::vector<Dag> small_corpus() {
  std::vector<Dag> out;
  for (std::size_t m = 0; m <= 4; ++m)
    for (auto& d : fixtures::all_dags(m)) out.push_back(std::move(d));
  std::mt19937_64 rng(10);
  for (auto& d : fixtures::random_small_dags(100, 10, rng)) out.push_back(std::move(d));
  return out;
}

}  // namespace

TEST(Dag, RejectsBadInput) {
  EXPECT_THROW(Dag(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Dag(2, {{1, 3}}), std::invalid_argument);
  EXPECT_THROW(Dag(2, {{1, 2}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(Dag(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
  EXPECT_EQ(fixtures::all_dags(3).size(), 25u);
}

TEST(Dag, InducedAndComponents) {
  Dag d(5, {{1, 2}, {4, 5}});
  EXPECT_FALSE(d.is_connected());
  EXPECT_EQ(d.components(), (std::vector<VertexMask>{set_of({1, 2}), set_of({3}), set_of({4, 5})}));
  std::vector<std::uint32_t> labels;
  auto sub = d.induced(set_of({2, 4, 5}), &labels);
  EXPECT_EQ(labels, (std::vector<std::uint32_t>{2, 4, 5}));
  EXPECT_EQ(sub.edges(), (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}}));
  EXPECT_TRUE(Dag(0, {}).is_connected());
}

TEST(GOrder, Reachability) {
  auto p3 = g_order(increasing_p3());
  EXPECT_TRUE(p3.greater(0, 1));
  EXPECT_TRUE(p3.greater(0, 2));
  EXPECT_FALSE(p3.greater(2, 0));
  EXPECT_EQ(p3.linear, (std::vector<std::uint32_t>{2, 1, 0}));
  EXPECT_EQ(p3.dual, (std::vector<std::uint32_t>{0, 1, 2}));

  auto diamond = g_order(Dag(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(diamond.below[0], set_of({2, 3, 4}));
  EXPECT_FALSE(diamond.greater(1, 2));
  EXPECT_FALSE(diamond.greater(2, 1));

  auto antichain = g_order(Dag(3, {}));
  for (auto below : antichain.below) EXPECT_EQ(below, 0u);
}

TEST(Tops, CompletionAndTightness) {
  auto d = increasing_p3();
  EXPECT_EQ(complete_to_top(d, 0, Side::as_down), (Top{0, set_of({1, 3})}));
  EXPECT_EQ(complete_to_top(d, set_of({2}), Side::as_up), (Top{set_of({3}), set_of({2})}));
  EXPECT_EQ(complete_to_top(Dag(1, {}), 0, Side::as_up), (Top{set_of({1}), 0}));
  EXPECT_THROW(complete_to_top(d, set_of({1, 2}), Side::as_down), std::invalid_argument);

  EXPECT_TRUE(is_tight(d, set_of({3}), set_of({2})));
  EXPECT_FALSE(is_tight(d, 0, set_of({3})));
  EXPECT_TRUE(is_tight(Dag(0, {}), 0, 0));
  EXPECT_FALSE(is_orthogonal_pair(d, set_of({1}), set_of({2})));
  EXPECT_TRUE(is_orthogonal_pair(d, set_of({2}), set_of({1})));
  EXPECT_FALSE(is_orthogonal_pair(d, set_of({1}), set_of({1})));
  EXPECT_THROW(is_tight(d, set_of({1}), set_of({2})), std::invalid_argument);
  EXPECT_EQ(to_string(Top{set_of({1, 3}), 0}), "({1,3}, {})");
}

namespace {

struct OracleComparison {
  bool completions_tight = true;
  bool completions_bijective = true;
  std::size_t dags = 0;
  std::size_t extra_pair_dags = 0;
};

OracleComparison compare_with_oracle(std::size_t m) {
  OracleComparison out;
  for (const auto& d : fixtures::all_dags(m)) {
    ++out.dags;
    auto order = g_order(d);
    auto sets = independent_sets(d);
    std::set<Top> oracle, by_down, by_up;
    for (auto down : sets)
      for (auto up : sets)
        if (is_orthogonal_pair(d, down, up) && is_tight(d, order, down, up)) oracle.insert({down, up});
    for (auto s : sets) {
      by_down.insert(complete_to_top(d, order, s, Side::as_down));
      by_up.insert(complete_to_top(d, order, s, Side::as_up));
    }
    if (by_down != by_up || by_down.size() != sets.size()) out.completions_bijective = false;
    for (const auto& t : by_down)
      if (!oracle.count(t)) out.completions_tight = false;
    if (oracle.size() != by_down.size()) ++out.extra_pair_dags;
  }
  return out;
}

}  // namespace

TEST(Tops, CompletionMatchesTightnessOracleUpToFourVertices) {
  for (std::size_t m = 0; m <= 4; ++m) {
    auto c = compare_with_oracle(m);
    EXPECT_TRUE(c.completions_tight);
    EXPECT_TRUE(c.completions_bijective);
    EXPECT_EQ(c.extra_pair_dags, 0u) << m << " vertices";
  }
}

// Single-element moves do not pin down a unique top on five vertices: for
// 2->1, 3->1, 1->4, 1->5 the pair ({4,5},{2,3}) survives every single move
// even though ({4,5},{1}) and ({1},{2,3}) are the completions of its halves.
TEST(Tops, SingleMoveTightnessAdmitsExtraPairsOnFiveVertices) {
  auto c = compare_with_oracle(5);
  EXPECT_TRUE(c.completions_tight);
  EXPECT_TRUE(c.completions_bijective);
  EXPECT_EQ(c.dags, 29281u);
  EXPECT_EQ(c.extra_pair_dags, 480u);

  Dag d(5, {{2, 1}, {3, 1}, {1, 4}, {1, 5}});
  EXPECT_TRUE(is_tight(d, set_of({4, 5}), set_of({2, 3})));
  EXPECT_EQ(complete_to_top(d, set_of({4, 5}), Side::as_down), (Top{set_of({4, 5}), set_of({1})}));
  EXPECT_EQ(complete_to_top(d, set_of({2, 3}), Side::as_up), (Top{set_of({1}), set_of({2, 3})}));
}

TEST(Flip, IncreasingPath) {
  auto d = increasing_p3();
  const Top bottom{0, set_of({1, 3})};
  const Top t32{set_of({3}), set_of({2})};
  EXPECT_EQ(flip(d, bottom, 3), t32);
  EXPECT_EQ(flip(d, t32, 2), (Top{set_of({2}), set_of({1})}));
  EXPECT_EQ(flip(d, bottom, 2), bottom);
  EXPECT_EQ(flip(d, bottom, 1), (Top{set_of({1}), set_of({3})}));
  EXPECT_EQ(flip(d, Top{set_of({2}), set_of({1})}, 1), (Top{set_of({1, 3}), 0}));
  EXPECT_THROW(flip(d, Top{0, set_of({3})}, 3), std::invalid_argument);
  EXPECT_THROW(flip(d, bottom, 4), std::invalid_argument);
}

TEST(Flip, InvolutionsThatCommuteWhenIncomparable) {
  for (const auto& d : small_corpus()) {
    auto poset = independence_poset(d);
    const auto m = static_cast<std::uint32_t>(d.vertex_count());
    for (const auto& t : poset.tops) {
      for (std::uint32_t g = 1; g <= m; ++g) {
        Top f = flip(d, poset.order, t, g);
        ASSERT_TRUE(poset.index_of(f).has_value());
        ASSERT_EQ(flip(d, poset.order, f, g), t) << to_text(d) << to_string(t) << " at " << g;
        for (std::uint32_t h = g + 1; h <= m; ++h) {
          if (poset.order.greater(g - 1, h - 1) || poset.order.greater(h - 1, g - 1)) continue;
          EXPECT_EQ(flip(d, poset.order, flip(d, poset.order, t, h), g), flip(d, poset.order, f, h))
              << to_text(d) << to_string(t) << " at " << g << "," << h;
        }
      }
    }
  }
}

TEST(IndependencePoset, IncreasingPathPentagon) {
  auto poset = independence_poset(increasing_p3());
  ASSERT_EQ(poset.tops.size(), 5u);
  std::vector<std::string> names;
  for (const auto& t : poset.tops) names.push_back(to_string(t));
  EXPECT_EQ(names, (std::vector<std::string>{"({}, {1,3})", "({1}, {3})", "({2}, {1})", "({3}, {2})",
                                             "({1,3}, {})"}));
  std::multiset<std::uint32_t> labels;
  std::set<std::tuple<std::size_t, std::size_t, std::uint32_t>> covers;
  for (const auto& c : poset.covers) {
    labels.insert(c.label);
    covers.emplace(c.lower, c.upper, c.label);
  }
  EXPECT_EQ(labels, (std::multiset<std::uint32_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(covers, (std::set<std::tuple<std::size_t, std::size_t, std::uint32_t>>{
                        {0, 1, 1}, {0, 3, 3}, {1, 4, 3}, {2, 4, 1}, {3, 2, 2}}));
  auto hasse = hasse_coloring(poset);
  EXPECT_TRUE(is_valid(hasse));
  EXPECT_EQ(coloring_group(hasse).order(), 120);
}

TEST(IndependencePoset, SmallShapes) {
  auto one = independence_poset(Dag(1, {}));
  ASSERT_EQ(one.tops.size(), 2u);
  ASSERT_EQ(one.covers.size(), 1u);
  EXPECT_EQ(one.covers[0].label, 1u);
  auto square = independence_poset(Dag(2, {}));
  EXPECT_EQ(square.tops.size(), 4u);
  EXPECT_EQ(square.covers.size(), 4u);
  EXPECT_THROW(independence_poset(Dag(6, {}), 32), std::length_error);
}

TEST(IndependencePoset, CoversAreAcyclicAndLabeled) {
  for (const auto& d : small_corpus()) {
    auto poset = independence_poset(d);
    ASSERT_EQ(poset.tops.size(), independent_sets(d).size());
    for (const auto& c : poset.covers) {
      const VertexMask g = VertexMask{1} << (c.label - 1);
      EXPECT_TRUE(poset.tops[c.lower].up & g);
      EXPECT_TRUE(poset.tops[c.upper].down & g);
    }
    // Everything is reachable from the top whose D is empty, and nothing reaches back.
    auto up = poset.interval_from(0, true);
    EXPECT_TRUE(std::all_of(up.begin(), up.end(), [](bool b) { return b; }));
    for (const auto& c : poset.covers) EXPECT_FALSE(poset.interval_from(c.upper, true)[c.lower]);
    EXPECT_TRUE(is_valid(hasse_coloring(poset)));
  }
}

TEST(StructureTheorem, Examples) {
  auto p3 = verify_structure_theorem(increasing_p3());
  EXPECT_TRUE(p3.connected);
  EXPECT_EQ(p3.degree, 5u);
  EXPECT_GE(p3.order, 60);
  EXPECT_TRUE(p3.holds);
  auto pair = verify_structure_theorem(Dag(2, {}));
  EXPECT_FALSE(pair.connected);
  EXPECT_EQ(pair.order, 4);
  EXPECT_EQ(pair.expected, 4);
  EXPECT_TRUE(pair.holds);
  EXPECT_THROW(verify_structure_theorem(Dag(7, {})), std::length_error);
}

TEST(StructureTheorem, HoldsOnCorpus) {
  for (const auto& d : small_corpus()) {
    auto check = verify_structure_theorem(d);
    EXPECT_TRUE(check.holds) << to_text(d) << " order " << check.order << " expected " << check.expected;
  }
}

TEST(ExtremalDecomposition, Examples) {
  auto p3 = increasing_p3();
  auto at_source = extremal_decomposition_check(p3, 1);
  EXPECT_FALSE(at_source.minimal);
  EXPECT_EQ(at_source.upper_part, 2u);
  EXPECT_EQ(at_source.lower_part, 3u);
  EXPECT_TRUE(at_source.ok());
  EXPECT_TRUE(extremal_decomposition_check(p3, 3).ok());
  EXPECT_THROW(extremal_decomposition_check(p3, 2), std::invalid_argument);

  auto single = extremal_decomposition_check(Dag(1, {}), 1);
  EXPECT_EQ(single.lower_part, 1u);
  EXPECT_EQ(single.upper_part, 1u);
  EXPECT_TRUE(single.ok());

  Dag diamond(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  auto d = extremal_decomposition_check(diamond, 1);
  EXPECT_EQ(d.lower_part + d.upper_part, independent_sets(diamond).size());
  EXPECT_TRUE(d.ok());
}

TEST(ExtremalDecomposition, EveryExtremalVertexOnCorpus) {
  for (const auto& d : small_corpus()) {
    auto order = g_order(d);
    for (std::uint32_t g = 1; g <= d.vertex_count(); ++g) {
      if (order.below[g - 1] && order.above[g - 1]) continue;
      EXPECT_TRUE(extremal_decomposition_check(d, g).ok()) << to_text(d) << " at " << g;
    }
  }
}

TEST(Certificate, Examples) {
  auto p3 = inductively_color_alternating_certificate(hasse_coloring(independence_poset(increasing_p3())));
  ASSERT_TRUE(p3.has_value());
  EXPECT_EQ(p3->base, ColorAlternatingCertificate::Base::few_colors);

  EXPECT_FALSE(inductively_color_alternating_certificate(fixtures::gl32_tree()).has_value());

  // K4 with five colors: one perfect matching shares a color.
  auto k4 = fixtures::graph(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {1, 3, 3}, {0, 3, 4}, {1, 2, 5}});
  auto leaf = inductively_color_alternating_certificate(k4);
  ASSERT_TRUE(leaf.has_value());
  EXPECT_TRUE(leaf->steps.empty());
  EXPECT_EQ(leaf->base, ColorAlternatingCertificate::Base::four_vertices);

  EXPECT_THROW(inductively_color_alternating_certificate(EdgeColoredGraph(3, 1, {{0, 1, 1}})),
               std::invalid_argument);
}

TEST(Certificate, ConnectedDagPosets) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& d : fixtures::all_dags(m)) {
      if (!d.is_connected()) continue;
      auto g = hasse_coloring(independence_poset(d));
      auto cert = inductively_color_alternating_certificate(g);
      ASSERT_TRUE(cert.has_value()) << to_text(d);
      std::size_t vertices = g.vertex_count();
      for (const auto& step : cert->steps) {
        EXPECT_EQ(step.vertices, vertices);
        EXPECT_LT(step.part.size(), vertices);
        vertices = step.part.size();
      }
      EXPECT_EQ(cert->base_vertices.size(), vertices);
    }
  }
}

TEST(DagIo, RoundTripAndErrors) {
  auto d = parse_dag("# path\n3\n1 2\n2 3\n");
  EXPECT_EQ(d.edges(), increasing_p3().edges());
  EXPECT_EQ(parse_dag(to_text(d)).edges(), d.edges());
  EXPECT_THROW(parse_dag("2\n1 3\n"), ParseError);
  EXPECT_THROW(parse_dag("2\n1 2\n2 1\n"), ParseError);
  EXPECT_THROW(parse_dag("2\n1\n"), ParseError);
  EXPECT_THROW(parse_dag(""), ParseError);
}
