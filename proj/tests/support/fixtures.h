#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "colorgroups/colored_graph.h"

namespace fixtures {

using colorgroups::Color;
using colorgroups::EdgeColoredGraph;

/// Edges given as {u, v, color}; vertices shifted down by one when one_based.
EdgeColoredGraph graph(std::size_t n, const std::vector<std::array<int, 3>>& edges,
                       bool one_based = false);

/// 7-vertex tree whose coloring group is GL(3,2).
EdgeColoredGraph gl32_tree();
/// P15 with an imprimitive vertex coloring of five classes of three.
EdgeColoredGraph imprimitive_path15();
/// 12 vertices on three rows of four; row partition is a block system.
EdgeColoredGraph three_row_tree();
/// 12-vertex tree with a reflecting color-preserving automorphism.
EdgeColoredGraph reflective_tree12();
/// P10 colored 4,3,1,2,1,3,2,4,3; its sixth edge is symmetric with S = {1,2}.
EdgeColoredGraph symmetric_edge_path10();

/// Tabulated trees with their coloring-group orders.
EdgeColoredGraph table_tree_648();
EdgeColoredGraph table_tree_5184();
EdgeColoredGraph table_tree_23040();
EdgeColoredGraph table_tree_31104();
EdgeColoredGraph table_tree_82944();

/// Uniform labeled tree on n vertices from a random Pruefer sequence.
std::vector<std::array<std::uint32_t, 2>> random_tree_edges(std::size_t n, std::mt19937_64& rng);

/// Random forest on n vertices: a random tree with each edge kept with probability 3/4.
std::vector<std::array<std::uint32_t, 2>> random_forest_edges(std::size_t n, std::mt19937_64& rng);

/// Random proper coloring of the given edges; each edge takes a uniformly
/// random color among 1..max_colors not yet used at either endpoint,
/// falling back to a fresh color. Colors are canonicalized.
EdgeColoredGraph random_proper_coloring(std::size_t n,
                                        const std::vector<std::array<std::uint32_t, 2>>& edges,
                                        std::size_t max_colors, std::mt19937_64& rng);

/// Random simple graph on n vertices with edge probability p.
std::vector<std::array<std::uint32_t, 2>> random_graph_edges(std::size_t n, double p,
                                                             std::mt19937_64& rng);

}  // namespace fixtures
