#include "fixtures.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace fixtures {

using colorgroups::ColoredEdge;
using colorgroups::Vertex;

EdgeColoredGraph graph(std::size_t n, const std::vector<std::array<int, 3>>& edges, bool one_based) {
  std::vector<ColoredEdge> out;
  const int shift = one_based ? 1 : 0;
  for (const auto& [u, v, c] : edges)
    out.push_back({static_cast<Vertex>(u - shift), static_cast<Vertex>(v - shift), static_cast<Color>(c)});
  return colorgroups::canonicalize_colors(EdgeColoredGraph::from_edges(n, std::move(out)));
}

EdgeColoredGraph gl32_tree() {
  return graph(7, {{1, 2, 1}, {3, 4, 1}, {2, 3, 2}, {5, 6, 2}, {0, 1, 3}, {2, 5, 3}});
}

EdgeColoredGraph imprimitive_path15() {
  return EdgeColoredGraph::path({1, 2, 3, 4, 5, 4, 3, 2, 1, 6, 1, 2, 3, 4});
}

EdgeColoredGraph three_row_tree() {
  return graph(12, {{0, 4, 1}, {1, 5, 1}, {2, 6, 1}, {3, 7, 1},
                    {0, 11, 2}, {1, 10, 2}, {2, 9, 2}, {3, 8, 2},
                    {1, 2, 3}, {4, 6, 3}, {8, 10, 3}});
}

EdgeColoredGraph reflective_tree12() {
  return graph(12, {{1, 5, 1}, {2, 4, 1}, {7, 9, 1}, {6, 10, 1}, {2, 3, 2}, {8, 9, 2},
                    {0, 1, 2}, {10, 11, 2}, {1, 2, 3}, {9, 10, 3}, {5, 6, 3}});
}

EdgeColoredGraph symmetric_edge_path10() {
  return EdgeColoredGraph::path({4, 3, 1, 2, 1, 3, 2, 4, 3});
}

EdgeColoredGraph table_tree_648() {
  return graph(9, {{0, 1, 1}, {2, 1, 2}, {2, 3, 1}, {4, 3, 2}, {4, 5, 3}, {0, 6, 2}, {0, 7, 3}, {1, 8, 3}});
}

EdgeColoredGraph table_tree_5184() {
  return graph(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 3}, {5, 6, 1}, {6, 7, 3},
                    {7, 8, 2}, {8, 9, 1}, {6, 10, 2}, {10, 11, 1}, {7, 12, 1}}, true);
}

EdgeColoredGraph table_tree_23040() {
  return graph(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 3}, {5, 4, 2}, {5, 6, 3}, {6, 7, 2},
                    {7, 8, 3}, {8, 9, 2}, {9, 10, 1}, {3, 11, 1}, {8, 12, 1}}, true);
}

EdgeColoredGraph table_tree_31104() {
  return graph(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 2}, {5, 6, 1}, {6, 7, 2},
                    {1, 8, 3}, {1, 9, 2}, {7, 10, 1}, {7, 11, 3}, {4, 12, 3}}, true);
}

EdgeColoredGraph table_tree_82944() {
  return graph(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 2}, {5, 6, 3}, {6, 7, 2},
                    {7, 8, 3}, {8, 9, 2}, {9, 10, 1}, {5, 11, 1}, {6, 12, 1}}, true);
}

std::vector<std::array<std::uint32_t, 2>> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::array<std::uint32_t, 2>> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
  std::vector<std::uint32_t> code(n - 2);
  for (auto& x : code) x = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (auto x : code) ++degree[x];
  std::set<std::uint32_t> leaves;
  for (std::uint32_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (auto x : code) {
    std::uint32_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.insert(x);
  }
  edges.push_back({*leaves.begin(), *std::next(leaves.begin())});
  return edges;
}

std::vector<std::array<std::uint32_t, 2>> random_forest_edges(std::size_t n, std::mt19937_64& rng) {
  auto edges = random_tree_edges(n, rng);
  std::bernoulli_distribution keep(0.75);
  std::vector<std::array<std::uint32_t, 2>> out;
  for (const auto& e : edges)
    if (keep(rng)) out.push_back(e);
  return out;
}

std::vector<std::array<std::uint32_t, 2>> random_graph_edges(std::size_t n, double p,
                                                             std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<std::array<std::uint32_t, 2>> out;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (keep(rng)) out.push_back({u, v});
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

EdgeColoredGraph random_proper_coloring(std::size_t n,
                                        const std::vector<std::array<std::uint32_t, 2>>& edges,
                                        std::size_t max_colors, std::mt19937_64& rng) {
  std::vector<std::set<Color>> used(n);
  std::vector<ColoredEdge> out;
  for (const auto& [u, v] : edges) {
    std::vector<Color> allowed;
    for (Color c = 1; c <= max_colors; ++c)
      if (!used[u].count(c) && !used[v].count(c)) allowed.push_back(c);
    Color c;
    if (allowed.empty()) {
      c = static_cast<Color>(max_colors + 1);
      while (used[u].count(c) || used[v].count(c)) ++c;
    } else {
      c = allowed[std::uniform_int_distribution<std::size_t>(0, allowed.size() - 1)(rng)];
    }
    used[u].insert(c);
    used[v].insert(c);
    out.push_back({u, v, c});
  }
  return colorgroups::canonicalize_colors(EdgeColoredGraph::from_edges(n, std::move(out)));
}

}  // namespace fixtures
