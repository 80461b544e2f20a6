#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colorgroups/permutation.h"

namespace colorgroups {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// An undirected graph on vertices 0..n-1 with one color id per edge.
/// Construction stores the data as given; `validate` reports every broken
/// invariant (simple, proper, surjective onto 1..k).
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(std::size_t vertex_count, std::size_t color_count,
                   std::vector<ColoredEdge> edges);

  /// Color count is taken as the largest color used.
  static EdgeColoredGraph from_edges(std::size_t vertex_count, std::vector<ColoredEdge> edges);

  /// Path 0-1-...-n with edge i colored word[i].
  static EdgeColoredGraph path(const std::vector<Color>& word);

  std::size_t vertex_count() const { return n_; }
  std::size_t color_count() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  /// (neighbor, color) pairs incident to v, in edge-list order.
  const std::vector<std::pair<Vertex, Color>>& incident(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  /// The neighbor of v along its `color` edge, if any.
  std::optional<Vertex> neighbor_by_color(Vertex v, Color color) const;

  /// Index of the edge joining u and v, if present.
  std::optional<std::size_t> edge_between(Vertex u, Vertex v) const;

  friend bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<std::pair<Vertex, Color>>> adjacency_;
};

/// Human-readable descriptions of every invariant violation; empty iff valid.
std::vector<std::string> validate(const EdgeColoredGraph& g);
inline bool is_valid(const EdgeColoredGraph& g) { return validate(g).empty(); }

/// Relabels colors 1..k by first appearance in edge-list order.
EdgeColoredGraph canonicalize_colors(const EdgeColoredGraph& g);

/// Induced subgraph on `vertices` (relabeled by position in the list),
/// colors canonicalized by first appearance.
EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, const std::vector<Vertex>& vertices);

bool is_connected(const EdgeColoredGraph& g);
bool is_tree(const EdgeColoredGraph& g);
bool is_forest(const EdgeColoredGraph& g);

/// Spanning subgraph keeping only edges whose color is in `kept_colors`;
/// every vertex is retained, so isolated vertices are order-1 components.
struct ColorSubgraph {
  std::vector<Color> kept_colors;               // sorted
  std::vector<std::size_t> component_of;        // per vertex
  std::vector<std::vector<Vertex>> components;  // ordered by smallest vertex

  std::vector<std::size_t> component_orders() const;
};

ColorSubgraph components(const EdgeColoredGraph& g, const std::vector<Color>& kept_colors);

/// Connected components of the whole graph.
ColorSubgraph components(const EdgeColoredGraph& g);

std::vector<Color> all_colors(const EdgeColoredGraph& g);

/// Colors of edges at v, sorted.
std::vector<Color> incident_colors(const EdgeColoredGraph& g, Vertex v);

struct SymmetricEdge {
  std::size_t edge = 0;          // index into g.edges()
  std::vector<Color> witness;    // the deleted color set S, sorted
};

/// Edges whose incident colors are pairwise distinct and for which some
/// color set S containing all incident colors but not the edge's own color
/// leaves exactly one even component once S-colored edges are removed.
/// Subsets S are tried in increasing bitmask order; the first is recorded.
/// Throws std::invalid_argument for non-trees and std::length_error for k > 20.
std::vector<SymmetricEdge> find_symmetric_edges(const EdgeColoredGraph& g);

/// Colors read along a walk of vertices.
using PathWord = std::vector<Color>;

/// Throws std::invalid_argument unless `path` is a simple path in g.
PathWord path_word(const EdgeColoredGraph& g, const std::vector<Vertex>& path);

/// True iff every contiguous subword of length >= 2 has at least two
/// distinct letters of odd multiplicity. Words shorter than 2 are not toggle words.
bool is_toggle_word(const PathWord& word);

/// Unique path between two vertices of a tree.
std::vector<Vertex> tree_path(const EdgeColoredGraph& g, Vertex from, Vertex to);

struct TogglePathReport {
  bool all_toggle = true;
  std::vector<Vertex> failing_path;  // empty when all_toggle
  PathWord failing_word;
};

/// Checks the word of the unique path between every pair of vertices at
/// distance >= 2. Throws std::invalid_argument for non-trees.
TogglePathReport all_tree_paths_toggle(const EdgeColoredGraph& g);

/// A 4-vertex path whose word has the form a,b,a, if one exists.
std::optional<std::vector<Vertex>> find_aba_path(const EdgeColoredGraph& g);

std::string to_string(const PathWord& word);

}  // namespace colorgroups
