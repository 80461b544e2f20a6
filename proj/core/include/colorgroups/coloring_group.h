#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "colorgroups/colored_graph.h"
#include "colorgroups/perm_group.h"

namespace colorgroups {

/// tau_a for a = 1..k: the product of the transpositions (u v) over edges colored a.
/// Entry a-1 of the result is tau_a.
std::vector<Permutation> generators(const EdgeColoredGraph& g);

PermutationGroup coloring_group(const EdgeColoredGraph& g);

/// A vertex coloring nu with nu[v] in 1..l.
struct ImprimitiveVertexColoring {
  std::vector<std::uint32_t> nu;

  std::size_t class_count() const;
  std::vector<std::vector<Vertex>> classes() const;
};

struct VertexColoringCheck {
  bool condition_i = false;   // b-edges between classes a != c reach c from every a-vertex
  bool condition_ii = false;  // some class has size strictly between 1 and n
  std::string failure;        // first violated condition, empty when both hold
  bool ok() const { return condition_i && condition_ii; }
};

VertexColoringCheck check_vertex_coloring(const EdgeColoredGraph& g,
                                          const ImprimitiveVertexColoring& nu);

/// Classes numbered 1.. in block order.
ImprimitiveVertexColoring vertex_coloring_from_blocks(const EdgeColoredGraph& g,
                                                      const BlockSystem& blocks);

/// Present iff the coloring group is imprimitive. The witness comes from the
/// first minimal block system. Throws std::domain_error when the group is
/// intransitive, since then the orbits already break primitivity.
std::optional<ImprimitiveVertexColoring> imprimitive_vertex_coloring(const EdgeColoredGraph& g);
std::optional<ImprimitiveVertexColoring> imprimitive_vertex_coloring(const EdgeColoredGraph& g,
                                                                    const PermutationGroup& group);

struct LongCycleResult {
  CycleType product;           // cycle type of tau_{order[0]} * ... * tau_{order[k-1]}
  CycleType component_orders;  // sorted orders of the connected components
  bool matches() const { return product == component_orders; }
};

/// `color_order` must be a permutation of 1..k. Throws std::invalid_argument
/// for non-forests or a malformed order.
LongCycleResult long_cycle_check(const EdgeColoredGraph& g, const std::vector<Color>& color_order);

std::uint64_t euler_totient(std::uint64_t n);

struct SizeBound {
  std::uint64_t n = 0;
  std::uint64_t phi = 0;
  BigInt order;
  // Compared as order * (n - phi) >= n * n.
  bool holds = false;
  std::string bound_string() const;  // "n^2/(n-phi)" reduced
};

/// Throws std::invalid_argument unless g is a tree with at least three colors.
SizeBound size_bound_check(const EdgeColoredGraph& g);
SizeBound size_bound_check(const EdgeColoredGraph& g, const BigInt& order);

struct SignedEmbedding {
  std::size_t m = 0;
  BigInt signed_order;  // 2^m * m!
  bool divides = false;
};

struct TreeCentralizer {
  std::size_t aut_order = 0;
  std::optional<SignedEmbedding> signed_embedding;  // present when aut_order == 2
  bool ok() const;
};

TreeCentralizer tree_centralizer_check(const EdgeColoredGraph& g);
TreeCentralizer tree_centralizer_check(const EdgeColoredGraph& g, const BigInt& order);

struct SymmetricEdgeWitness {
  std::size_t edge = 0;
  std::vector<Color> deleted_colors;  // S
  Vertex i = 0;
  Vertex j = 0;
  Permutation pi;                     // product of tau_a over a not in S, ascending
  BigInt m;                           // lcm of the odd component orders
  Permutation pi_power;               // pi^m
  Permutation sigma;                  // sigma_1 * tau_{kappa(e)} * sigma_2
  bool pi_power_is_transposition = false;  // pi^m == (i j)
  bool sigma_maps_i_to_j = false;
  bool sigma_is_n_cycle = false;
  bool order_is_factorial = false;

  bool ok() const {
    return pi_power_is_transposition && sigma_maps_i_to_j && sigma_is_n_cycle && order_is_factorial;
  }
};

/// Builds the witness for one detected symmetric edge.
SymmetricEdgeWitness symmetric_edge_witness(const EdgeColoredGraph& g, const SymmetricEdge& edge,
                                            const BigInt& order);

/// Witness for the first symmetric edge of a tree coloring, absent when there is none.
std::optional<SymmetricEdgeWitness> symmetric_edge_theorem_check(const EdgeColoredGraph& g);

struct RestrictedTree {
  std::vector<Color> colors;  // S, sorted
  std::size_t m = 0;          // vertices touched by S-edges
  std::size_t n_minus_m = 0;
};

/// Every nonempty color subset whose edges, with their endpoints, form a
/// tree. Throws std::length_error for k > 12.
std::vector<RestrictedTree> restricted_tree_report(const EdgeColoredGraph& g);

/// Advisory notes comparing restricted trees with primitivity and
/// alternating containment. They are descriptive, never asserted.
std::vector<std::string> restricted_tree_tags(const std::vector<RestrictedTree>& records,
                                              std::size_t n, bool primitive,
                                              bool contains_alternating);

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt order;
  bool transitive = false;
  bool primitive = false;
  bool contains_alternating = false;
  bool is_tree = false;
  bool is_forest = false;
  Fingerprint fingerprint;
  std::vector<std::vector<Point>> orbits;
  std::optional<BlockSystem> block_system;
  std::optional<ImprimitiveVertexColoring> vertex_coloring;
  std::size_t aut_order = 0;
  std::optional<SizeBound> size_bound;            // trees with k >= 3
  std::optional<TreeCentralizer> tree_centralizer; // trees
  std::optional<std::vector<SymmetricEdge>> symmetric_edges;  // trees with k <= 20
  std::optional<SymmetricEdgeWitness> symmetric_edge_witness;
  std::optional<CycleType> long_cycle_type;       // forests, ascending color order
  std::optional<bool> toggle_clean;               // trees
  std::optional<std::vector<Vertex>> toggle_failure_path;
  std::optional<std::vector<RestrictedTree>> restricted_trees;  // k <= 12
  std::vector<std::string> advisory_tags;
};

/// Full analysis of a valid coloring. Tree-only fields are left empty for other graphs.
AnalysisReport analyze(const EdgeColoredGraph& g);

nlohmann::json to_json(const AnalysisReport& report);
std::string to_table(const AnalysisReport& report);

/// Exact integers fit in JSON numbers up to 2^64; larger values become decimal strings.
nlohmann::json bigint_json(const BigInt& value);

enum class ConstructionKind { symmetric, alternating, dihedral, signed_permutations };

std::optional<ConstructionKind> parse_construction_kind(std::string_view name);

/// Standard colorings realizing S_n, A_n, D_n and B_m.
///   symmetric(n):   path on n >= 2 vertices colored 1,2,1,2,... with a fresh last color
///   alternating(n): path on odd n >= 7 vertices colored 1..k,1..k with k = (n-1)/2
///   dihedral(n):    path on n >= 3 vertices colored 1,2,1,2,...
///   signed(m):      two stars on m vertices with matching leaf colors 1..m-1, centers
///                   joined by color m; 2m vertices
/// Throws std::invalid_argument for sizes outside these ranges.
EdgeColoredGraph construction(ConstructionKind kind, std::size_t size);

}  // namespace colorgroups
