#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "colorgroups/colored_graph.h"
#include "colorgroups/perm_group.h"

namespace colorgroups {

/// Uncolored tree on vertices 0..n-1.
struct TreeSkeleton {
  std::size_t n = 0;
  std::vector<std::array<Vertex, 2>> edges;
};

/// Every tree on n vertices up to isomorphism, exactly once, in the order of
/// the level-sequence successor algorithm. Throws std::invalid_argument
/// unless 2 <= n <= 12.
std::vector<TreeSkeleton> free_trees(std::size_t n);

/// Number of trees on n vertices for 2 <= n <= 12.
std::size_t free_tree_count(std::size_t n);

/// Nested-parenthesis encoding rooted at the center; equal iff isomorphic.
std::string tree_canonical_form(const TreeSkeleton& tree);

/// Every automorphism of the uncolored tree as a vertex permutation.
std::vector<Permutation> tree_automorphisms(const TreeSkeleton& tree);

/// One representative per orbit of surjective proper colorings with
/// min_colors..max_colors colors under color relabeling and tree
/// automorphisms. Colors of a representative first appear in increasing
/// order along the skeleton's edge list, and it is the lexicographically
/// smallest such relabeling in its orbit.
std::vector<EdgeColoredGraph> proper_colorings(const TreeSkeleton& tree, std::size_t min_colors,
                                               std::size_t max_colors);

/// Path word read from one end when g is a path, absent otherwise.
std::optional<PathWord> as_path_word(const EdgeColoredGraph& g);

struct SurveyOptions {
  bool skip_symmetric_edge = false;
};

struct SurveyRow {
  std::size_t n = 0;
  std::size_t k = 0;
  BigInt order;
  bool primitive = false;
  Fingerprint fingerprint;
  std::string representative;  // "1,2,1,3" for paths, else graph text with "; " for newlines
  std::size_t colorings = 0;   // colorings merged into this row
};

/// Per-coloring checks accumulated over the whole run.
struct SurveyStats {
  std::size_t trees = 0;
  std::size_t colorings = 0;
  std::size_t analyzed = 0;
  std::size_t skipped_symmetric_edge = 0;

  std::size_t symmetric_edge_colorings = 0;  // analyzed colorings with a symmetric edge
  std::size_t symmetric_edge_failures = 0;   // order != n! or witness not ok

  std::size_t size_bound_checked = 0;  // trees with k >= 3
  std::size_t size_bound_failures = 0;

  std::size_t primitivity_checked = 0;
  std::size_t primitivity_failures = 0;  // witness presence disagrees or fails (i)/(ii)
  std::size_t aba_checked = 0;           // imprimitive colorings
  std::size_t aba_failures = 0;
};

struct SurveyResult {
  std::size_t n = 0;
  SurveyOptions options;
  std::vector<SurveyRow> rows;  // sorted by order, then fingerprint
  SurveyStats stats;
  double seconds = 0;

  /// Orders of the rows, plus n! when skipped colorings imply the symmetric group.
  std::vector<BigInt> distinct_orders() const;
};

/// Every coloring the survey of degree n analyzes, trees in generation order.
/// Throws std::invalid_argument unless 2 <= n <= 10.
std::vector<EdgeColoredGraph> survey_colorings(std::size_t n);

/// Outcome of the checks run on one surveyed coloring.
struct ColoringVerdict {
  bool skipped = false;  // symmetric edge present and skipping requested
  BigInt order;
  bool primitive = false;
  Fingerprint fingerprint;
  bool symmetric_edge = false;
  bool symmetric_edge_ok = true;
  bool size_bound_checked = false;
  bool size_bound_ok = true;
  bool primitivity_ok = true;
  bool aba_checked = false;
  bool aba_ok = true;
};

/// Pure and independent per coloring, so callers may run it in parallel.
ColoringVerdict analyze_survey_coloring(const EdgeColoredGraph& g, const SurveyOptions& options);

/// Merges verdicts (parallel to `colorings`) into rows. The first coloring
/// with a given fingerprint becomes the row's representative.
SurveyResult collect_survey(std::size_t n, const SurveyOptions& options,
                            const std::vector<EdgeColoredGraph>& colorings,
                            const std::vector<ColoringVerdict>& verdicts);

/// Analyzes every proper coloring of every tree on n vertices and merges
/// colorings with equal fingerprints. With skip_symmetric_edge, colorings
/// with a symmetric edge are counted but not analyzed. Throws
/// std::invalid_argument unless 2 <= n <= 10.
SurveyResult survey(std::size_t n, const SurveyOptions& options = {});

/// The graph behind a row's representative: a path word or the one-line
/// graph text produced for other trees. Throws ParseError.
EdgeColoredGraph representative_graph(const std::string& representative);

/// Columns: order, primitive, k, representative, colorings.
std::string to_csv(const SurveyResult& result);
/// Options, counts, check tallies and rows. Holds no timing, so equal runs
/// serialize identically.
nlohmann::json manifest_json(const SurveyResult& result);

/// A row of the table of coloring groups on small trees.
struct TableEntry {
  std::string name;
  std::size_t n = 0;
  std::uint64_t order = 0;
  bool primitive = false;
  EdgeColoredGraph graph;
};

/// Non-standard groups on trees with 7 to 12 vertices, one coloring each.
const std::vector<TableEntry>& coloring_table();

struct TableCheck {
  const TableEntry* entry = nullptr;
  BigInt order;
  bool primitive = false;
  bool pass = false;
  double seconds = 0;
};

TableCheck check_table_row(const TableEntry& entry);
std::vector<TableCheck> check_table();

}  // namespace colorgroups
