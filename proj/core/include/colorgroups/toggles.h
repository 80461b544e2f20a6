#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "colorgroups/colored_graph.h"
#include "colorgroups/perm_group.h"

namespace colorgroups {

/// Sorted elements of a subset of {1..m}.
using Subset = std::vector<std::uint32_t>;

/// A family L of subsets of E = {1..m}, stored in length-then-lexicographic
/// order; the position of a subset in that order is its point index.
class ToggleFamily {
 public:
  static constexpr std::size_t kMaxGround = 64;
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

  /// Duplicates are merged. Throws std::invalid_argument for an empty
  /// family, elements outside 1..m, or m > 64; std::length_error when |L| > cap.
  ToggleFamily(std::size_t ground_size, std::vector<Subset> sets, std::size_t cap = kDefaultCap);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<Subset>& sets() const { return sets_; }
  const Subset& set(std::size_t index) const { return sets_[index]; }
  std::uint64_t mask(std::size_t index) const { return masks_[index]; }

  std::optional<std::size_t> index_of(const Subset& x) const;
  std::optional<std::size_t> index_of_mask(std::uint64_t mask) const;

  /// Every subset of {1..m}: the Boolean lattice.
  static ToggleFamily power_set(std::size_t ground_size);

 private:
  std::size_t ground_size_ = 0;
  std::vector<Subset> sets_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// X with e added or removed when the result lies in L; X otherwise.
/// Throws std::invalid_argument when X is not in L or e is outside 1..m.
Subset toggle(const ToggleFamily& family, std::uint32_t e, const Subset& x);

/// tau_e as a permutation of the point indices of L.
Permutation toggle_permutation(const ToggleFamily& family, std::uint32_t e);

/// T(L), generated by tau_1..tau_m.
PermutationGroup toggle_group(const ToggleFamily& family);

struct ToggleCover {
  std::size_t lower = 0;  // index of X
  std::size_t upper = 0;  // index of X with `element` added
  std::uint32_t element = 0;

  friend bool operator==(const ToggleCover&, const ToggleCover&) = default;
};

/// Covers X < X + {e} with both sets in L, ordered by X then e.
struct TogglePoset {
  ToggleFamily family;
  std::vector<ToggleCover> covers;
};

TogglePoset toggle_poset(const ToggleFamily& family);

/// Vertex i is the i-th set of L and each cover becomes an edge colored by
/// its label. Labels that occur are renumbered 1..k in increasing order, so
/// the coloring is surjective; `labels`, when given, receives the label of each color.
EdgeColoredGraph poset_as_coloring(const TogglePoset& poset, std::vector<std::uint32_t>* labels = nullptr);

/// "{1,2}", or "{}" for the empty set.
std::string subset_string(const Subset& x);

/// Graphviz description of the Hasse diagram with element labels on edges.
std::string to_dot(const TogglePoset& poset);

/// First line m, then one subset per line as space-separated elements,
/// "-" for the empty set. '#' starts a comment. Throws ParseError.
ToggleFamily parse_family(std::istream& in);
ToggleFamily parse_family(std::string_view text);
ToggleFamily read_family_file(const std::string& path);
std::string to_text(const ToggleFamily& family);

}  // namespace colorgroups
