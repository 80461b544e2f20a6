#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colorgroups/colored_graph.h"
#include "colorgroups/perm_group.h"

namespace colorgroups {

/// Vertex sets of a dag as bitmasks: bit v stands for vertex v+1.
using VertexMask = std::uint32_t;

/// Directed acyclic graph on vertices 1..m. Input and output use 1-based
/// labels; masks and internal indices are 0-based.
class Dag {
 public:
  static constexpr std::size_t kMaxVertices = 32;

  Dag() = default;
  /// Edges a -> b with 1-based endpoints. Throws std::invalid_argument on
  /// loops, repeated edges, out-of-range endpoints or a directed cycle.
  Dag(std::size_t vertex_count, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t vertex_count() const { return m_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
  VertexMask all() const { return m_ == 32 ? ~VertexMask{0} : (VertexMask{1} << m_) - 1; }
  VertexMask out_mask(std::size_t v) const { return out_[v]; }
  VertexMask in_mask(std::size_t v) const { return in_[v]; }
  VertexMask neighbors(std::size_t v) const { return out_[v] | in_[v]; }

  /// Induced subdag on `keep`, relabeled 1..|keep| in increasing order;
  /// `labels`, when given, receives the original label of each new vertex.
  Dag induced(VertexMask keep, std::vector<std::uint32_t>* labels = nullptr) const;

  /// Connectivity of the underlying undirected graph (true when empty).
  bool is_connected() const;
  std::vector<VertexMask> components() const;

 private:
  std::size_t m_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<VertexMask> out_, in_;
};

/// g1 >= g2 iff a directed path leads from g1 to g2.
struct GOrder {
  std::vector<VertexMask> below;  // strict descendants of each vertex
  std::vector<VertexMask> above;  // strict ancestors
  std::vector<std::uint32_t> linear;  // l: minimal elements first, 0-based
  std::vector<std::uint32_t> dual;    // l': the reverse of l

  bool greater(std::size_t a, std::size_t b) const { return below[a] >> b & 1; }
};

/// l repeatedly removes the smallest-index vertex with no remaining out-edge.
GOrder g_order(const Dag& dag);

/// Tight orthogonal pair.
struct Top {
  VertexMask down = 0;  // D
  VertexMask up = 0;    // U

  friend bool operator==(const Top&, const Top&) = default;
  friend auto operator<=>(const Top&, const Top&) = default;
};

std::string to_string(const Top& top);
std::string mask_string(VertexMask mask);  // "{1,3}"

bool is_independent(const Dag& dag, VertexMask set);

/// Independent, disjoint, and no edge from D into U.
bool is_orthogonal_pair(const Dag& dag, VertexMask down, VertexMask up);

/// Every single raise of a D element, lowering of a U element, or insertion
/// breaks the orthogonal pair. Throws std::invalid_argument unless (D, U) is
/// an orthogonal pair.
bool is_tight(const Dag& dag, const GOrder& order, VertexMask down, VertexMask up);
bool is_tight(const Dag& dag, VertexMask down, VertexMask up);

enum class Side { as_down, as_up };

/// The unique top with the given half, found by scanning l' (for D) or l
/// (for U) and inserting whatever keeps the pair orthogonal. Throws
/// std::invalid_argument unless `set` is independent, std::logic_error if the
/// greedy result is not tight.
Top complete_to_top(const Dag& dag, const GOrder& order, VertexMask set, Side side);
Top complete_to_top(const Dag& dag, VertexMask set, Side side);

/// flip at the 1-based vertex g; the identity when g is in neither half.
/// After switching g's side, D is first completed from the elements below g
/// and U from the elements above g, then both are completed greedily.
/// Throws std::invalid_argument if `top` is not a top or g is out of range.
Top flip(const Dag& dag, const GOrder& order, const Top& top, std::uint32_t g);
Top flip(const Dag& dag, const Top& top, std::uint32_t g);

/// Every independent set, ascending. Throws std::length_error past `cap`.
std::vector<VertexMask> independent_sets(const Dag& dag, std::size_t cap = 1u << 16);

struct IndependenceCover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint32_t label = 0;  // 1-based vertex g with g in the lower U
};

struct IndependencePoset {
  Dag dag;
  GOrder order;
  std::vector<Top> tops;  // ordered by D mask
  std::vector<IndependenceCover> covers;

  std::optional<std::size_t> index_of(const Top& top) const;
  /// Indices reachable upward (true) or downward (false) from `from`, itself included.
  std::vector<bool> interval_from(std::size_t from, bool upward) const;
};

IndependencePoset independence_poset(const Dag& dag, std::size_t cap = 1u << 16);

/// Tops as vertices, covers as edges colored by their labels.
EdgeColoredGraph hasse_coloring(const IndependencePoset& poset);

struct StructureCheck {
  bool connected = false;
  std::size_t degree = 0;
  BigInt order;
  BigInt expected;  // n!/2 lower bound when connected, product of component orders otherwise
  bool holds = false;
};

/// Connected dag: order >= |tops|!/2. Disconnected: order equals the
/// product of the component orders. Throws std::length_error when a poset
/// has more than `cap` tops.
StructureCheck verify_structure_theorem(const Dag& dag, std::size_t cap = 64);

struct ExtremalCheck {
  bool minimal = false;
  std::size_t lower_part = 0;  // |[0, m_g]|
  std::size_t upper_part = 0;  // |[j_g, 1]|
  bool partition = false;
  bool membership = false;        // g in U (minimal) or g in D (maximal) decides the part
  bool flips_preserve_parts = false;
  bool flip_at_g = false;         // flip at g moves g into the half matching its part
  bool lower_bijection = false;
  bool upper_bijection = false;

  bool ok() const {
    return partition && membership && flips_preserve_parts && flip_at_g && lower_bijection &&
           upper_bijection;
  }
};

/// Throws std::invalid_argument unless the 1-based g is minimal or maximal.
ExtremalCheck extremal_decomposition_check(const Dag& dag, std::uint32_t g);

/// One step of an inductive color-alternating certificate: inside the
/// current graph, color `color` splits off `part` (original vertex ids).
struct CertificateStep {
  std::size_t vertices = 0;
  std::size_t colors = 0;
  Color color = 0;
  std::vector<Vertex> part;
};

struct ColorAlternatingCertificate {
  enum class Base { few_colors, four_vertices };
  std::vector<CertificateStep> steps;
  Base base = Base::few_colors;
  std::vector<Vertex> base_vertices;  // original ids of the base graph
};

/// Searches for a certificate. A step needs a color i and a connected
/// component G1 of the graph without its i-edges such that G1 has no
/// internal i-edge, contains a vertex fixed by tau_i, and every vertex
/// outside G1 is i-matched into G1. Bases: at most four colors with order
/// >= n!/2, or four vertices with more than four colors. Throws
/// std::invalid_argument for disconnected input.
std::optional<ColorAlternatingCertificate> inductively_color_alternating_certificate(
    const EdgeColoredGraph& g);

/// "m", then one "a b" line per edge a -> b, 1-based. '#' starts a comment.
Dag parse_dag(std::istream& in);
Dag parse_dag(std::string_view text);
Dag read_dag_file(const std::string& path);
std::string to_text(const Dag& dag);

}  // namespace colorgroups
