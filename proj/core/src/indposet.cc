#include "colorgroups/indposet.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "colorgroups/coloring_group.h"
#include "colorgroups/graph_io.h"

namespace colorgroups {
namespace {

constexpr VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

template <class F>
void for_each_bit(VertexMask mask, F&& f) {
  while (mask) {
    std::size_t v = static_cast<std::size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    f(v);
  }
}

}  // namespace

// --- Dag --------------------------------------------------------------------

Dag::Dag(std::size_t vertex_count, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : m_(vertex_count), edges_(std::move(edges)), out_(vertex_count, 0), in_(vertex_count, 0) {
  if (m_ > kMaxVertices) throw std::invalid_argument("dag has more than 32 vertices");
  for (const auto& [a, b] : edges_) {
    if (a < 1 || b < 1 || a > m_ || b > m_)
      throw std::invalid_argument("edge " + std::to_string(a) + "->" + std::to_string(b) +
                                  " has an endpoint outside 1.." + std::to_string(m_));
    if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
    if (out_[a - 1] & bit(b - 1))
      throw std::invalid_argument("repeated edge " + std::to_string(a) + "->" + std::to_string(b));
    out_[a - 1] |= bit(b - 1);
    in_[b - 1] |= bit(a - 1);
  }
  // Kahn's algorithm detects cycles.
  std::vector<std::size_t> indegree(m_);
  for (std::size_t v = 0; v < m_; ++v) indegree[v] = static_cast<std::size_t>(std::popcount(in_[v]));
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < m_; ++v)
    if (!indegree[v]) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    ++seen;
    for_each_bit(out_[v], [&](std::size_t w) {
      if (--indegree[w] == 0) ready.push_back(w);
    });
  }
  if (seen != m_) throw std::invalid_argument("graph has a directed cycle");
}

Dag Dag::induced(VertexMask keep, std::vector<std::uint32_t>* labels) const {
  keep &= all();
  std::vector<std::uint32_t> new_index(m_, 0), original;
  for_each_bit(keep, [&](std::size_t v) {
    original.push_back(static_cast<std::uint32_t>(v + 1));
    new_index[v] = static_cast<std::uint32_t>(original.size());
  });
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& [a, b] : edges_)
    if ((keep & bit(a - 1)) && (keep & bit(b - 1))) edges.emplace_back(new_index[a - 1], new_index[b - 1]);
  if (labels) *labels = original;
  return Dag(original.size(), std::move(edges));
}

std::vector<VertexMask> Dag::components() const {
  std::vector<VertexMask> out;
  VertexMask left = all();
  while (left) {
    VertexMask comp = left & -left, frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](std::size_t v) { next |= neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Dag::is_connected() const { return components().size() <= 1; }

// --- G-order ----------------------------------------------------------------

GOrder g_order(const Dag& dag) {
  const std::size_t m = dag.vertex_count();
  GOrder order;
  order.below.assign(m, 0);
  order.above.assign(m, 0);
  // Sinks first; each vertex's descendants are known once its out-neighbors are placed.
  VertexMask placed = 0;
  while (order.linear.size() < m) {
    for (std::size_t v = 0; v < m; ++v) {
      if ((placed & bit(v)) || (dag.out_mask(v) & ~placed)) continue;
      VertexMask below = dag.out_mask(v);
      for_each_bit(dag.out_mask(v), [&](std::size_t w) { below |= order.below[w]; });
      order.below[v] = below;
      order.linear.push_back(static_cast<std::uint32_t>(v));
      placed |= bit(v);
      break;
    }
  }
  for (std::size_t v = 0; v < m; ++v)
    for_each_bit(order.below[v], [&](std::size_t w) { order.above[w] |= bit(v); });
  order.dual.assign(order.linear.rbegin(), order.linear.rend());
  return order;
}

// --- tops -------------------------------------------------------------------

std::string mask_string(VertexMask mask) {
  std::string out = "{";
  bool first = true;
  for_each_bit(mask, [&](std::size_t v) {
    out += (first ? "" : ",") + std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

std::string to_string(const Top& top) { return "(" + mask_string(top.down) + ", " + mask_string(top.up) + ")"; }

bool is_independent(const Dag& dag, VertexMask set) {
  bool ok = true;
  for_each_bit(set, [&](std::size_t v) { ok = ok && !(dag.neighbors(v) & set); });
  return ok;
}

bool is_orthogonal_pair(const Dag& dag, VertexMask down, VertexMask up) {
  if ((down | up) & ~dag.all()) return false;
  if (down & up) return false;
  if (!is_independent(dag, down) || !is_independent(dag, up)) return false;
  bool ok = true;
  for_each_bit(down, [&](std::size_t d) { ok = ok && !(dag.out_mask(d) & up); });
  return ok;
}

bool is_tight(const Dag& dag, const GOrder& order, VertexMask down, VertexMask up) {
  if (!is_orthogonal_pair(dag, down, up)) throw std::invalid_argument("not an orthogonal pair");
  bool tight = true;
  for_each_bit(down, [&](std::size_t x) {
    for_each_bit(order.above[x] & ~down, [&](std::size_t y) {
      if (is_orthogonal_pair(dag, (down & ~bit(x)) | bit(y), up)) tight = false;
    });
  });
  for_each_bit(up, [&](std::size_t x) {
    for_each_bit(order.below[x] & ~up, [&](std::size_t y) {
      if (is_orthogonal_pair(dag, down, (up & ~bit(x)) | bit(y))) tight = false;
    });
  });
  for_each_bit(dag.all() & ~down, [&](std::size_t v) {
    if (is_orthogonal_pair(dag, down | bit(v), up)) tight = false;
  });
  for_each_bit(dag.all() & ~up, [&](std::size_t v) {
    if (is_orthogonal_pair(dag, down, up | bit(v))) tight = false;
  });
  return tight;
}

bool is_tight(const Dag& dag, VertexMask down, VertexMask up) {
  return is_tight(dag, g_order(dag), down, up);
}

namespace {

VertexMask complete_down(const Dag& dag, const GOrder& order, VertexMask down, VertexMask up,
                         VertexMask allowed = ~VertexMask{0}) {
  for (auto v : order.dual)
    if ((allowed & bit(v)) && !(down & bit(v)) && is_orthogonal_pair(dag, down | bit(v), up)) down |= bit(v);
  return down;
}

VertexMask complete_up(const Dag& dag, const GOrder& order, VertexMask down, VertexMask up,
                       VertexMask allowed = ~VertexMask{0}) {
  for (auto v : order.linear)
    if ((allowed & bit(v)) && !(up & bit(v)) && is_orthogonal_pair(dag, down, up | bit(v))) up |= bit(v);
  return up;
}

}  // namespace

Top complete_to_top(const Dag& dag, const GOrder& order, VertexMask set, Side side) {
  if (set & ~dag.all()) throw std::invalid_argument("set has vertices outside the dag");
  if (!is_independent(dag, set)) throw std::invalid_argument(mask_string(set) + " is not independent");
  Top top;
  if (side == Side::as_down) {
    top.down = set;
    top.up = complete_up(dag, order, set, 0);
  } else {
    top.up = set;
    top.down = complete_down(dag, order, 0, set);
  }
  if (!is_tight(dag, order, top.down, top.up))
    throw std::logic_error("greedy completion of " + mask_string(set) + " is not tight");
  return top;
}

Top complete_to_top(const Dag& dag, VertexMask set, Side side) {
  return complete_to_top(dag, g_order(dag), set, side);
}

Top flip(const Dag& dag, const GOrder& order, const Top& top, std::uint32_t g) {
  if (g < 1 || g > dag.vertex_count()) throw std::invalid_argument("flip vertex out of range");
  if (!is_orthogonal_pair(dag, top.down, top.up) || !is_tight(dag, order, top.down, top.up))
    throw std::invalid_argument(to_string(top) + " is not a tight orthogonal pair");
  const std::size_t v = g - 1;
  if (!((top.down | top.up) & bit(v))) return top;
  VertexMask down = top.down & ~order.below[v];
  VertexMask up = top.up & ~order.above[v];
  if (down & bit(v)) {
    down &= ~bit(v);
    up |= bit(v);
  } else {
    up &= ~bit(v);
    down |= bit(v);
  }
  // Elements below g go to D and elements above g go to U before the
  // unrestricted passes; a plain D-then-U pass is not an involution.
  down = complete_down(dag, order, down, up, order.below[v]);
  up = complete_up(dag, order, down, up, order.above[v]);
  down = complete_down(dag, order, down, up);
  up = complete_up(dag, order, down, up);
  return Top{down, up};
}

Top flip(const Dag& dag, const Top& top, std::uint32_t g) { return flip(dag, g_order(dag), top, g); }

std::vector<VertexMask> independent_sets(const Dag& dag, std::size_t cap) {
  std::vector<VertexMask> out;
  const std::size_t m = dag.vertex_count();
  std::function<void(std::size_t, VertexMask, VertexMask)> grow = [&](std::size_t v, VertexMask set,
                                                                     VertexMask blocked) {
    if (v == m) {
      out.push_back(set);
      if (out.size() > cap)
        throw std::length_error("more than " + std::to_string(cap) + " independent sets");
      return;
    }
    grow(v + 1, set, blocked);
    if (!(blocked & bit(v))) grow(v + 1, set | bit(v), blocked | dag.neighbors(v));
  };
  grow(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- independence poset -----------------------------------------------------

std::optional<std::size_t> IndependencePoset::index_of(const Top& top) const {
  auto it = std::lower_bound(tops.begin(), tops.end(), top,
                             [](const Top& a, const Top& b) { return a.down < b.down; });
  if (it == tops.end() || *it != top) return std::nullopt;
  return static_cast<std::size_t>(it - tops.begin());
}

std::vector<bool> IndependencePoset::interval_from(std::size_t from, bool upward) const {
  std::vector<std::vector<std::size_t>> next(tops.size());
  for (const auto& c : covers) {
    if (upward) next[c.lower].push_back(c.upper);
    else next[c.upper].push_back(c.lower);
  }
  std::vector<bool> seen(tops.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (auto y : next[x])
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
  }
  return seen;
}

IndependencePoset independence_poset(const Dag& dag, std::size_t cap) {
  IndependencePoset poset{dag, g_order(dag), {}, {}};
  for (VertexMask set : independent_sets(dag, cap))
    poset.tops.push_back(complete_to_top(dag, poset.order, set, Side::as_down));
  for (std::size_t i = 0; i < poset.tops.size(); ++i) {
    for_each_bit(poset.tops[i].up, [&](std::size_t v) {
      Top target = flip(dag, poset.order, poset.tops[i], static_cast<std::uint32_t>(v + 1));
      auto j = poset.index_of(target);
      if (!j) throw std::logic_error("flip left the set of tops");
      poset.covers.push_back({i, *j, static_cast<std::uint32_t>(v + 1)});
    });
  }
  return poset;
}

EdgeColoredGraph hasse_coloring(const IndependencePoset& poset) {
  std::vector<ColoredEdge> edges;
  for (const auto& c : poset.covers)
    edges.push_back({static_cast<Vertex>(c.lower), static_cast<Vertex>(c.upper), c.label});
  return EdgeColoredGraph(poset.tops.size(), poset.dag.vertex_count(), std::move(edges));
}

StructureCheck verify_structure_theorem(const Dag& dag, std::size_t cap) {
  StructureCheck check;
  auto poset = independence_poset(dag, cap);
  check.degree = poset.tops.size();
  check.connected = dag.is_connected();
  check.order = coloring_group(hasse_coloring(poset)).order();
  if (check.connected) {
    BigInt full = factorial(check.degree);
    check.expected = full / 2;
    check.holds = check.order * 2 >= full;
  } else {
    check.expected = 1;
    for (VertexMask comp : dag.components())
      check.expected *= coloring_group(hasse_coloring(independence_poset(dag.induced(comp), cap))).order();
    check.holds = check.order == check.expected;
  }
  return check;
}

// --- extremal decomposition -------------------------------------------------

namespace {

// Tops of `sub` written in the labels of the parent dag.
std::set<Top> lifted_tops(const Dag& sub, const std::vector<std::uint32_t>& labels) {
  std::set<Top> out;
  for (const auto& t : independence_poset(sub).tops) {
    Top lifted;
    for_each_bit(t.down, [&](std::size_t v) { lifted.down |= bit(labels[v] - 1); });
    for_each_bit(t.up, [&](std::size_t v) { lifted.up |= bit(labels[v] - 1); });
    out.insert(lifted);
  }
  return out;
}

bool is_bijection_onto(const std::vector<Top>& images, const std::set<Top>& target) {
  std::set<Top> image_set(images.begin(), images.end());
  return image_set.size() == images.size() && image_set == target;
}

ExtremalCheck check_extremal(const IndependencePoset& poset, std::size_t v, bool minimal) {
  const Dag& dag = poset.dag;
  ExtremalCheck check;
  check.minimal = minimal;
  const VertexMask g = bit(v);

  auto m_g = poset.index_of(complete_to_top(dag, poset.order, g, Side::as_up));
  auto j_g = poset.index_of(complete_to_top(dag, poset.order, g, Side::as_down));
  if (!m_g || !j_g) throw std::logic_error("m_g or j_g is missing from the poset");
  auto lower = poset.interval_from(*m_g, false);
  auto upper = poset.interval_from(*j_g, true);

  const std::size_t n = poset.tops.size();
  check.partition = true;
  check.membership = true;
  for (std::size_t i = 0; i < n; ++i) {
    check.lower_part += lower[i];
    check.upper_part += upper[i];
    if (lower[i] == upper[i]) check.partition = false;
    const Top& t = poset.tops[i];
    bool predicted = minimal ? (t.up & g) != 0 : (t.down & g) != 0;
    bool actual = minimal ? lower[i] : upper[i];
    if (predicted != actual) check.membership = false;
  }

  check.flips_preserve_parts = true;
  check.flip_at_g = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Top& t = poset.tops[i];
    for (std::uint32_t h = 1; h <= dag.vertex_count(); ++h) {
      Top f = flip(dag, poset.order, t, h);
      auto j = poset.index_of(f);
      if (!j) {
        check.flips_preserve_parts = false;
        continue;
      }
      if (h == v + 1) {
        if (minimal && lower[i] && f.down != (t.down | g)) check.flip_at_g = false;
        if (!minimal && upper[i] && f.up != (t.up | g)) check.flip_at_g = false;
      } else if (lower[i] != lower[*j] || upper[i] != upper[*j]) {
        check.flips_preserve_parts = false;
      }
    }
  }

  std::vector<std::uint32_t> without_labels, star_labels;
  Dag without = dag.induced(dag.all() & ~g, &without_labels);
  Dag star = dag.induced(dag.all() & ~(g | dag.neighbors(v)), &star_labels);
  std::vector<Top> lower_images, upper_images;
  for (std::size_t i = 0; i < n; ++i) {
    const Top& t = poset.tops[i];
    if (lower[i]) lower_images.push_back({t.down, t.up & ~g});
    if (upper[i]) upper_images.push_back({t.down & ~g, t.up});
  }
  const auto without_tops = lifted_tops(without, without_labels);
  const auto star_tops = lifted_tops(star, star_labels);
  check.lower_bijection = is_bijection_onto(lower_images, minimal ? star_tops : without_tops);
  check.upper_bijection = is_bijection_onto(upper_images, minimal ? without_tops : star_tops);
  return check;
}

}  // namespace

ExtremalCheck extremal_decomposition_check(const Dag& dag, std::uint32_t g) {
  if (g < 1 || g > dag.vertex_count()) throw std::invalid_argument("vertex out of range");
  const std::size_t v = g - 1;
  auto poset = independence_poset(dag);
  const bool minimal = poset.order.below[v] == 0;
  const bool maximal = poset.order.above[v] == 0;
  if (!minimal && !maximal)
    throw std::invalid_argument("vertex " + std::to_string(g) + " is neither minimal nor maximal");
  if (minimal && maximal) {
    // An isolated vertex is both; both readings must hold.
    auto a = check_extremal(poset, v, true);
    auto b = check_extremal(poset, v, false);
    a.partition &= b.partition;
    a.membership &= b.membership;
    a.flips_preserve_parts &= b.flips_preserve_parts;
    a.flip_at_g &= b.flip_at_g;
    a.lower_bijection &= b.lower_bijection;
    a.upper_bijection &= b.upper_bijection;
    return a;
  }
  return check_extremal(poset, v, minimal);
}

// --- inductive color-alternating certificates -------------------------------

namespace {

bool alternating_order(const EdgeColoredGraph& g) {
  return coloring_group(g).order() * 2 >= factorial(g.vertex_count());
}

struct CertificateSearch {
  std::set<std::vector<Vertex>> failed;

  std::optional<ColorAlternatingCertificate> run(const EdgeColoredGraph& g, const std::vector<Vertex>& ids) {
    const std::size_t n = g.vertex_count(), k = g.color_count();
    if (k <= 4) {
      if (!alternating_order(g)) return std::nullopt;
      return ColorAlternatingCertificate{{}, ColorAlternatingCertificate::Base::few_colors, ids};
    }
    if (n == 4) {
      if (!alternating_order(g)) return std::nullopt;
      return ColorAlternatingCertificate{{}, ColorAlternatingCertificate::Base::four_vertices, ids};
    }
    if (failed.count(ids)) return std::nullopt;
    for (Color i = 1; i <= k; ++i) {
      std::vector<Color> kept;
      for (Color c = 1; c <= k; ++c)
        if (c != i) kept.push_back(c);
      for (const auto& part : components(g, kept).components) {
        std::vector<bool> inside(n, false);
        for (Vertex v : part) inside[v] = true;
        bool fixed_vertex = false, internal_edge = false;
        for (Vertex v : part) {
          auto w = g.neighbor_by_color(v, i);
          if (!w) fixed_vertex = true;
          else if (inside[*w]) internal_edge = true;
        }
        if (!fixed_vertex || internal_edge) continue;
        bool covered = true;
        for (Vertex w = 0; w < n && covered; ++w) {
          if (inside[w]) continue;
          auto partner = g.neighbor_by_color(w, i);
          covered = partner && inside[*partner];
        }
        if (!covered) continue;
        std::vector<Vertex> sub_ids;
        for (Vertex v : part) sub_ids.push_back(ids[v]);
        auto sub = induced_subgraph(g, part);
        auto rest = run(sub, sub_ids);
        if (!rest) continue;
        std::vector<Vertex> original_part = sub_ids;
        std::sort(original_part.begin(), original_part.end());
        rest->steps.insert(rest->steps.begin(), CertificateStep{n, k, i, original_part});
        return rest;
      }
    }
    failed.insert(ids);
    return std::nullopt;
  }
};

}  // namespace

std::optional<ColorAlternatingCertificate> inductively_color_alternating_certificate(
    const EdgeColoredGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("certificate search needs a connected graph");
  std::vector<Vertex> ids(g.vertex_count());
  for (Vertex v = 0; v < ids.size(); ++v) ids[v] = v;
  return CertificateSearch{}.run(canonicalize_colors(g), ids);
}

// --- text format ------------------------------------------------------------

Dag parse_dag(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> m;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream fields{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    auto number = [&](const std::string& t) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + t + "'");
      return v;
    };
    if (!m) {
      if (tokens.size() != 1) throw ParseError(line_no, "first line must hold the vertex count");
      m = number(tokens[0]);
      if (*m > Dag::kMaxVertices) throw ParseError(line_no, "at most 32 vertices are supported");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "edge line must be 'a b'");
    auto a = number(tokens[0]), b = number(tokens[1]);
    if (a < 1 || b < 1 || a > *m || b > *m)
      throw ParseError(line_no, "vertex outside 1.." + std::to_string(*m));
    edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  if (!m) throw ParseError(0, "empty input: missing vertex count");
  try {
    return Dag(*m, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Dag parse_dag(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dag(in);
}

Dag read_dag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dag(in);
}

std::string to_text(const Dag& dag) {
  std::ostringstream out;
  out << dag.vertex_count() << '\n';
  for (const auto& [a, b] : dag.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace colorgroups
