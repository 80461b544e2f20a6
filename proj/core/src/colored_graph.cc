#include "colorgroups/colored_graph.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace colorgroups {

EdgeColoredGraph::EdgeColoredGraph(std::size_t vertex_count, std::size_t color_count,
                                   std::vector<ColoredEdge> edges)
    : n_(vertex_count), k_(color_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  for (const auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_)
      throw std::out_of_range("edge endpoint out of range: " + std::to_string(e.u) + " " +
                              std::to_string(e.v) + " with n = " + std::to_string(n_));
    adjacency_[e.u].emplace_back(e.v, e.color);
    if (e.u != e.v) adjacency_[e.v].emplace_back(e.u, e.color);
  }
}

EdgeColoredGraph EdgeColoredGraph::from_edges(std::size_t vertex_count,
                                              std::vector<ColoredEdge> edges) {
  Color k = 0;
  for (const auto& e : edges) k = std::max(k, e.color);
  return EdgeColoredGraph(vertex_count, k, std::move(edges));
}

EdgeColoredGraph EdgeColoredGraph::path(const std::vector<Color>& word) {
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < word.size(); ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), word[i]});
  return from_edges(word.size() + 1, std::move(edges));
}

std::optional<Vertex> EdgeColoredGraph::neighbor_by_color(Vertex v, Color color) const {
  for (const auto& [w, c] : adjacency_[v])
    if (c == color) return w;
  return std::nullopt;
}

std::optional<std::size_t> EdgeColoredGraph::edge_between(Vertex u, Vertex v) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return i;
  }
  return std::nullopt;
}

std::vector<std::string> validate(const EdgeColoredGraph& g) {
  std::vector<std::string> problems;
  auto describe = [](std::size_t i, const ColoredEdge& e) {
    return "edge #" + std::to_string(i) + " (" + std::to_string(e.u) + "," +
           std::to_string(e.v) + ",c" + std::to_string(e.color) + ")";
  };
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  std::map<std::pair<Vertex, Color>, std::size_t> color_at;
  std::vector<bool> used(g.color_count() + 1, false);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (e.u == e.v) problems.push_back(describe(i, e) + " is a loop");
    auto key = std::minmax(e.u, e.v);
    if (auto [it, fresh] = seen.emplace(key, i); !fresh)
      problems.push_back(describe(i, e) + " duplicates " + describe(it->second, g.edges()[it->second]));
    if (e.color < 1 || e.color > g.color_count()) {
      problems.push_back(describe(i, e) + " has color outside 1.." +
                         std::to_string(g.color_count()));
    } else {
      used[e.color] = true;
    }
    for (Vertex end : {e.u, e.v}) {
      if (end == e.v && e.u == e.v) break;
      if (auto [it, fresh] = color_at.emplace(std::make_pair(end, e.color), i); !fresh)
        problems.push_back("incident same color at vertex " + std::to_string(end) + ": " +
                           describe(it->second, g.edges()[it->second]) + " and " +
                           describe(i, e));
    }
  }
  for (Color c = 1; c <= g.color_count(); ++c)
    if (!used[c]) problems.push_back("color " + std::to_string(c) + " is unused");
  return problems;
}

EdgeColoredGraph canonicalize_colors(const EdgeColoredGraph& g) {
  std::map<Color, Color> relabel;
  std::vector<ColoredEdge> edges = g.edges();
  for (auto& e : edges) {
    auto [it, fresh] = relabel.emplace(e.color, static_cast<Color>(relabel.size() + 1));
    e.color = it->second;
  }
  return EdgeColoredGraph(g.vertex_count(), relabel.size(), std::move(edges));
}

EdgeColoredGraph induced_subgraph(const EdgeColoredGraph& g, const std::vector<Vertex>& vertices) {
  std::vector<long> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<long>(i);
  std::vector<ColoredEdge> edges;
  for (const auto& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0)
      edges.push_back({static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]), e.color});
  return canonicalize_colors(EdgeColoredGraph(vertices.size(), 0, std::move(edges)));
}

ColorSubgraph components(const EdgeColoredGraph& g, const std::vector<Color>& kept_colors) {
  ColorSubgraph out;
  out.kept_colors = kept_colors;
  std::sort(out.kept_colors.begin(), out.kept_colors.end());
  std::set<Color> kept(kept_colors.begin(), kept_colors.end());
  const std::size_t n = g.vertex_count();
  out.component_of.assign(n, n);
  for (Vertex start = 0; start < n; ++start) {
    if (out.component_of[start] != n) continue;
    std::size_t id = out.components.size();
    out.components.emplace_back();
    std::deque<Vertex> queue{start};
    out.component_of[start] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      out.components[id].push_back(v);
      for (const auto& [w, c] : g.incident(v)) {
        if (!kept.count(c) || out.component_of[w] != n) continue;
        out.component_of[w] = id;
        queue.push_back(w);
      }
    }
    std::sort(out.components[id].begin(), out.components[id].end());
  }
  return out;
}

ColorSubgraph components(const EdgeColoredGraph& g) { return components(g, all_colors(g)); }

std::vector<std::size_t> ColorSubgraph::component_orders() const {
  std::vector<std::size_t> orders;
  for (const auto& c : components) orders.push_back(c.size());
  return orders;
}

std::vector<Color> all_colors(const EdgeColoredGraph& g) {
  std::set<Color> colors;
  for (const auto& e : g.edges()) colors.insert(e.color);
  return {colors.begin(), colors.end()};
}

std::vector<Color> incident_colors(const EdgeColoredGraph& g, Vertex v) {
  std::vector<Color> out;
  for (const auto& [w, c] : g.incident(v)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const EdgeColoredGraph& g) {
  if (g.vertex_count() == 0) return false;
  return components(g).components.size() == 1;
}

bool is_tree(const EdgeColoredGraph& g) {
  return is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

bool is_forest(const EdgeColoredGraph& g) {
  return g.edge_count() + components(g).components.size() == g.vertex_count();
}

namespace {

// Number of even-order components after deleting every edge whose color bit
// is in `removed`. Reuses the caller's scratch buffers.
std::size_t even_components(std::size_t n, const std::vector<ColoredEdge>& edges,
                            const std::vector<std::uint32_t>& edge_bits, std::uint32_t removed,
                            std::vector<std::size_t>& parent, std::vector<std::size_t>& size) {
  for (std::size_t v = 0; v < n; ++v) {
    parent[v] = v;
    size[v] = 1;
  }
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_bits[i] & removed) continue;
    std::size_t a = find(edges[i].u), b = find(edges[i].v);
    if (a == b) continue;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  std::size_t even = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (parent[v] == v && size[v] % 2 == 0) ++even;
  return even;
}

}  // namespace

std::vector<SymmetricEdge> find_symmetric_edges(const EdgeColoredGraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("symmetric edges are defined here for trees only");
  const auto colors = all_colors(g);
  if (colors.size() > 20) throw std::length_error("too many colors for subset search");
  std::map<Color, std::size_t> bit_of;
  for (std::size_t i = 0; i < colors.size(); ++i) bit_of[colors[i]] = i;
  std::vector<std::uint32_t> edge_bits;
  for (const auto& e : g.edges()) edge_bits.push_back(1u << bit_of[e.color]);
  std::vector<std::size_t> parent(g.vertex_count()), size(g.vertex_count());
  const std::uint32_t full = (1u << colors.size()) - 1;

  std::vector<SymmetricEdge> out;
  for (std::size_t idx = 0; idx < g.edges().size(); ++idx) {
    const auto& e = g.edges()[idx];
    std::uint32_t at_u = 0, at_v = 0;
    for (const auto& [w, c] : g.incident(e.u))
      if (w != e.v) at_u |= 1u << bit_of[c];
    for (const auto& [w, c] : g.incident(e.v))
      if (w != e.u) at_v |= 1u << bit_of[c];
    if (at_u & at_v) continue;  // incident colors must be pairwise distinct

    const std::uint32_t required = at_u | at_v;
    const std::uint32_t free_bits = full & ~required & ~edge_bits[idx];
    // Subsets of the free colors in increasing order.
    for (std::uint32_t sub = 0;; sub = (sub - free_bits) & free_bits) {
      const std::uint32_t mask = required | sub;
      if (even_components(g.vertex_count(), g.edges(), edge_bits, mask, parent, size) == 1) {
        SymmetricEdge found{idx, {}};
        for (std::size_t i = 0; i < colors.size(); ++i)
          if (mask & (1u << i)) found.witness.push_back(colors[i]);
        out.push_back(std::move(found));
        break;
      }
      if (sub == free_bits) break;
    }
  }
  return out;
}

PathWord path_word(const EdgeColoredGraph& g, const std::vector<Vertex>& path) {
  std::set<Vertex> visited;
  PathWord word;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.vertex_count())
      throw std::invalid_argument("path vertex " + std::to_string(path[i]) + " out of range");
    if (!visited.insert(path[i]).second)
      throw std::invalid_argument("path repeats vertex " + std::to_string(path[i]));
    if (i == 0) continue;
    auto edge = g.edge_between(path[i - 1], path[i]);
    if (!edge)
      throw std::invalid_argument("no edge between " + std::to_string(path[i - 1]) + " and " +
                                  std::to_string(path[i]));
    word.push_back(g.edges()[*edge].color);
  }
  return word;
}

bool is_toggle_word(const PathWord& word) {
  if (word.size() < 2) return false;
  std::map<Color, std::size_t> index;
  for (Color c : word) index.emplace(c, index.size());
  for (std::size_t start = 0; start < word.size(); ++start) {
    std::vector<bool> odd(index.size(), false);
    std::size_t odd_count = 0;
    for (std::size_t end = start; end < word.size(); ++end) {
      std::size_t letter = index[word[end]];
      odd[letter] = !odd[letter];
      odd_count += odd[letter] ? 1 : std::size_t(-1);
      if (end > start && odd_count < 2) return false;
    }
  }
  return true;
}

std::vector<Vertex> tree_path(const EdgeColoredGraph& g, Vertex from, Vertex to) {
  const std::size_t n = g.vertex_count();
  std::vector<long> parent(n, -2);
  std::deque<Vertex> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (const auto& [w, c] : g.incident(v)) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) throw std::invalid_argument("vertices are not connected");
  std::vector<Vertex> path;
  for (long v = to; v != -1; v = parent[static_cast<std::size_t>(v)])
    path.push_back(static_cast<Vertex>(v));
  std::reverse(path.begin(), path.end());
  return path;
}

TogglePathReport all_tree_paths_toggle(const EdgeColoredGraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("toggle-word path check requires a tree");
  TogglePathReport report;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      auto path = tree_path(g, a, b);
      if (path.size() < 3) continue;
      auto word = path_word(g, path);
      if (!is_toggle_word(word)) {
        report.all_toggle = false;
        report.failing_path = std::move(path);
        report.failing_word = std::move(word);
        return report;
      }
    }
  }
  return report;
}

std::optional<std::vector<Vertex>> find_aba_path(const EdgeColoredGraph& g) {
  for (const auto& e : g.edges()) {
    for (const auto& [x, a] : g.incident(e.u)) {
      if (a == e.color) continue;
      if (auto y = g.neighbor_by_color(e.v, a)) return std::vector<Vertex>{x, e.u, e.v, *y};
    }
  }
  return std::nullopt;
}

std::string to_string(const PathWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace colorgroups
