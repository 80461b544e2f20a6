#include "colorgroups/survey.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "colorgroups/coloring_group.h"
#include "colorgroups/graph_io.h"

namespace colorgroups {

// --- free trees -------------------------------------------------------------

namespace {

using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = std::nullopt) {
  std::size_t p;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits off the first subtree of the root from the rest of the layout.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Advances to the next layout that is rooted at a center (or the first of a bicenter).
std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) valid = false;
    else if (left.size() == rest.size() && left > rest) valid = false;
  }
  if (valid) return candidate;
  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (!next) return std::nullopt;
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    const int height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t len = static_cast<std::size_t>(height) + 1;
    for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

TreeSkeleton layout_to_tree(const Layout& layout) {
  TreeSkeleton tree{layout.size(), {}};
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      tree.edges.push_back({static_cast<Vertex>(stack.back()), static_cast<Vertex>(i)});
    }
    stack.push_back(i);
  }
  return tree;
}

std::vector<std::vector<Vertex>> adjacency(const TreeSkeleton& tree) {
  std::vector<std::vector<Vertex>> adj(tree.n);
  for (const auto& [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<Vertex> centers(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : adj[leaf])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Rooted structure hanging from the center(s), with canonical subtree labels.
struct RootedTree {
  std::vector<Vertex> roots;  // one center, or both ends of the central edge
  std::vector<std::vector<Vertex>> children;
  std::vector<std::string> label;
};

RootedTree root_at_center(const TreeSkeleton& tree) {
  auto adj = adjacency(tree);
  RootedTree rooted{centers(adj), std::vector<std::vector<Vertex>>(tree.n), std::vector<std::string>(tree.n)};
  std::function<void(Vertex, std::optional<Vertex>, std::optional<Vertex>)> build =
      [&](Vertex v, std::optional<Vertex> parent, std::optional<Vertex> blocked) {
        std::vector<std::string> parts;
        for (Vertex w : adj[v]) {
          if (w == parent || w == blocked) continue;
          rooted.children[v].push_back(w);
          build(w, v, std::nullopt);
          parts.push_back(rooted.label[w]);
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (const auto& p : parts) out += p;
        rooted.label[v] = out + ")";
        std::sort(rooted.children[v].begin(), rooted.children[v].end(),
                  [&](Vertex a, Vertex b) { return std::tie(rooted.label[a], a) < std::tie(rooted.label[b], b); });
      };
  if (rooted.roots.size() == 1) {
    build(rooted.roots[0], std::nullopt, std::nullopt);
  } else {
    build(rooted.roots[0], std::nullopt, rooted.roots[1]);
    build(rooted.roots[1], std::nullopt, rooted.roots[0]);
  }
  return rooted;
}

}  // namespace

std::vector<TreeSkeleton> free_trees(std::size_t n) {
  if (n < 2 || n > 12) throw std::invalid_argument("free_trees needs 2 <= n <= 12");
  std::vector<TreeSkeleton> out;
  Layout start;
  for (std::size_t i = 0; i <= n / 2; ++i) start.push_back(static_cast<int>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) start.push_back(static_cast<int>(i));
  std::optional<Layout> layout = start;
  while (layout) {
    layout = next_tree(*layout);
    if (!layout) break;
    out.push_back(layout_to_tree(*layout));
    layout = next_rooted_tree(*layout);
  }
  return out;
}

std::size_t free_tree_count(std::size_t n) {
  static constexpr std::size_t counts[] = {1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  if (n < 2 || n > 12) throw std::invalid_argument("free_tree_count needs 2 <= n <= 12");
  return counts[n - 2];
}

std::string tree_canonical_form(const TreeSkeleton& tree) {
  if (tree.n == 0) return "";
  auto rooted = root_at_center(tree);
  if (rooted.roots.size() == 1) return rooted.label[rooted.roots[0]];
  auto a = rooted.label[rooted.roots[0]], b = rooted.label[rooted.roots[1]];
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

std::vector<Permutation> tree_automorphisms(const TreeSkeleton& tree) {
  std::vector<Permutation> out;
  if (tree.n == 0) return out;
  auto rooted = root_at_center(tree);
  std::vector<Point> image(tree.n);
  std::vector<std::pair<Vertex, Vertex>> pending;

  // Maps each pending (u, v) in turn, pairing children with equal labels in every possible way.
  std::function<void(std::size_t)> map_pending;
  std::function<void(std::size_t, const std::vector<Vertex>&, const std::vector<Vertex>&, std::size_t,
                     std::vector<bool>&)>
      pair_children = [&](std::size_t idx, const std::vector<Vertex>& from, const std::vector<Vertex>& to,
                          std::size_t i, std::vector<bool>& used) {
        if (i == from.size()) {
          map_pending(idx + 1);
          return;
        }
        for (std::size_t j = 0; j < to.size(); ++j) {
          if (used[j] || rooted.label[to[j]] != rooted.label[from[i]]) continue;
          used[j] = true;
          pending.emplace_back(from[i], to[j]);
          pair_children(idx, from, to, i + 1, used);
          pending.pop_back();
          used[j] = false;
        }
      };
  map_pending = [&](std::size_t idx) {
    if (idx == pending.size()) {
      out.emplace_back(image);
      return;
    }
    auto [u, v] = pending[idx];
    image[u] = v;
    std::vector<bool> used(rooted.children[v].size(), false);
    pair_children(idx, rooted.children[u], rooted.children[v], 0, used);
  };

  const auto& roots = rooted.roots;
  pending = {{roots[0], roots[0]}};
  if (roots.size() == 2) pending.emplace_back(roots[1], roots[1]);
  map_pending(0);
  if (roots.size() == 2 && rooted.label[roots[0]] == rooted.label[roots[1]]) {
    pending = {{roots[0], roots[1]}, {roots[1], roots[0]}};
    map_pending(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- colorings --------------------------------------------------------------

namespace {

using ColorWord = std::vector<std::uint8_t>;

// Relabels colors in order of first appearance.
ColorWord first_appearance(const ColorWord& word) {
  std::array<std::uint8_t, 64> relabel{};
  std::uint8_t next = 0;
  ColorWord out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto& r = relabel[word[i]];
    if (!r) r = ++next;
    out[i] = r;
  }
  return out;
}

}  // namespace

std::vector<EdgeColoredGraph> proper_colorings(const TreeSkeleton& tree, std::size_t min_colors,
                                               std::size_t max_colors) {
  const std::size_t m = tree.edges.size();
  max_colors = std::min<std::size_t>(max_colors, std::max<std::size_t>(m, 1));
  if (max_colors > 63) throw std::invalid_argument("too many colors");

  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_index;
  for (std::size_t e = 0; e < m; ++e) {
    auto [u, v] = tree.edges[e];
    edge_index[{std::min(u, v), std::max(u, v)}] = e;
  }
  std::vector<std::vector<std::size_t>> edge_maps;
  for (const auto& sigma : tree_automorphisms(tree)) {
    if (sigma.is_identity()) continue;
    std::vector<std::size_t> map(m);
    for (std::size_t e = 0; e < m; ++e) {
      Vertex a = sigma(tree.edges[e][0]), b = sigma(tree.edges[e][1]);
      map[e] = edge_index.at({std::min(a, b), std::max(a, b)});
    }
    edge_maps.push_back(std::move(map));
  }

  std::vector<EdgeColoredGraph> out;
  ColorWord word(m, 0), moved(m);
  std::vector<std::uint64_t> used_at(tree.n, 0);
  std::function<void(std::size_t, std::uint8_t)> assign = [&](std::size_t e, std::uint8_t used) {
    if (e == m) {
      if (used < min_colors) return;
      for (const auto& map : edge_maps) {
        for (std::size_t i = 0; i < m; ++i) moved[map[i]] = word[i];
        if (first_appearance(moved) < word) return;
      }
      std::vector<ColoredEdge> edges;
      for (std::size_t i = 0; i < m; ++i) edges.push_back({tree.edges[i][0], tree.edges[i][1], word[i]});
      out.emplace_back(tree.n, used, std::move(edges));
      return;
    }
    auto [u, v] = tree.edges[e];
    const std::size_t limit = std::min<std::size_t>(used + 1, max_colors);
    for (std::uint8_t c = 1; c <= limit; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if ((used_at[u] | used_at[v]) & bit) continue;
      used_at[u] |= bit;
      used_at[v] |= bit;
      word[e] = c;
      assign(e + 1, std::max<std::uint8_t>(used, c));
      used_at[u] &= ~bit;
      used_at[v] &= ~bit;
    }
  };
  assign(0, 0);
  return out;
}

std::optional<PathWord> as_path_word(const EdgeColoredGraph& g) {
  if (!is_tree(g)) return std::nullopt;
  Vertex start = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && g.degree(start) != 1) start = v;
  }
  PathWord word;
  std::optional<Vertex> prev;
  Vertex cur = start;
  while (true) {
    std::optional<std::pair<Vertex, Color>> step;
    for (const auto& [w, c] : g.incident(cur))
      if (w != prev) step = {w, c};
    if (!step) break;
    word.push_back(step->second);
    prev = cur;
    cur = step->first;
  }
  return word;
}

// --- survey -----------------------------------------------------------------

namespace {

std::string word_string(const PathWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? "," : "") + std::to_string(word[i]);
  return out;
}

std::string representative_string(const EdgeColoredGraph& g) {
  if (auto word = as_path_word(g)) {
    PathWord reversed(word->rbegin(), word->rend());
    auto relabel = [](const PathWord& w) {
      ColorWord bytes(w.begin(), w.end());
      auto canon = first_appearance(bytes);
      return PathWord(canon.begin(), canon.end());
    };
    return word_string(std::min(relabel(*word), relabel(reversed)));
  }
  std::string text = to_text(g);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  std::string out;
  for (char c : text) out += c == '\n' ? std::string("; ") : std::string(1, c);
  return out;
}

}  // namespace

EdgeColoredGraph representative_graph(const std::string& representative) {
  if (representative.find(';') == std::string::npos && representative.find(' ') == std::string::npos) {
    PathWord word;
    std::stringstream in(representative);
    for (std::string part; std::getline(in, part, ',');) {
      try {
        word.push_back(static_cast<Color>(std::stoul(part)));
      } catch (const std::exception&) {
        throw ParseError(1, "bad path word '" + representative + "'");
      }
    }
    return EdgeColoredGraph::path(word);
  }
  std::string text;
  for (char c : representative) text += c == ';' ? '\n' : c;
  return parse_graph(text);
}

std::vector<BigInt> SurveyResult::distinct_orders() const {
  std::vector<BigInt> orders;
  for (const auto& row : rows) orders.push_back(row.order);
  if (stats.skipped_symmetric_edge) orders.push_back(factorial(n));
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

std::vector<EdgeColoredGraph> survey_colorings(std::size_t n) {
  if (n < 2 || n > 10) throw std::invalid_argument("survey needs 2 <= n <= 10");
  std::vector<EdgeColoredGraph> out;
  for (const auto& tree : free_trees(n))
    for (auto& g : proper_colorings(tree, 1, n - 1)) out.push_back(std::move(g));
  return out;
}

ColoringVerdict analyze_survey_coloring(const EdgeColoredGraph& g, const SurveyOptions& options) {
  ColoringVerdict v;
  const std::size_t n = g.vertex_count();
  auto symmetric = find_symmetric_edges(g);
  if (options.skip_symmetric_edge && !symmetric.empty()) {
    v.skipped = true;
    return v;
  }
  auto group = coloring_group(g);
  v.order = group.order();
  v.primitive = group.is_primitive();
  v.fingerprint = fingerprint(group);
  if (!symmetric.empty()) {
    v.symmetric_edge = true;
    v.symmetric_edge_ok = v.order == factorial(n);
    for (const auto& edge : symmetric)
      v.symmetric_edge_ok = v.symmetric_edge_ok && symmetric_edge_witness(g, edge, v.order).ok();
  }
  if (g.color_count() >= 3) {
    v.size_bound_checked = true;
    v.size_bound_ok = size_bound_check(g, v.order).holds;
  }
  auto nu = imprimitive_vertex_coloring(g, group);
  v.primitivity_ok = nu.has_value() != v.primitive && (!nu || check_vertex_coloring(g, *nu).ok());
  if (!v.primitive) {
    v.aba_checked = true;
    v.aba_ok = find_aba_path(g).has_value();
  }
  return v;
}

SurveyResult collect_survey(std::size_t n, const SurveyOptions& options,
                            const std::vector<EdgeColoredGraph>& colorings,
                            const std::vector<ColoringVerdict>& verdicts) {
  if (colorings.size() != verdicts.size()) throw std::invalid_argument("one verdict per coloring expected");
  SurveyResult result;
  result.n = n;
  result.options = options;
  auto& s = result.stats;
  s.trees = free_tree_count(n);
  s.colorings = colorings.size();
  std::map<Fingerprint, SurveyRow> rows;
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const auto& v = verdicts[i];
    if (v.skipped) {
      ++s.skipped_symmetric_edge;
      continue;
    }
    ++s.analyzed;
    s.symmetric_edge_colorings += v.symmetric_edge;
    s.symmetric_edge_failures += !v.symmetric_edge_ok;
    s.size_bound_checked += v.size_bound_checked;
    s.size_bound_failures += !v.size_bound_ok;
    ++s.primitivity_checked;
    s.primitivity_failures += !v.primitivity_ok;
    s.aba_checked += v.aba_checked;
    s.aba_failures += !v.aba_ok;
    auto [it, fresh] = rows.try_emplace(v.fingerprint);
    if (fresh)
      it->second = SurveyRow{n, colorings[i].color_count(), v.order, v.primitive, v.fingerprint,
                             representative_string(colorings[i]), 0};
    ++it->second.colorings;
  }
  for (auto& [key, row] : rows) result.rows.push_back(std::move(row));
  return result;
}

SurveyResult survey(std::size_t n, const SurveyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  auto colorings = survey_colorings(n);
  std::vector<ColoringVerdict> verdicts;
  verdicts.reserve(colorings.size());
  for (const auto& g : colorings) verdicts.push_back(analyze_survey_coloring(g, options));
  auto result = collect_survey(n, options, colorings, verdicts);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::string to_csv(const SurveyResult& result) {
  std::ostringstream out;
  out << "order,primitive,k,representative,colorings\n";
  for (const auto& row : result.rows)
    out << row.order << ',' << (row.primitive ? "yes" : "no") << ',' << row.k << ",\"" << row.representative
        << "\"," << row.colorings << '\n';
  return out.str();
}

nlohmann::json manifest_json(const SurveyResult& result) {
  const auto& s = result.stats;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : result.rows)
    rows.push_back({{"order", bigint_json(row.order)},
                    {"primitive", row.primitive},
                    {"k", row.k},
                    {"colorings", row.colorings},
                    {"representative", row.representative}});
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : result.distinct_orders()) orders.push_back(bigint_json(o));
  return {
      {"degree", result.n},
      {"skip_symmetric_edge", result.options.skip_symmetric_edge},
      {"trees", s.trees},
      {"colorings", s.colorings},
      {"analyzed", s.analyzed},
      {"skipped_symmetric_edge", s.skipped_symmetric_edge},
      {"checks",
       {{"symmetric_edge", {{"colorings", s.symmetric_edge_colorings}, {"failures", s.symmetric_edge_failures}}},
        {"size_bound", {{"checked", s.size_bound_checked}, {"failures", s.size_bound_failures}}},
        {"primitivity", {{"checked", s.primitivity_checked}, {"failures", s.primitivity_failures}}},
        {"aba_path", {{"checked", s.aba_checked}, {"failures", s.aba_failures}}}}},
      {"distinct_orders", orders},
      {"rows", rows},
  };
}

// --- table ------------------------------------------------------------------

namespace {

EdgeColoredGraph tree_from(std::size_t n, std::initializer_list<std::array<int, 3>> edges, bool one_based) {
  std::vector<ColoredEdge> out;
  const int shift = one_based ? 1 : 0;
  for (const auto& [u, v, c] : edges)
    out.push_back({static_cast<Vertex>(u - shift), static_cast<Vertex>(v - shift), static_cast<Color>(c)});
  return canonicalize_colors(EdgeColoredGraph::from_edges(n, std::move(out)));
}

TableEntry path_entry(std::uint64_t order, std::vector<Color> word) {
  auto g = EdgeColoredGraph::path(word);
  return {"path " + word_string(word), g.vertex_count(), order, false, g};
}

}  // namespace

const std::vector<TableEntry>& coloring_table() {
  static const std::vector<TableEntry> table = [] {
    std::vector<TableEntry> t;
    t.push_back({"tree 168", 7, 168, true,
                 tree_from(7, {{1, 2, 1}, {3, 4, 1}, {2, 3, 2}, {5, 6, 2}, {0, 1, 3}, {2, 5, 3}}, false)});
    t.push_back({"tree 648", 9, 648, false,
                 tree_from(9, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 2}, {5, 6, 3}, {1, 7, 2}, {1, 8, 3}, {2, 9, 3}},
                           true)});
    t.push_back(path_entry(200, {1, 2, 1, 3, 1, 2, 1, 3, 1}));
    t.push_back(path_entry(240, {1, 2, 1, 3, 1, 3, 1, 2, 1}));
    t.push_back(path_entry(14400, {1, 2, 1, 2, 1, 3, 1, 3, 1}));
    t.push_back(path_entry(288, {1, 2, 1, 3, 1, 2, 1, 3, 1, 2, 1}));
    t.push_back(path_entry(768, {1, 2, 3, 2, 1, 2, 1, 2, 3, 2, 1}));
    t.push_back(path_entry(1296, {1, 2, 3, 2, 3, 2, 1, 2, 1, 2, 3}));
    t.push_back({"tree 1536", 12, 1536, false,
                 tree_from(12, {{1, 5, 1}, {2, 4, 1}, {7, 9, 1}, {6, 10, 1}, {2, 3, 2}, {8, 9, 2},
                                {0, 1, 2}, {10, 11, 2}, {1, 2, 3}, {9, 10, 3}, {5, 6, 3}},
                           false)});
    t.push_back(path_entry(4608, {1, 2, 1, 3, 1, 3, 1, 3, 1, 2, 1}));
    t.push_back({"tree 5184", 12, 5184, false,
                 tree_from(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 3}, {5, 6, 1}, {6, 7, 3},
                                {7, 8, 2}, {8, 9, 1}, {6, 10, 2}, {10, 11, 1}, {7, 12, 1}},
                           true)});
    t.push_back({"tree 6912", 12, 6912, false,
                 tree_from(12, {{0, 4, 1}, {1, 5, 1}, {2, 6, 1}, {3, 7, 1}, {0, 11, 2}, {1, 10, 2},
                                {2, 9, 2}, {3, 8, 2}, {1, 2, 3}, {4, 6, 3}, {8, 10, 3}},
                           false)});
    t.push_back(path_entry(15552, {1, 2, 3, 4, 3, 2, 1, 4, 1, 2, 3}));
    t.push_back({"tree 23040", 12, 23040, false,
                 tree_from(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 3}, {5, 4, 2}, {5, 6, 3}, {6, 7, 2},
                                {7, 8, 3}, {8, 9, 2}, {9, 10, 1}, {3, 11, 1}, {8, 12, 1}},
                           true)});
    t.push_back({"tree 31104", 12, 31104, false,
                 tree_from(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 2}, {5, 6, 1}, {6, 7, 2},
                                {1, 8, 3}, {1, 9, 2}, {7, 10, 1}, {7, 11, 3}, {4, 12, 3}},
                           true)});
    t.push_back({"tree 82944", 12, 82944, false,
                 tree_from(12, {{1, 2, 1}, {3, 2, 2}, {3, 4, 1}, {5, 4, 2}, {5, 6, 3}, {6, 7, 2},
                                {7, 8, 3}, {8, 9, 2}, {9, 10, 1}, {5, 11, 1}, {6, 12, 1}},
                           true)});
    t.push_back(path_entry(1036800, {1, 2, 1, 2, 1, 3, 1, 3, 1, 3, 1}));
    return t;
  }();
  return table;
}

TableCheck check_table_row(const TableEntry& entry) {
  const auto started = std::chrono::steady_clock::now();
  TableCheck check;
  check.entry = &entry;
  auto group = coloring_group(entry.graph);
  check.order = group.order();
  check.primitive = group.is_primitive();
  check.pass = check.order == entry.order && check.primitive == entry.primitive;
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return check;
}

std::vector<TableCheck> check_table() {
  std::vector<TableCheck> out;
  for (const auto& entry : coloring_table()) out.push_back(check_table_row(entry));
  return out;
}

}  // namespace colorgroups
