#include "colorgroups/coloring_group.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "colorgroups/automorphisms.h"

namespace colorgroups {

std::vector<Permutation> generators(const EdgeColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Point>> images(g.color_count());
  for (auto& im : images) {
    im.resize(n);
    std::iota(im.begin(), im.end(), Point{0});
  }
  for (const auto& e : g.edges()) {
    if (e.color < 1 || e.color > g.color_count())
      throw std::invalid_argument("edge color " + std::to_string(e.color) + " outside 1.." +
                                  std::to_string(g.color_count()));
    auto& im = images[e.color - 1];
    std::swap(im[e.u], im[e.v]);
  }
  std::vector<Permutation> out;
  out.reserve(images.size());
  // Throws if two same-colored edges share a vertex, which breaks the bijection.
  for (auto& im : images) out.emplace_back(std::move(im));
  return out;
}

PermutationGroup coloring_group(const EdgeColoredGraph& g) {
  return PermutationGroup(g.vertex_count(), generators(g));
}

// --- imprimitive vertex colorings -------------------------------------------

std::size_t ImprimitiveVertexColoring::class_count() const {
  return nu.empty() ? 0 : *std::max_element(nu.begin(), nu.end());
}

std::vector<std::vector<Vertex>> ImprimitiveVertexColoring::classes() const {
  std::vector<std::vector<Vertex>> out(class_count());
  for (Vertex v = 0; v < nu.size(); ++v) out[nu[v] - 1].push_back(v);
  return out;
}

VertexColoringCheck check_vertex_coloring(const EdgeColoredGraph& g,
                                          const ImprimitiveVertexColoring& coloring) {
  VertexColoringCheck check;
  const auto& nu = coloring.nu;
  const std::size_t n = g.vertex_count();
  if (nu.size() != n) {
    check.failure = "vertex coloring has " + std::to_string(nu.size()) + " entries for " +
                    std::to_string(n) + " vertices";
    return check;
  }
  if (std::any_of(nu.begin(), nu.end(), [](std::uint32_t c) { return c == 0; })) {
    check.failure = "vertex colors must be positive";
    return check;
  }

  check.condition_i = true;
  for (const auto& e : g.edges()) {
    for (auto [from, to] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const std::uint32_t a = nu[from], c = nu[to];
      if (a == c) continue;
      for (Vertex w = 0; w < n && check.condition_i; ++w) {
        if (nu[w] != a) continue;
        auto partner = g.neighbor_by_color(w, e.color);
        if (!partner || nu[*partner] != c) {
          check.condition_i = false;
          check.failure = "condition (i): vertex " + std::to_string(w) + " has no color-" +
                          std::to_string(e.color) + " edge into class " + std::to_string(c);
        }
      }
    }
    if (!check.condition_i) break;
  }

  std::vector<std::size_t> sizes(coloring.class_count() + 1, 0);
  for (auto c : nu) ++sizes[c];
  check.condition_ii = std::any_of(sizes.begin(), sizes.end(),
                                   [n](std::size_t s) { return s > 1 && s < n; });
  if (!check.condition_ii && check.failure.empty())
    check.failure = "condition (ii): no class has size strictly between 1 and n";
  return check;
}

ImprimitiveVertexColoring vertex_coloring_from_blocks(const EdgeColoredGraph& g,
                                                      const BlockSystem& blocks) {
  ImprimitiveVertexColoring out;
  out.nu.assign(g.vertex_count(), 0);
  for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
    for (Point x : blocks.blocks[b]) out.nu[x] = static_cast<std::uint32_t>(b + 1);
  return out;
}

std::optional<ImprimitiveVertexColoring> imprimitive_vertex_coloring(const EdgeColoredGraph& g,
                                                                    const PermutationGroup& group) {
  if (!group.is_transitive())
    throw std::domain_error("coloring group is intransitive; its orbits already form an invariant partition");
  auto systems = group.block_systems();
  if (systems.empty()) return std::nullopt;
  return vertex_coloring_from_blocks(g, systems.front());
}

std::optional<ImprimitiveVertexColoring> imprimitive_vertex_coloring(const EdgeColoredGraph& g) {
  return imprimitive_vertex_coloring(g, coloring_group(g));
}

// --- long cycles ------------------------------------------------------------

LongCycleResult long_cycle_check(const EdgeColoredGraph& g, const std::vector<Color>& color_order) {
  if (!is_forest(g)) throw std::invalid_argument("long_cycle_check needs a forest");
  std::vector<Color> sorted = color_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != all_colors(g) || sorted.size() != g.color_count())
    throw std::invalid_argument("color order must be a permutation of 1..k");
  auto taus = generators(g);
  std::vector<Permutation> factors;
  for (Color c : color_order) factors.push_back(taus[c - 1]);
  LongCycleResult result;
  result.product = product(factors, g.vertex_count()).cycle_type();
  auto orders = components(g).component_orders();
  std::sort(orders.rbegin(), orders.rend());
  result.component_orders.parts = std::move(orders);
  return result;
}

// --- size bound -------------------------------------------------------------

std::uint64_t euler_totient(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::string SizeBound::bound_string() const {
  std::uint64_t num = n * n, den = n - phi;
  std::uint64_t d = std::gcd(num, den);
  num /= d;
  den /= d;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

SizeBound size_bound_check(const EdgeColoredGraph& g, const BigInt& order) {
  if (!is_tree(g)) throw std::invalid_argument("size bound needs a tree");
  if (g.color_count() < 3) throw std::invalid_argument("size bound needs at least three colors");
  SizeBound out;
  out.n = g.vertex_count();
  out.phi = euler_totient(out.n);
  out.order = order;
  out.holds = order * BigInt(out.n - out.phi) >= BigInt(out.n) * out.n;
  return out;
}

SizeBound size_bound_check(const EdgeColoredGraph& g) {
  return size_bound_check(g, coloring_group(g).order());
}

// --- tree centralizer -------------------------------------------------------

bool TreeCentralizer::ok() const {
  if (aut_order == 1) return !signed_embedding;
  return aut_order == 2 && signed_embedding && signed_embedding->divides;
}

TreeCentralizer tree_centralizer_check(const EdgeColoredGraph& g, const BigInt& order) {
  if (!is_tree(g)) throw std::invalid_argument("tree_centralizer_check needs a tree");
  TreeCentralizer out;
  out.aut_order = colored_automorphism_elements(g).size();
  if (out.aut_order == 2) {
    SignedEmbedding emb;
    const std::size_t n = g.vertex_count();
    emb.m = n / 2;
    emb.signed_order = (BigInt(1) << emb.m) * factorial(emb.m);
    emb.divides = n % 2 == 0 && emb.signed_order % order == 0;
    out.signed_embedding = emb;
  }
  return out;
}

TreeCentralizer tree_centralizer_check(const EdgeColoredGraph& g) {
  return tree_centralizer_check(g, coloring_group(g).order());
}

// --- symmetric edges --------------------------------------------------------

namespace {

Permutation product_over(const std::vector<Permutation>& taus, const std::vector<Color>& colors,
                         std::size_t degree) {
  Permutation out(degree);
  for (Color c : colors) out = out * taus[c - 1];
  return out;
}

}  // namespace

SymmetricEdgeWitness symmetric_edge_witness(const EdgeColoredGraph& g, const SymmetricEdge& edge,
                                            const BigInt& order) {
  const std::size_t n = g.vertex_count();
  const auto& e = g.edges().at(edge.edge);
  const auto taus = generators(g);
  const auto colors = all_colors(g);

  SymmetricEdgeWitness w;
  w.edge = edge.edge;
  w.deleted_colors = edge.witness;
  w.i = e.u;
  w.j = e.v;

  std::vector<Color> kept;
  std::set_difference(colors.begin(), colors.end(), edge.witness.begin(), edge.witness.end(),
                      std::back_inserter(kept));
  w.pi = product_over(taus, kept, n);
  w.m = 1;
  for (std::size_t size : components(g, kept).component_orders())
    if (size % 2 == 1) w.m = boost::multiprecision::lcm(w.m, BigInt(size));
  BigInt exponent = w.m % w.pi.order();
  w.pi_power = w.pi.pow(static_cast<std::int64_t>(exponent));
  w.pi_power_is_transposition = w.pi_power == Permutation::transposition(n, w.i, w.j);

  const auto k_i = incident_colors(g, w.i);
  std::vector<Color> first, second;
  for (Color c : k_i)
    if (c != e.color) first.push_back(c);
  std::set_difference(colors.begin(), colors.end(), k_i.begin(), k_i.end(),
                      std::back_inserter(second));
  w.sigma = product_over(taus, first, n) * taus[e.color - 1] * product_over(taus, second, n);
  w.sigma_maps_i_to_j = w.sigma(w.i) == w.j;
  w.sigma_is_n_cycle = w.sigma.cycle_type().parts == std::vector<std::size_t>{n};
  w.order_is_factorial = order == factorial(n);
  return w;
}

std::optional<SymmetricEdgeWitness> symmetric_edge_theorem_check(const EdgeColoredGraph& g) {
  auto found = find_symmetric_edges(g);
  if (found.empty()) return std::nullopt;
  return symmetric_edge_witness(g, found.front(), coloring_group(g).order());
}

// --- restricted trees -------------------------------------------------------

std::vector<RestrictedTree> restricted_tree_report(const EdgeColoredGraph& g) {
  const std::size_t k = g.color_count();
  if (k > 12) throw std::length_error("restricted_tree_report supports at most 12 colors");
  const std::size_t n = g.vertex_count();
  std::vector<RestrictedTree> out;
  std::vector<Vertex> parent(n);
  std::vector<bool> touched(n);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::fill(touched.begin(), touched.end(), false);
    std::size_t edges = 0, vertices = 0, merges = 0;
    bool cycle = false;
    for (const auto& e : g.edges()) {
      if (!(mask >> (e.color - 1) & 1)) continue;
      ++edges;
      for (Vertex x : {e.u, e.v})
        if (!touched[x]) {
          touched[x] = true;
          ++vertices;
        }
      Vertex a = find(e.u), b = find(e.v);
      if (a == b) {
        cycle = true;
        break;
      }
      parent[a] = b;
      ++merges;
    }
    if (cycle || edges == 0 || merges != vertices - 1) continue;
    RestrictedTree r;
    for (Color c = 1; c <= k; ++c)
      if (mask >> (c - 1) & 1) r.colors.push_back(c);
    r.m = vertices;
    r.n_minus_m = n - vertices;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RestrictedTree& a, const RestrictedTree& b) {
    return std::tie(a.n_minus_m, a.colors) < std::tie(b.n_minus_m, b.colors);
  });
  return out;
}

std::vector<std::string> restricted_tree_tags(const std::vector<RestrictedTree>& records,
                                              std::size_t n, bool primitive,
                                              bool contains_alternating) {
  std::vector<std::string> tags;
  if (!primitive || contains_alternating) return tags;
  auto add = [&](std::string tag) {
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(std::move(tag));
  };
  for (const auto& r : records) {
    if (r.n_minus_m >= 3) {
      add("unexpected: primitive, n-m=" + std::to_string(r.n_minus_m) +
          " >= 3, yet the alternating group is not contained");
      continue;
    }
    if (r.colors.size() <= 2) continue;
    switch (r.n_minus_m) {
      case 2: add("n-m=2: candidate projective line case, n=" + std::to_string(n) + "=q+1"); break;
      case 1: add("n-m=1: candidate affine case, n=" + std::to_string(n) + "=q^d"); break;
      default: add("n-m=0: candidate projective space case, n=" + std::to_string(n)); break;
    }
  }
  return tags;
}

// --- analysis ---------------------------------------------------------------

AnalysisReport analyze(const EdgeColoredGraph& g) {
  AnalysisReport r;
  r.n = g.vertex_count();
  r.k = g.color_count();
  PermutationGroup group = coloring_group(g);
  r.order = group.order();
  r.transitive = group.is_transitive();
  r.primitive = group.is_primitive();
  r.contains_alternating = group.contains_alternating();
  r.is_tree = is_tree(g);
  r.is_forest = is_forest(g);
  r.fingerprint = fingerprint(group);
  r.orbits = group.orbits();
  if (r.transitive) {
    auto systems = group.block_systems();
    if (!systems.empty()) {
      r.block_system = systems.front();
      r.vertex_coloring = vertex_coloring_from_blocks(g, systems.front());
    }
  }
  try {
    r.aut_order = colored_automorphism_elements(g).size();
  } catch (const std::length_error&) {
    r.advisory_tags.push_back("automorphism enumeration exceeded its cap; aut_order left at 0");
  }
  if (r.is_forest) {
    auto order = all_colors(g);
    r.long_cycle_type = long_cycle_check(g, order).product;
  }
  if (r.is_tree) {
    if (r.k >= 3) r.size_bound = size_bound_check(g, r.order);
    r.tree_centralizer = tree_centralizer_check(g, r.order);
    if (r.k <= 20) {
      r.symmetric_edges = find_symmetric_edges(g);
      if (!r.symmetric_edges->empty())
        r.symmetric_edge_witness = symmetric_edge_witness(g, r.symmetric_edges->front(), r.order);
    }
    auto paths = all_tree_paths_toggle(g);
    r.toggle_clean = paths.all_toggle;
    if (!paths.all_toggle) r.toggle_failure_path = paths.failing_path;
  }
  if (r.k <= 12) {
    r.restricted_trees = restricted_tree_report(g);
    auto tags = restricted_tree_tags(*r.restricted_trees, r.n, r.primitive, r.contains_alternating);
    r.advisory_tags.insert(r.advisory_tags.end(), tags.begin(), tags.end());
  }
  return r;
}

nlohmann::json bigint_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(value);
  return value.str();
}

namespace {

nlohmann::json fingerprint_json(const Fingerprint& f) {
  nlohmann::json types = nlohmann::json::array();
  for (const auto& t : f.generator_cycle_types) types.push_back(t.parts);
  nlohmann::json j = {{"degree", f.degree},
                      {"order", bigint_json(f.order)},
                      {"transitive", f.transitive},
                      {"primitive", f.primitive},
                      {"abelian", f.abelian},
                      {"generator_cycle_types", types}};
  j["derived_order"] = f.derived_order ? bigint_json(*f.derived_order) : nlohmann::json(nullptr);
  return j;
}

template <class T, class F>
nlohmann::json optional_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["order"] = bigint_json(r.order);
  j["transitive"] = r.transitive;
  j["primitive"] = r.primitive;
  j["contains_alternating"] = r.contains_alternating;
  j["is_tree"] = r.is_tree;
  j["fingerprint"] = fingerprint_json(r.fingerprint);
  j["orbits"] = r.orbits;
  j["block_system"] = optional_json(r.block_system, [](const BlockSystem& b) { return nlohmann::json(b.blocks); });
  j["imprimitive_vertex_coloring"] = optional_json(
      r.vertex_coloring, [](const ImprimitiveVertexColoring& v) { return nlohmann::json(v.nu); });
  j["aut_order"] = r.aut_order;
  j["size_bound"] = optional_json(r.size_bound, [](const SizeBound& s) {
    return nlohmann::json{{"phi", s.phi}, {"bound", s.bound_string()}, {"holds", s.holds}};
  });
  j["tree_centralizer"] = optional_json(r.tree_centralizer, [](const TreeCentralizer& t) {
    nlohmann::json out{{"aut_order", t.aut_order}};
    out["signed_embedding"] = optional_json(t.signed_embedding, [](const SignedEmbedding& s) {
      return nlohmann::json{{"m", s.m}, {"signed_order", bigint_json(s.signed_order)}, {"divides", s.divides}};
    });
    return out;
  });
  j["symmetric_edges"] = optional_json(r.symmetric_edges, [](const std::vector<SymmetricEdge>& edges) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : edges) out.push_back({{"edge", e.edge}, {"deleted_colors", e.witness}});
    return out;
  });
  j["symmetric_edge_witness"] = optional_json(r.symmetric_edge_witness, [](const SymmetricEdgeWitness& w) {
    return nlohmann::json{{"edge", w.edge},
                          {"i", w.i},
                          {"j", w.j},
                          {"pi", w.pi.to_cycle_string()},
                          {"m", bigint_json(w.m)},
                          {"pi_power", w.pi_power.to_cycle_string()},
                          {"sigma", w.sigma.to_cycle_string()},
                          {"pi_power_is_transposition", w.pi_power_is_transposition},
                          {"sigma_maps_i_to_j", w.sigma_maps_i_to_j},
                          {"sigma_is_n_cycle", w.sigma_is_n_cycle},
                          {"order_is_factorial", w.order_is_factorial}};
  });
  j["long_cycle_type"] = optional_json(r.long_cycle_type, [](const CycleType& t) { return nlohmann::json(t.parts); });
  j["toggle_clean"] = optional_json(r.toggle_clean, [](bool b) { return nlohmann::json(b); });
  j["toggle_failure_path"] = optional_json(r.toggle_failure_path, [](const std::vector<Vertex>& p) { return nlohmann::json(p); });
  j["restricted_trees"] = optional_json(r.restricted_trees, [](const std::vector<RestrictedTree>& rs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : rs) out.push_back({{"colors", t.colors}, {"m", t.m}, {"n_minus_m", t.n_minus_m}});
    return out;
  });
  j["advisory_tags"] = r.advisory_tags;
  return j;
}

std::string to_table(const AnalysisReport& r) {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  auto row = [&](const char* key, const std::string& value) {
    out << std::left;
    out.width(22);
    out << key << value << '\n';
  };
  row("vertices", std::to_string(r.n));
  row("colors", std::to_string(r.k));
  row("order", r.order.str());
  row("transitive", yes(r.transitive));
  row("primitive", yes(r.primitive));
  row("contains alternating", yes(r.contains_alternating));
  row("tree", yes(r.is_tree));
  row("aut order", std::to_string(r.aut_order));
  if (r.vertex_coloring) {
    std::string classes;
    for (const auto& c : r.vertex_coloring->classes()) {
      classes += "{";
      for (std::size_t i = 0; i < c.size(); ++i) classes += (i ? " " : "") + std::to_string(c[i]);
      classes += "}";
    }
    row("block system", classes);
  }
  if (r.long_cycle_type) row("long cycle type", r.long_cycle_type->to_string());
  if (r.size_bound)
    row("size bound", r.size_bound->bound_string() + (r.size_bound->holds ? " (holds)" : " (fails)"));
  if (r.symmetric_edges) row("symmetric edges", std::to_string(r.symmetric_edges->size()));
  if (r.symmetric_edge_witness)
    row("symmetric witness", r.symmetric_edge_witness->ok() ? "verified" : "FAILED");
  if (r.toggle_clean) row("toggle paths", *r.toggle_clean ? "all toggle words" : "has a non-toggle path");
  if (r.restricted_trees) row("restricted trees", std::to_string(r.restricted_trees->size()));
  for (const auto& tag : r.advisory_tags) row("note", tag);
  return out.str();
}

// --- constructions ----------------------------------------------------------

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
  if (name == "symmetric") return ConstructionKind::symmetric;
  if (name == "alternating") return ConstructionKind::alternating;
  if (name == "dihedral") return ConstructionKind::dihedral;
  if (name == "signed") return ConstructionKind::signed_permutations;
  return std::nullopt;
}

EdgeColoredGraph construction(ConstructionKind kind, std::size_t size) {
  switch (kind) {
    case ConstructionKind::symmetric: {
      if (size < 2) throw std::invalid_argument("symmetric construction needs n >= 2");
      std::vector<Color> word;
      for (std::size_t i = 0; i + 2 < size; ++i) word.push_back(i % 2 ? 2 : 1);
      word.push_back(static_cast<Color>(std::min<std::size_t>(word.size(), 2) + 1));
      return EdgeColoredGraph::path(word);
    }
    case ConstructionKind::alternating: {
      if (size == 5) throw std::invalid_argument("the alternating construction fails for n = 5");
      if (size < 7 || size % 2 == 0)
        throw std::invalid_argument("alternating construction needs odd n >= 7");
      const std::size_t k = (size - 1) / 2;
      std::vector<Color> word;
      for (int rep = 0; rep < 2; ++rep)
        for (std::size_t c = 1; c <= k; ++c) word.push_back(static_cast<Color>(c));
      return EdgeColoredGraph::path(word);
    }
    case ConstructionKind::dihedral: {
      if (size < 3) throw std::invalid_argument("dihedral construction needs n >= 3");
      std::vector<Color> word;
      for (std::size_t i = 0; i + 1 < size; ++i) word.push_back(i % 2 ? 2 : 1);
      return EdgeColoredGraph::path(word);
    }
    case ConstructionKind::signed_permutations: {
      // Two copies of the star on m vertices, centers joined by a fresh color.
      if (size < 1) throw std::invalid_argument("signed construction needs m >= 1");
      const auto m = static_cast<Vertex>(size);
      const Vertex left = 0, right = m;
      std::vector<ColoredEdge> edges;
      for (Vertex i = 1; i < m; ++i) edges.push_back({left, i, i});
      edges.push_back({left, right, m});
      for (Vertex i = 1; i < m; ++i) edges.push_back({right, right + i, i});
      return EdgeColoredGraph(2 * size, size, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown construction");
}

}  // namespace colorgroups
