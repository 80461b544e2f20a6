#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "colorgroups/cayley.h"
#include "colorgroups/coloring_group.h"
#include "colorgroups/graph_io.h"
#include "colorgroups/indposet.h"
#include "colorgroups/survey.h"
#include "colorgroups/toggles.h"

namespace fs = std::filesystem;
using namespace colorgroups;

namespace {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kUsage = 3,
  kMissingFile = 4,
  kCapExceeded = 5,
  kInvalidInput = 6,
  kInternal = 7,
};

constexpr const char* kGraphFormat =
    "Graph file: first line \"n k\" (vertices, colors), then one \"u v c\" line per edge with "
    "0-based vertices and colors 1..k. '#' starts a comment.";
constexpr const char* kFamilyFormat =
    "Family file: first line the ground set size m, then one subset per line as space-separated "
    "elements of 1..m, \"-\" for the empty set. '#' starts a comment.";
constexpr const char* kDagFormat =
    "Dag file: first line the vertex count m, then one \"a b\" line per edge a -> b with 1-based "
    "vertices. '#' starts a comment.";

// Failure carrying its exit code; printed once by main.
struct CliError : std::runtime_error {
  CliError(int code, const std::string& kind, const std::string& message)
      : std::runtime_error(message), code(code), kind(kind) {}
  int code;
  std::string kind;
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::size_t max_order = 1'000'000;  // cayley elements
  std::size_t max_family = 4096;      // |L|
  std::size_t max_tops = 1u << 16;    // independence poset tops
};

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    auto value = std::stoull(raw, &used);
    if (used == std::string(raw).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw CliError(kUsage, "usage", std::string(name) + " must be a positive integer, got '" + raw + "'");
}

void require_file(const std::string& path) {
  if (!fs::exists(path)) throw CliError(kMissingFile, "missing file", path + ": no such file");
  if (fs::is_directory(path)) throw CliError(kMissingFile, "missing file", path + ": is a directory");
}

template <class F>
auto parsing(const std::string& path, F&& read) {
  require_file(path);
  try {
    return read(path);
  } catch (const ParseError& e) {
    throw CliError(kParseError, "parse error", path + ": " + e.what());
  }
}

EdgeColoredGraph load_valid_graph(const std::string& path) {
  auto g = parsing(path, read_graph_file);
  auto problems = validate(g);
  if (!problems.empty()) {
    std::string joined;
    for (const auto& p : problems) joined += "\n  " + p;
    throw CliError(kCheckFailed, "invalid coloring", path + ":" + joined);
  }
  return g;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int run_validate(const std::string& path) {
  auto g = parsing(path, read_graph_file);
  auto problems = validate(g);
  if (problems.empty()) {
    std::cout << "valid: " << g.vertex_count() << " vertices, " << g.color_count() << " colors, " << g.edge_count()
              << " edges\n";
    return kOk;
  }
  std::cout << "invalid:\n";
  for (const auto& p : problems) std::cout << "  " << p << '\n';
  return kCheckFailed;
}

int run_analyze(const RunConfig& config, const std::string& path, bool json) {
  auto report = analyze(load_valid_graph(path));
  if (json) {
    auto j = to_json(report);
    j["seed"] = config.seed;
    print_json(j);
  } else {
    std::cout << "order: " << report.order << ", primitive: " << (report.primitive ? "yes" : "no") << "\n\n"
              << to_table(report);
  }
  return kOk;
}

int run_cayley(const RunConfig& config, std::size_t degree, const std::vector<std::string>& cycles,
               const std::string& from_graph, bool json) {
  std::vector<Permutation> gens;
  if (!from_graph.empty()) {
    gens = generators(load_valid_graph(from_graph));
  } else {
    if (degree == 0 || cycles.empty()) throw CliError(kUsage, "usage", "give --degree and generators, or --from-graph");
    for (const auto& c : cycles) {
      try {
        gens.push_back(Permutation::parse_cycles(c, degree));
      } catch (const std::exception& e) {
        throw CliError(kParseError, "parse error", "generator '" + c + "': " + e.what());
      }
    }
  }
  auto cayley = cayley_coloring(gens, config.max_order);
  auto group = coloring_group(cayley.graph);
  std::cerr << "elements: " << cayley.elements.size() << ", coloring group order: " << group.order() << '\n';
  if (json) {
    print_json({{"seed", config.seed}, {"graph", to_json(cayley.graph)}, {"order", bigint_json(group.order())}});
  } else {
    std::cout << to_text(cayley.graph);
  }
  return kOk;
}

int run_toggle(const RunConfig& config, const std::string& path, bool poset_dot, bool json) {
  auto family = parsing(path, read_family_file);
  if (family.size() > config.max_family)
    throw CliError(kCapExceeded, "cap exceeded",
                   "family has " + std::to_string(family.size()) + " sets, cap is " + std::to_string(config.max_family));
  auto poset = toggle_poset(family);
  if (poset_dot) {
    std::cout << to_dot(poset);
    return kOk;
  }
  auto group = toggle_group(family);
  const bool tree = poset.covers.size() + 1 == family.size() && is_connected(poset_as_coloring(poset));
  if (json) {
    print_json({{"seed", config.seed},
                {"sets", family.size()},
                {"ground", family.ground_size()},
                {"order", bigint_json(group.order())},
                {"primitive", group.is_primitive()},
                {"covers", poset.covers.size()},
                {"poset_is_tree", tree}});
  } else {
    std::cout << "sets: " << family.size() << ", ground: " << family.ground_size() << '\n'
              << "toggle group order: " << group.order() << ", primitive: " << (group.is_primitive() ? "yes" : "no")
              << '\n'
              << "poset covers: " << poset.covers.size() << (tree ? " (tree)" : "") << '\n';
    for (const auto& c : poset.covers)
      std::cout << "  " << subset_string(family.set(c.lower)) << " -" << c.element << "-> "
                << subset_string(family.set(c.upper)) << '\n';
  }
  return kOk;
}

int run_indposet(const RunConfig& config, const std::string& path, bool hasse, bool verify) {
  auto dag = parsing(path, read_dag_file);
  auto poset = independence_poset(dag, config.max_tops);
  if (hasse) {
    std::cout << to_text(hasse_coloring(poset));
  } else {
    std::cout << "tops: " << poset.tops.size() << ", covers: " << poset.covers.size() << '\n';
    for (std::size_t i = 0; i < poset.tops.size(); ++i) std::cout << "  " << i << "  " << to_string(poset.tops[i]) << '\n';
    for (const auto& c : poset.covers) std::cout << "  " << c.lower << " -" << c.label << "-> " << c.upper << '\n';
  }
  if (!verify) return kOk;

  bool ok = true;
  std::size_t flips = 0;
  for (const auto& top : poset.tops)
    for (std::uint32_t g = 1; g <= dag.vertex_count(); ++g, ++flips)
      if (flip(dag, poset.order, flip(dag, poset.order, top, g), g) != top) {
        std::cerr << "flip " << g << " is not an involution at " << to_string(top) << '\n';
        ok = false;
      }
  std::cerr << "flip involution: " << flips << " flips checked\n";
  auto structure = verify_structure_theorem(dag, config.max_tops);
  std::cerr << "structure: " << (structure.connected ? "connected" : "disconnected") << ", order " << structure.order
            << (structure.connected ? ", bound " : ", expected ") << structure.expected
            << (structure.holds ? " (holds)" : " (fails)") << '\n';
  ok = ok && structure.holds;
  for (std::uint32_t g = 1; g <= dag.vertex_count(); ++g) {
    const auto idx = g - 1;
    if (dag.out_mask(idx) && dag.in_mask(idx)) continue;
    auto check = extremal_decomposition_check(dag, g);
    std::cerr << "extremal " << g << ": " << check.lower_part << " + " << check.upper_part
              << (check.ok() ? " (holds)" : " (fails)") << '\n';
    ok = ok && check.ok();
  }
  return ok ? kOk : kCheckFailed;
}

SurveyResult run_survey_pool(std::size_t n, const SurveyOptions& options, std::size_t workers) {
  auto colorings = survey_colorings(n);
  std::vector<ColoringVerdict> verdicts(colorings.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < colorings.size(); i = next++) verdicts[i] = analyze_survey_coloring(colorings[i], options);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return collect_survey(n, options, colorings, verdicts);
}

int run_survey(const RunConfig& config, std::size_t degree, bool skip, const std::string& out_dir) {
  const auto started = std::chrono::steady_clock::now();
  auto result = run_survey_pool(degree, {skip}, config.workers);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  auto manifest = manifest_json(result);
  manifest["seed"] = config.seed;

  const auto& s = result.stats;
  std::cerr << "degree " << degree << ": " << s.trees << " trees, " << s.colorings << " colorings, " << s.analyzed
            << " analyzed, " << result.rows.size() << " rows in " << seconds << " s\n";
  if (out_dir.empty()) {
    std::cout << to_csv(result);
  } else {
    fs::create_directories(out_dir);
    const auto stem = fs::path(out_dir) / ("survey_" + std::to_string(degree));
    std::ofstream(stem.string() + ".csv") << to_csv(result);
    std::ofstream(stem.string() + ".json") << manifest.dump(2) << '\n';
    std::cerr << "wrote " << stem.string() << ".csv and .json\n";
  }
  const bool ok = !s.symmetric_edge_failures && !s.size_bound_failures && !s.primitivity_failures && !s.aba_failures;
  if (!ok) std::cerr << "some per-coloring checks failed; see the manifest\n";
  return ok ? kOk : kCheckFailed;
}

int run_check_table(const RunConfig& config, bool json) {
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& entry : coloring_table()) {
    auto check = check_table_row(entry);
    all = all && check.pass;
    if (json) {
      rows.push_back({{"name", entry.name},
                      {"degree", entry.n},
                      {"expected_order", entry.order},
                      {"order", bigint_json(check.order)},
                      {"primitive", check.primitive},
                      {"pass", check.pass}});
    } else {
      std::cout << (check.pass ? "PASS  " : "FAIL  ") << entry.name << "  degree " << entry.n << "  order "
                << check.order << " (table " << entry.order << ")  primitive " << (check.primitive ? "yes" : "no")
                << "  " << check.seconds << " s\n";
    }
  }
  if (json) print_json({{"seed", config.seed}, {"rows", rows}, {"pass", all}});
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloring groups of edge-colored graphs, toggle groups and independence posets."};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::optional<std::size_t> workers;
  app.add_option("--seed", config.seed, "Seed recorded in JSON outputs")->capture_default_str();
  app.add_option("--workers", workers, "Survey worker threads (default: hardware threads)")->check(CLI::PositiveNumber);

  std::string path;
  bool json = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check that a graph file is a proper edge coloring");
  validate_cmd->footer(kGraphFormat);
  validate_cmd->add_option("graph", path, "Graph file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Coloring group order, primitivity and structural checks");
  analyze_cmd->footer(kGraphFormat);
  analyze_cmd->add_option("graph", path, "Graph file")->required();
  analyze_cmd->add_flag("--json", json, "Emit the analysis record as JSON");

  std::size_t degree = 0;
  std::vector<std::string> cycles;
  std::string from_graph;
  auto* cayley_cmd = app.add_subcommand("cayley", "Proper coloring of the Cayley graph of a group generated by involutions");
  cayley_cmd->footer(std::string("Generators in cycle notation on 0..degree-1, e.g. \"(0 1)(2 3)\". ") + kGraphFormat +
                     " --from-graph uses the color involutions of that graph.");
  cayley_cmd->add_option("--degree", degree, "Degree of the generators");
  cayley_cmd->add_option("generators", cycles, "Involutions in cycle notation");
  cayley_cmd->add_option("--from-graph", from_graph, "Graph file whose coloring group to use");
  cayley_cmd->add_option("--max-order", config.max_order, "Element cap (env COLORGROUPS_MAX_ORDER)")->check(CLI::PositiveNumber);
  cayley_cmd->add_flag("--json", json, "Emit the graph and order as JSON");

  bool poset_dot = false;
  auto* toggle_cmd = app.add_subcommand("toggle", "Toggle group and toggle poset of a set family");
  toggle_cmd->footer(kFamilyFormat);
  toggle_cmd->add_option("family", path, "Family file")->required();
  toggle_cmd->add_flag("--poset-dot", poset_dot, "Emit the labeled toggle poset in DOT");
  toggle_cmd->add_option("--max-sets", config.max_family, "Cap on |L| (env COLORGROUPS_MAX_FAMILY)")->check(CLI::PositiveNumber);
  toggle_cmd->add_flag("--json", json, "Emit a JSON summary");

  bool hasse = false, verify = false;
  auto* indposet_cmd = app.add_subcommand("indposet", "Tight orthogonal pairs and the independence poset of a dag");
  indposet_cmd->footer(kDagFormat);
  indposet_cmd->add_option("dag", path, "Dag file")->required();
  indposet_cmd->add_flag("--hasse", hasse, "Emit the labeled Hasse diagram in the graph format");
  indposet_cmd->add_flag("--verify", verify, "Check flips, the group order law and extremal decompositions");
  indposet_cmd->add_option("--max-tops", config.max_tops, "Cap on tops (env COLORGROUPS_MAX_TOPS)")->check(CLI::PositiveNumber);

  bool skip = false;
  std::string out_dir;
  auto* survey_cmd = app.add_subcommand("survey", "Coloring groups of every proper coloring of every tree on N vertices");
  survey_cmd->footer("No input file. Writes survey_N.csv (order, primitive, k, representative, colorings) and "
                     "survey_N.json to --out, or the CSV to stdout. Path representatives are color words; other "
                     "trees use the graph format with \"; \" for line breaks.");
  survey_cmd->add_option("--degree", degree, "Number of vertices, 2..10")->required()->check(CLI::Range(2, 10));
  survey_cmd->add_flag("--skip-symmetric-edge", skip, "Skip colorings with a symmetric edge (their group is S_N)");
  survey_cmd->add_option("--out", out_dir, "Output directory");

  auto* table_cmd = app.add_subcommand("check-table", "Recompute the bundled table of coloring groups on small trees");
  table_cmd->footer("No input file. The table colorings are built in; each row prints PASS or FAIL.");
  table_cmd->add_flag("--json", json, "Emit the results as JSON");

  try {
    config.max_order = env_cap("COLORGROUPS_MAX_ORDER", config.max_order);
    config.max_family = env_cap("COLORGROUPS_MAX_FAMILY", config.max_family);
    config.max_tops = env_cap("COLORGROUPS_MAX_TOPS", config.max_tops);
  } catch (const CliError& e) {
    std::cerr << "colorgroups: " << e.kind << ": " << e.what() << '\n';
    return e.code;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  config.workers = workers.value_or(std::max(1u, std::thread::hardware_concurrency()));

  try {
    if (*validate_cmd) return run_validate(path);
    if (*analyze_cmd) return run_analyze(config, path, json);
    if (*cayley_cmd) return run_cayley(config, degree, cycles, from_graph, json);
    if (*toggle_cmd) return run_toggle(config, path, poset_dot, json);
    if (*indposet_cmd) return run_indposet(config, path, hasse, verify);
    if (*survey_cmd) return run_survey(config, degree, skip, out_dir);
    if (*table_cmd) return run_check_table(config, json);
  } catch (const CliError& e) {
    std::cerr << "colorgroups: " << e.kind << ": " << e.what() << '\n';
    return e.code;
  } catch (const std::length_error& e) {
    std::cerr << "colorgroups: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "colorgroups: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "colorgroups: error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
