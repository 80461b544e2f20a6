#include "colorgroups/graph_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace colorgroups {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

EdgeColoredGraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, k = 0;
  std::vector<ColoredEdge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 2) throw ParseError(line_no, "header must be 'n k'");
      n = parse_number(fields[0], line_no);
      k = parse_number(fields[1], line_no);
      have_header = true;
      continue;
    }
    if (fields.size() != 3) throw ParseError(line_no, "edge line must be 'u v c'");
    std::uint64_t u = parse_number(fields[0], line_no);
    std::uint64_t v = parse_number(fields[1], line_no);
    std::uint64_t c = parse_number(fields[2], line_no);
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex out of range 0.." + std::to_string(n ? n - 1 : 0));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
  }
  if (!have_header) throw ParseError(0, "empty input: missing 'n k' header");
  return EdgeColoredGraph(n, k, std::move(edges));
}

EdgeColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

EdgeColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string to_text(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.color_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

nlohmann::json to_json(const EdgeColoredGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color});
  return {{"n", g.vertex_count()}, {"k", g.color_count()}, {"edges", std::move(edges)}};
}

EdgeColoredGraph graph_from_json(const nlohmann::json& j) {
  try {
    std::size_t n = j.at("n").get<std::size_t>();
    std::size_t k = j.at("k").get<std::size_t>();
    std::vector<ColoredEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError(0, "each edge must be [u, v, c]");
      edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Color>()});
    }
    return EdgeColoredGraph(n, k, std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(0, ex.what());
  } catch (const std::out_of_range& ex) {
    throw ParseError(0, ex.what());
  }
}

}  // namespace colorgroups
