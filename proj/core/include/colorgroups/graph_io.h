#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "colorgroups/colored_graph.h"

namespace colorgroups {

/// Malformed input; `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads "n k" followed by one "u v c" line per edge. Blank lines and text
/// after '#' are ignored. Vertices are 0-based, colors 1-based. Colors are
/// kept as written so that `validate` can report problems with them.
EdgeColoredGraph parse_graph(std::istream& in);
EdgeColoredGraph parse_graph(std::string_view text);
EdgeColoredGraph read_graph_file(const std::string& path);

std::string to_text(const EdgeColoredGraph& g);

/// {"n": ..., "k": ..., "edges": [[u, v, c], ...]}
nlohmann::json to_json(const EdgeColoredGraph& g);
EdgeColoredGraph graph_from_json(const nlohmann::json& j);

}  // namespace colorgroups
