#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "npd/graph.hpp"

namespace npd {

/// Malformed edge-list input. line() is 1-based; 0 means "not line specific".
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    malformed,      // wrong field count, empty field, unparsable weight
    bad_weight,     // nonpositive or non-finite weight
    weight_columns  // column count disagrees with the weighted flag
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

struct ParseOptions {
  bool directed = false;
  bool weighted = false;
};

struct ParsedGraph {
  Graph graph;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Reads "u v" or "u v w" lines. Fields are separated by a run of whitespace
/// or a single comma; lines whose first non-blank character is '#' are
/// comments. Labels receive dense ids in order of first appearance, self-loops
/// are dropped, and repeated pairs are merged (weights summed).
ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
ParsedGraph parse_edge_list(std::string_view text,
                            const ParseOptions& options = {});
ParsedGraph read_edge_list(const std::filesystem::path& path,
                           const ParseOptions& options = {});

}  // namespace npd
