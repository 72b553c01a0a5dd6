#include "npd/edge_list.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace npd {

namespace {

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits on runs of blanks that contain at most one comma. Returns false if a
// field would be empty (leading/trailing comma, or two commas in one run).
bool split_fields(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n && is_blank(line[i])) ++i;
  if (i == n) return true;
  if (line[i] == ',') return false;
  while (i < n) {
    std::size_t start = i;
    while (i < n && !is_blank(line[i]) && line[i] != ',') ++i;
    out.push_back(line.substr(start, i - start));
    int commas = 0;
    while (i < n && (is_blank(line[i]) || line[i] == ',')) {
      if (line[i] == ',') ++commas;
      ++i;
    }
    if (commas > 1) return false;
    if (i == n && commas == 1) return false;
  }
  return true;
}

std::uint64_t pair_key(NodeId u, NodeId v, bool directed) {
  if (!directed && v < u) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
  using Kind = ParseError::Kind;
  const std::size_t want = options.weighted ? 3 : 2;

  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](std::string_view name) {
    auto [it, inserted] =
        ids.try_emplace(std::string(name), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::size_t> edge_index;
  ParsedGraph result;

  std::string line;
  std::vector<std::string_view> fields;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    std::size_t first = 0;
    while (first < view.size() && is_blank(view[first])) ++first;
    if (first == view.size() || view[first] == '#') continue;

    if (!split_fields(view, fields)) {
      throw ParseError(Kind::malformed, line_no, "empty field");
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(Kind::malformed, line_no,
                       "expected 2 or 3 fields, found " +
                           std::to_string(fields.size()));
    }
    if (fields.size() != want) {
      throw ParseError(Kind::weight_columns, line_no,
                       options.weighted
                           ? "weighted input requires a weight column"
                           : "found a weight column; pass the weighted option");
    }

    double weight = 1.0;
    if (options.weighted) {
      const std::string_view w = fields[2];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc{} || ptr != w.data() + w.size()) {
        throw ParseError(Kind::malformed, line_no,
                         "cannot parse weight '" + std::string(w) + "'");
      }
      if (!(weight > 0.0) || !std::isfinite(weight)) {
        throw ParseError(Kind::bad_weight, line_no,
                         "weight must be positive, got '" + std::string(w) +
                             "'");
      }
    }

    const NodeId u = intern(fields[0]);
    const NodeId v = intern(fields[1]);
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    auto [it, inserted] =
        edge_index.try_emplace(pair_key(u, v, options.directed), edges.size());
    if (inserted) {
      edges.push_back({u, v, weight});
    } else {
      ++result.duplicates_collapsed;
      if (options.weighted) edges[it->second].weight += weight;
    }
  }

  const std::size_t n = labels.size();
  result.graph = Graph(n, std::move(edges), options.directed, options.weighted,
                       std::move(labels));
  return result;
}

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

ParsedGraph read_edge_list(const std::filesystem::path& path,
                           const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(ParseError::Kind::malformed, 0,
                     "cannot open '" + path.string() + "'");
  }
  return parse_edge_list(in, options);
}

}  // namespace npd
