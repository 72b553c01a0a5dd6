#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "npd/binning.hpp"
#include "npd/graph.hpp"
#include "npd/shortest_paths.hpp"

namespace npd {

/// The B-matrix of a graph: counts(l, k) is the number of nodes that have
/// exactly k nodes in shell l. Row 0 is the distance-0 shell; for weighted
/// portraits row i >= 1 is bin i-1 of bins().
///
/// Rows are dense over k = 0 .. n_cols()-1, where n_cols() = max(N, 2): a
/// node has at most N-1 others in a shell, and row 0 always needs k = 1.
class Portrait {
 public:
  using Count = std::uint64_t;

  /// Validates row widths, row sums and the self-shell.
  Portrait(std::size_t n_nodes, bool directed, std::vector<std::vector<Count>> rows,
           std::optional<BinSpec> bins = std::nullopt);

  std::size_t n_nodes() const noexcept { return n_nodes_; }
  bool directed() const noexcept { return directed_; }
  std::size_t n_rows() const noexcept { return rows_.size(); }
  std::size_t n_cols() const noexcept { return rows_.front().size(); }

  std::span<const Count> row(std::size_t l) const { return rows_.at(l); }
  Count at(std::size_t l, std::size_t k) const {
    return l < rows_.size() && k < rows_[l].size() ? rows_[l][k] : 0;
  }

  const std::optional<BinSpec>& bins() const noexcept { return bins_; }
  bool weighted() const noexcept { return bins_.has_value(); }

  /// S = sum over cells of k * B(l, k): ordered pairs (i, j) with j reachable
  /// from i, self-pairs included.
  Count reachable_pairs() const noexcept { return reachable_pairs_; }

  /// Largest shell index holding some node with k > 0.
  std::size_t diameter() const noexcept;

  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  std::size_t n_nodes_ = 0;
  bool directed_ = false;
  std::vector<std::vector<Count>> rows_;
  std::optional<BinSpec> bins_;
  Count reachable_pairs_ = 0;
};

/// Hop-count portrait (weights, if any, are ignored). Throws
/// std::invalid_argument for an empty graph.
Portrait portrait(const Graph& g);

/// Weighted portrait over the given bins. Throws std::logic_error if a finite
/// path length falls outside every bin.
Portrait weighted_portrait(const Graph& g, const BinSpec& bins,
                           WeightTransform transform = WeightTransform::reciprocal);

/// Appends empty shells, B(l, k) = N * delta(k, 0), up to target_rows.
Portrait pad_portrait(const Portrait& p, std::size_t target_rows);

struct PortraitSummary {
  std::size_t n_nodes = 0;
  std::uint64_t n_edges = 0;
  std::size_t diameter = 0;
  std::map<std::size_t, std::uint64_t> degree_histogram;     // degree -> nodes
  std::map<std::size_t, std::uint64_t> path_length_counts;  // l >= 1 -> paths
};

/// Quantities recoverable from a hop-count portrait alone. Undirected edges
/// and paths count unordered pairs; directed ones count ordered pairs.
PortraitSummary portrait_identities(const Portrait& p);

}  // namespace npd
