#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "npd/graph.hpp"
#include "npd/shortest_paths.hpp"

namespace npd {

class BinningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path-length bins for weighted portraits.
///
/// For edges e_0 .. e_b, bin i covers [e_i, e_{i+1}) and the last bin is
/// closed, [e_{b-1}, e_b]. Lower edges are strictly increasing; the top edge
/// may equal the last lower edge, which makes a final single-value bin [x, x].
class BinSpec {
 public:
  explicit BinSpec(std::vector<double> edges);

  /// One bin per integer length 1..max_length.
  static BinSpec integer_bins(std::size_t max_length);

  std::size_t n_bins() const noexcept { return edges_.size() - 1; }
  std::span<const double> edges() const noexcept { return edges_; }

  /// Index of the bin containing length, or nullopt outside [e_0, e_b].
  std::optional<std::size_t> locate(double length) const;

  friend bool operator==(const BinSpec&, const BinSpec&) = default;

 private:
  std::vector<double> edges_;
};

/// Sorted unique finite shortest-path lengths over ordered pairs i != j.
std::vector<double> unique_path_lengths(const Graph& g, WeightTransform transform);

/// Quantile bins over a sorted set of unique lengths. Lower edges are the
/// values at 0-based rank min(ceil(i*L/b), L-1) for i < b, duplicates merged;
/// the top edge is the largest length.
BinSpec quantile_bins(std::span<const double> sorted_unique, std::size_t b);

/// Shared bins from the union of both graphs' unique path lengths. Graphs
/// without weights are treated as unit-weighted.
BinSpec make_shared_bins(const Graph& g1, const Graph& g2, std::size_t b,
                         WeightTransform transform = WeightTransform::reciprocal);

}  // namespace npd
