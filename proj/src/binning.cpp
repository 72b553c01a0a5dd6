#include "npd/binning.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "npd/detail/parallel.hpp"

namespace npd {

BinSpec::BinSpec(std::vector<double> edges) : edges_(std::move(edges)) {
  if (edges_.size() < 2) throw BinningError("a binning needs at least two edges");
  for (double e : edges_) {
    if (!std::isfinite(e)) throw BinningError("bin edges must be finite");
  }
  const std::size_t top = edges_.size() - 1;
  for (std::size_t i = 1; i < top; ++i) {
    if (!(edges_[i - 1] < edges_[i])) {
      throw BinningError("bin edges must be strictly increasing");
    }
  }
  if (edges_[top] < edges_[top - 1]) {
    throw BinningError("top bin edge below the last lower edge");
  }
}

BinSpec BinSpec::integer_bins(std::size_t max_length) {
  if (max_length == 0) throw BinningError("integer bins need max_length >= 1");
  std::vector<double> edges;
  edges.reserve(max_length + 1);
  for (std::size_t l = 1; l <= max_length; ++l) edges.push_back(static_cast<double>(l));
  edges.push_back(static_cast<double>(max_length));
  return BinSpec(std::move(edges));
}

std::optional<std::size_t> BinSpec::locate(double length) const {
  const auto lower_end = edges_.end() - 1;
  if (!(length >= edges_.front()) || length > edges_.back()) return std::nullopt;
  auto it = std::upper_bound(edges_.begin(), lower_end, length);
  return static_cast<std::size_t>(std::distance(edges_.begin(), it)) - 1;
}

std::vector<double> unique_path_lengths(const Graph& g, WeightTransform transform) {
  const std::size_t n = g.n_nodes();
  std::vector<std::vector<double>> per_source(n);
  detail::parallel_for(n, [&](std::size_t s) {
    const auto row = sssp_weighted(g, static_cast<NodeId>(s), transform);
    auto& out = per_source[s];
    for (std::size_t t = 0; t < n; ++t) {
      if (t != s && row.dist[t] != kUnreachable) out.push_back(row.dist[t]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  });
  std::vector<double> all;
  for (auto& v : per_source) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

BinSpec quantile_bins(std::span<const double> sorted_unique, std::size_t b) {
  if (b == 0) throw BinningError("bin count must be at least 1");
  const std::size_t count = sorted_unique.size();
  if (count == 0) throw BinningError("no finite path lengths to bin");
  std::vector<double> edges;
  edges.reserve(b + 1);
  for (std::size_t i = 0; i < b; ++i) {
    const std::size_t rank = std::min((i * count + b - 1) / b, count - 1);
    const double edge = sorted_unique[rank];
    if (edges.empty() || edges.back() < edge) edges.push_back(edge);
  }
  edges.push_back(sorted_unique.back());
  return BinSpec(std::move(edges));
}

BinSpec make_shared_bins(const Graph& g1, const Graph& g2, std::size_t b,
                         WeightTransform transform) {
  if (b == 0) throw BinningError("bin count must be at least 1");
  auto a = unique_path_lengths(g1, transform);
  auto c = unique_path_lengths(g2, transform);
  std::vector<double> pooled;
  pooled.reserve(a.size() + c.size());
  std::set_union(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(pooled));
  if (pooled.empty()) {
    throw BinningError("both graphs are edgeless; no path lengths to bin");
  }
  return quantile_bins(pooled, b);
}

}  // namespace npd
