#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "npd/graph.hpp"

namespace npd {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// How an edge weight becomes a traversal cost.
enum class WeightTransform {
  reciprocal,  // cost = 1/w, heavier ties are closer
  identity     // cost = w
};

inline double edge_cost(double weight, WeightTransform t) {
  return t == WeightTransform::reciprocal ? 1.0 / weight : weight;
}

struct DistanceRow {
  NodeId source = 0;
  std::vector<double> dist;  // kUnreachable where no path exists
};

/// Breadth-first hop distances, following edge direction when directed.
DistanceRow sssp_unweighted(const Graph& g, NodeId source);

/// Dijkstra over transformed edge costs.
DistanceRow sssp_weighted(const Graph& g, NodeId source,
                          WeightTransform transform = WeightTransform::reciprocal);

namespace detail {

inline constexpr std::uint32_t kNoHop = std::numeric_limits<std::uint32_t>::max();

/// Reusable BFS state so all-sources loops avoid reallocating per source.
class HopSearch {
 public:
  explicit HopSearch(std::size_t n) : dist_(n, kNoHop) { queue_.reserve(n); }

  /// Runs BFS from source; returns visited nodes in nondecreasing distance.
  const std::vector<NodeId>& run(const Graph& g, NodeId source);
  std::uint32_t distance(NodeId v) const { return dist_[v]; }

 private:
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> queue_;
};

}  // namespace detail

}  // namespace npd
