#include "npd/shortest_paths.hpp"

#include <queue>
#include <string>

namespace npd {

namespace {

void check_source(const Graph& g, NodeId source) {
  if (source >= g.n_nodes()) {
    throw std::out_of_range("source node " + std::to_string(source) +
                            " out of range for graph with " +
                            std::to_string(g.n_nodes()) + " nodes");
  }
}

}  // namespace

namespace detail {

const std::vector<NodeId>& HopSearch::run(const Graph& g, NodeId source) {
  for (NodeId v : queue_) dist_[v] = kNoHop;
  queue_.clear();
  dist_[source] = 0;
  queue_.push_back(source);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const NodeId u = queue_[head];
    const std::uint32_t next = dist_[u] + 1;
    for (const Arc& a : g.arcs(u)) {
      if (dist_[a.target] == kNoHop) {
        dist_[a.target] = next;
        queue_.push_back(a.target);
      }
    }
  }
  return queue_;
}

}  // namespace detail

DistanceRow sssp_unweighted(const Graph& g, NodeId source) {
  check_source(g, source);
  detail::HopSearch search(g.n_nodes());
  DistanceRow row{source, std::vector<double>(g.n_nodes(), kUnreachable)};
  for (NodeId v : search.run(g, source)) {
    row.dist[v] = static_cast<double>(search.distance(v));
  }
  return row;
}

DistanceRow sssp_weighted(const Graph& g, NodeId source,
                          WeightTransform transform) {
  check_source(g, source);
  DistanceRow row{source, std::vector<double>(g.n_nodes(), kUnreachable)};
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  row.dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > row.dist[u]) continue;
    for (const Arc& a : g.arcs(u)) {
      if (!(a.weight > 0.0)) {
        throw GraphError("nonpositive edge weight in shortest-path search");
      }
      const double candidate = d + edge_cost(a.weight, transform);
      if (candidate < row.dist[a.target]) {
        row.dist[a.target] = candidate;
        heap.emplace(candidate, a.target);
      }
    }
  }
  return row;
}

}  // namespace npd
