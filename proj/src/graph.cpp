#include "npd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace npd {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v, bool directed) {
  if (!directed && v < u) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph::Graph(std::size_t n_nodes, std::vector<Edge> edges, bool directed,
             bool weighted, std::vector<std::string> labels)
    : n_nodes_(n_nodes),
      directed_(directed),
      weighted_(weighted),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
  if (n_nodes_ > std::numeric_limits<NodeId>::max()) {
    throw GraphError("graph too large");
  }
  if (!labels_.empty() && labels_.size() != n_nodes_) {
    throw GraphError("label count does not match node count");
  }
  for (NodeId i = 0; i < labels_.size(); ++i) {
    if (!ids_.emplace(labels_[i], i).second) {
      throw GraphError("duplicate node label '" + labels_[i] + "'");
    }
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  std::vector<std::size_t> degree(n_nodes_, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n_nodes_ || e.v >= n_nodes_) {
      throw GraphError("edge endpoint out of range");
    }
    if (e.u == e.v) throw GraphError("self-loop on node " + std::to_string(e.u));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw GraphError("edge weight must be positive and finite");
    }
    if (!weighted_ && e.weight != 1.0) {
      throw GraphError("unweighted graph carries a non-unit weight");
    }
    if (!seen.insert(pair_key(e.u, e.v, directed_)).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    ++degree[e.u];
    if (!directed_) ++degree[e.v];
  }

  offsets_.assign(n_nodes_ + 1, 0);
  for (std::size_t i = 0; i < n_nodes_; ++i) {
    offsets_[i + 1] = offsets_[i] + degree[i];
  }
  arcs_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    arcs_[fill[e.u]++] = Arc{e.v, e.weight};
    if (!directed_) arcs_[fill[e.v]++] = Arc{e.u, e.weight};
  }
  // Sorted adjacency makes has_edge a binary search and traversal order
  // independent of edge insertion order.
  for (std::size_t i = 0; i < n_nodes_; ++i) {
    std::sort(arcs_.begin() + offsets_[i], arcs_.begin() + offsets_[i + 1],
              [](const Arc& a, const Arc& b) { return a.target < b.target; });
  }
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> deg(n_nodes_);
  for (NodeId u = 0; u < n_nodes_; ++u) deg[u] = out_degree(u);
  return deg;
}

std::string Graph::label(NodeId u) const {
  return labels_.empty() ? std::to_string(u) : labels_.at(u);
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
  if (labels_.empty()) {
    NodeId id = 0;
    for (char c : label) {
      if (c < '0' || c > '9') return std::nullopt;
      id = id * 10 + static_cast<NodeId>(c - '0');
    }
    if (label.empty() || id >= n_nodes_ || std::to_string(id) != label) {
      return std::nullopt;
    }
    return id;
  }
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= n_nodes_ || v >= n_nodes_) return false;
  auto out = arcs(u);
  return std::binary_search(
      out.begin(), out.end(), Arc{v, 0.0},
      [](const Arc& a, const Arc& b) { return a.target < b.target; });
}

Graph Graph::relabeled(std::span<const NodeId> perm) const {
  if (perm.size() != n_nodes_) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({perm[e.u], perm[e.v], e.weight});
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(n_nodes_);
    for (NodeId i = 0; i < n_nodes_; ++i) labels[perm[i]] = labels_[i];
  }
  return Graph(n_nodes_, std::move(edges), directed_, weighted_,
               std::move(labels));
}

std::uint64_t ComponentSummary::sum_of_squares() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0},
                         [](std::uint64_t acc, std::size_t n) {
                           return acc + static_cast<std::uint64_t>(n) * n;
                         });
}

ComponentSummary connected_components(const Graph& g) {
  const std::size_t n = g.n_nodes();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    NodeId a = find(e.u), b = find(e.v);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }

  ComponentSummary summary;
  std::vector<std::size_t> slot(n, n);
  for (NodeId u = 0; u < n; ++u) {
    NodeId root = find(u);
    if (slot[root] == n) {
      slot[root] = summary.sizes.size();
      summary.sizes.push_back(0);
    }
    ++summary.sizes[slot[root]];
  }
  return summary;
}

}  // namespace npd
