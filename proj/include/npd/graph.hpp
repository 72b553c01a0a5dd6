#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace npd {

using NodeId = std::uint32_t;

/// Raised when a graph would violate its structural invariants.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Outgoing adjacency entry.
struct Arc {
  NodeId target = 0;
  double weight = 1.0;
};

/// Immutable simple graph with dense node ids 0..n-1.
///
/// Undirected graphs store each edge once in edges() and twice in the
/// adjacency (once per endpoint). Unweighted graphs carry weight 1.0 on every
/// edge. Construction rejects self-loops, duplicate pairs, and nonpositive
/// weights, so every Graph value satisfies those invariants.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n_nodes, std::vector<Edge> edges, bool directed = false,
        bool weighted = false, std::vector<std::string> labels = {});

  std::size_t n_nodes() const noexcept { return n_nodes_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }

  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Out-neighbours (all neighbours when undirected).
  std::span<const Arc> arcs(NodeId u) const noexcept {
    return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
  }

  std::size_t out_degree(NodeId u) const noexcept {
    return offsets_[u + 1] - offsets_[u];
  }

  std::vector<std::size_t> degree_sequence() const;

  /// Label of a node; ids stringify when the graph was built without labels.
  std::string label(NodeId u) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find_node(std::string_view label) const;

  bool has_edge(NodeId u, NodeId v) const;

  /// Same structure with node i renamed to perm[i].
  Graph relabeled(std::span<const NodeId> perm) const;

 private:
  std::size_t n_nodes_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

struct ComponentSummary {
  std::vector<std::size_t> sizes;

  /// Σ n_c², the number of ordered connected pairs including self-pairs.
  std::uint64_t sum_of_squares() const;
};

/// Weakly connected components, ordered by their smallest node id.
ComponentSummary connected_components(const Graph& g);

}  // namespace npd
