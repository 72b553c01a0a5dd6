#include "npd/ensembles.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "npd/rng.hpp"

namespace npd {

namespace {

std::uint64_t undirected_key(NodeId u, NodeId v) {
  if (v < u) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

void check_rewirable(const Graph& g, std::size_t min_edges) {
  if (g.directed() || g.weighted()) {
    throw std::invalid_argument("rewiring needs an undirected unweighted graph");
  }
  if (g.n_edges() < min_edges) {
    throw std::invalid_argument("rewiring needs at least " + std::to_string(min_edges) +
                                " edge(s)");
  }
}

// Edge list plus membership set, kept in step.
class EdgePool {
 public:
  explicit EdgePool(const Graph& g) : edges_(g.edges().begin(), g.edges().end()) {
    present_.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) present_.insert(undirected_key(e.u, e.v));
  }

  std::size_t size() const { return edges_.size(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }
  bool contains(NodeId u, NodeId v) const { return present_.count(undirected_key(u, v)) > 0; }

  void replace(std::size_t i, NodeId u, NodeId v) {
    present_.erase(undirected_key(edges_[i].u, edges_[i].v));
    edges_[i] = Edge{u, v, 1.0};
    present_.insert(undirected_key(u, v));
  }

  void erase(std::size_t i) { present_.erase(undirected_key(edges_[i].u, edges_[i].v)); }
  void restore(std::size_t i) { present_.insert(undirected_key(edges_[i].u, edges_[i].v)); }

  Graph build(const Graph& like) && {
    return Graph(like.n_nodes(), std::move(edges_), false, false, like.labels());
  }

 private:
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> present_;
};

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert needs 1 <= m < n");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m * (m + 1) / 2 + m * (n - m - 1));
  // Every edge contributes both endpoints, so a uniform draw from this list
  // picks a node with probability proportional to its degree.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.push_back({u, v, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  targets.reserve(m);
  for (NodeId node = static_cast<NodeId>(m + 1); node < n; ++node) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.push_back({t, node, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(node);
    }
  }
  return Graph(n, std::move(edges));
}

Graph rewire_random(const Graph& g, std::size_t n_rewirings, std::uint64_t seed) {
  check_rewirable(g, 1);
  const std::size_t n = g.n_nodes();
  Rng rng(seed);
  EdgePool pool(g);
  std::size_t budget = 100 * n_rewirings;
  for (std::size_t step = 0; step < n_rewirings; ++step) {
    const std::size_t victim = rng.below(pool.size());
    pool.erase(victim);
    for (;;) {
      if (budget == 0) throw RewireError("random rewiring exhausted its attempt budget");
      --budget;
      const NodeId u = static_cast<NodeId>(rng.below(n));
      const NodeId v = static_cast<NodeId>(rng.below(n));
      if (u == v || pool.contains(u, v)) continue;
      pool.restore(victim);
      pool.replace(victim, u, v);
      break;
    }
  }
  return std::move(pool).build(g);
}

Graph rewire_degree_preserving(const Graph& g, std::size_t n_rewirings, std::uint64_t seed) {
  check_rewirable(g, 2);
  Rng rng(seed);
  EdgePool pool(g);
  std::size_t budget = 100 * n_rewirings;
  for (std::size_t step = 0; step < n_rewirings;) {
    if (budget == 0) {
      throw RewireError("degree-preserving rewiring exhausted its attempt budget");
    }
    --budget;
    const std::size_t a = rng.below(pool.size());
    std::size_t b = rng.below(pool.size() - 1);
    if (b >= a) ++b;
    // Random orientation of the first edge covers both swap pairings.
    NodeId i = pool[a].u, j = pool[a].v;
    if (rng.below(2) == 1) std::swap(i, j);
    const NodeId u = pool[b].u, v = pool[b].v;
    if (i == u || j == v || pool.contains(i, u) || pool.contains(j, v)) continue;
    pool.replace(a, i, u);
    pool.replace(b, j, v);
    ++step;
  }
  return std::move(pool).build(g);
}

}  // namespace npd
