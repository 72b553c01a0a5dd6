#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "npd/ensembles.hpp"
#include "npd/graph.hpp"

namespace fixtures {

inline npd::Graph path(std::size_t n) {
  std::vector<npd::Edge> edges;
  for (npd::NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return npd::Graph(n, std::move(edges));
}

inline npd::Graph complete(std::size_t n) {
  std::vector<npd::Edge> edges;
  for (npd::NodeId i = 0; i < n; ++i)
    for (npd::NodeId j = i + 1; j < n; ++j) edges.push_back({i, j, 1.0});
  return npd::Graph(n, std::move(edges));
}

/// Generalized Petersen graph GP(n, k): outer cycle, spokes, inner star polygon.
inline npd::Graph generalized_petersen(std::size_t n, std::size_t k) {
  std::vector<npd::Edge> edges;
  for (npd::NodeId i = 0; i < n; ++i) {
    const auto outer_next = static_cast<npd::NodeId>((i + 1) % n);
    const auto inner = static_cast<npd::NodeId>(n + i);
    const auto inner_next = static_cast<npd::NodeId>(n + (i + k) % n);
    edges.push_back({i, outer_next, 1.0});
    edges.push_back({i, inner, 1.0});
    edges.push_back({inner, inner_next, 1.0});
  }
  return npd::Graph(2 * n, std::move(edges));
}

inline npd::Graph dodecahedral() { return generalized_petersen(10, 2); }
inline npd::Graph desargues() { return generalized_petersen(10, 3); }

inline npd::Graph with_weights(const npd::Graph& g, std::vector<double> weights) {
  std::vector<npd::Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights.at(i);
  return npd::Graph(g.n_nodes(), std::move(edges), g.directed(), true);
}

inline npd::Graph unit_weighted(const npd::Graph& g) {
  return with_weights(g, std::vector<double>(g.n_edges(), 1.0));
}

/// Mixed pool: ER graphs across densities (sparse ones disconnected) and BA.
inline std::vector<npd::Graph> random_pool(std::size_t count, std::size_t max_n,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<npd::Graph> pool;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng() % (max_n - 1);
    const std::uint64_t s = rng();
    if (i % 3 == 2 && n >= 3) {
      const std::size_t m = 1 + rng() % std::min<std::size_t>(3, n - 1);
      pool.push_back(npd::barabasi_albert(n, m, s));
    } else {
      const double p = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
      pool.push_back(npd::erdos_renyi(n, p, s));
    }
  }
  return pool;
}

inline std::vector<npd::NodeId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<npd::NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), npd::NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace fixtures
