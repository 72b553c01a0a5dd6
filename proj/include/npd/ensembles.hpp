#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "npd/graph.hpp"

namespace npd {

/// A rewiring ran out of attempts before completing its steps.
class RewireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G(n, p): every unordered pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment from a K_{m+1} seed; each new node links to m
/// distinct existing nodes chosen with probability proportional to degree.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

/// n_rewirings steps of: delete a uniformly chosen edge, insert an edge
/// between two uniformly chosen distinct non-adjacent nodes. At most
/// 100 * n_rewirings insertion draws are made in total.
Graph rewire_random(const Graph& g, std::size_t n_rewirings, std::uint64_t seed);

/// n_rewirings double-edge swaps (i,j),(u,v) -> (i,u),(j,v), rejecting swaps
/// that would create a self-loop or an existing edge. At most
/// 100 * n_rewirings swap draws are made in total.
Graph rewire_degree_preserving(const Graph& g, std::size_t n_rewirings, std::uint64_t seed);

}  // namespace npd
