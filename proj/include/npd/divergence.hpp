#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "npd/binning.hpp"
#include "npd/graph.hpp"
#include "npd/portrait.hpp"

namespace npd {

struct JointEntry {
  std::size_t shell = 0;
  std::size_t k = 0;
  double mass = 0.0;
};

/// P(k, l) = k * B(l, k) / S over the cells with positive mass, sorted by
/// (shell, k). S is the portrait's reachable-pair count.
struct JointDistribution {
  std::vector<JointEntry> entries;
  std::uint64_t normalizer = 0;

  double total_mass() const;
  double mass(std::size_t shell, std::size_t k) const;
};

/// Thrown by kl_divergence_bits when p has mass where q has none.
class SupportError : public std::domain_error {
 public:
  SupportError(std::size_t shell, std::size_t k);
  std::size_t shell() const noexcept { return shell_; }
  std::size_t k() const noexcept { return k_; }

 private:
  std::size_t shell_;
  std::size_t k_;
};

JointDistribution joint_distribution(const Portrait& p);

/// KL(p || q) in bits.
double kl_divergence_bits(const JointDistribution& p, const JointDistribution& q);

struct DivergenceReport {
  double d_js = 0.0;
  double kl_p_m = 0.0;  // bits
  double kl_q_m = 0.0;  // bits
  std::size_t rows_compared = 0;
  std::optional<BinSpec> binning;

  std::size_t n1 = 0, n2 = 0;
  std::uint64_t m1 = 0, m2 = 0;
};

/// Jensen-Shannon divergence (base 2) between two joint distributions, with
/// M = (P + Q) / 2 taken over the union of supports.
DivergenceReport jensen_shannon(const JointDistribution& p, const JointDistribution& q);

/// Network Portrait Divergence between two portraits built on the same
/// shell definition (both hop-count, or both on one BinSpec).
DivergenceReport portrait_divergence(const Portrait& a, const Portrait& b);

/// Hop-count divergence between two graphs.
DivergenceReport portrait_divergence(const Graph& g1, const Graph& g2);

/// Weighted divergence with b quantile bins shared by the pair.
DivergenceReport weighted_portrait_divergence(
    const Graph& g1, const Graph& g2, std::size_t b,
    WeightTransform transform = WeightTransform::reciprocal);

/// Weighted average of row-wise Kolmogorov-Smirnov statistics between the
/// cumulative rows of two portraits, after padding both to equal depth.
double legacy_delta(const Portrait& a, const Portrait& b);
double legacy_delta(const Graph& g1, const Graph& g2);

}  // namespace npd
