#pragma once

#include <cstdint>
#include <random>

namespace npd {

/// Deterministic random stream for the generators and rewirings.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The draws below are built directly on raw engine output instead
/// of <random> distributions (whose algorithms are implementation-defined), so
/// a seed gives the same graphs with any conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  /// True with probability p.
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent child seeds from (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace npd
