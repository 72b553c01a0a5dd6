#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace npd::experiments {

struct EnsembleParams {
  std::size_t n_nodes = 300;
  double mean_degree = 6.0;  // ER p = <k>/(N-1), BA m = round(<k>/2)
  std::size_t pairs = 30;
  std::uint64_t seed = 1;
};

struct EnsembleSample {
  std::string condition;  // "ER-ER", "BA-BA" or "ER-BA"
  std::size_t pair = 0;
  double d_js = 0.0;
};

/// Divergences between independent realizations within and across the ER and
/// BA ensembles at matched size and mean degree.
std::vector<EnsembleSample> ensemble_distributions(const EnsembleParams& params);

struct RewiringParams {
  std::size_t n_nodes = 300;
  double er_p = 3.0 / 299.0;
  std::size_t ba_m = 3;
  std::vector<std::size_t> rewirings{0, 10, 100, 1000};
  std::size_t samples = 30;
  std::uint64_t seed = 1;
  bool include_er = true;
  bool include_ba = true;
};

struct CurvePoint {
  std::string model;     // "ER" or "BA"
  std::string rewiring;  // "random" or "degree-preserving"
  std::size_t n_rewirings = 0;
  std::size_t samples = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation
};

/// Mean divergence between a base graph and its rewired copy, per model,
/// rewiring type and rewiring count. Sample s uses the same base graph for
/// every rewiring count and type.
std::vector<CurvePoint> rewiring_curve(const RewiringParams& params);

}  // namespace npd::experiments
