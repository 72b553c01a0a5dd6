#include "experiments.hpp"

#include <cmath>
#include <numeric>

#include "npd/detail/parallel.hpp"
#include "npd/divergence.hpp"
#include "npd/ensembles.hpp"
#include "npd/rng.hpp"

namespace npd::experiments {

namespace {

// Stream indices keep every generated graph on its own seed.
enum Stream : std::uint64_t { kErA = 0, kErB, kBaA, kBaB, kBase, kRewire };

std::uint64_t stream_seed(std::uint64_t seed, Stream stream, std::uint64_t index) {
  return derive_seed(derive_seed(seed, stream), index);
}

}  // namespace

std::vector<EnsembleSample> ensemble_distributions(const EnsembleParams& params) {
  const std::size_t n = params.n_nodes;
  const double p = params.mean_degree / static_cast<double>(n - 1);
  const auto m = static_cast<std::size_t>(std::lround(params.mean_degree / 2.0));

  std::vector<EnsembleSample> out(3 * params.pairs);
  detail::parallel_for(params.pairs, [&](std::size_t i) {
    const Graph er_a = erdos_renyi(n, p, stream_seed(params.seed, kErA, i));
    const Graph er_b = erdos_renyi(n, p, stream_seed(params.seed, kErB, i));
    const Graph ba_a = barabasi_albert(n, m, stream_seed(params.seed, kBaA, i));
    const Graph ba_b = barabasi_albert(n, m, stream_seed(params.seed, kBaB, i));
    const Portrait pe = portrait(er_a), pb = portrait(ba_a);
    out[i] = {"ER-ER", i, portrait_divergence(pe, portrait(er_b)).d_js};
    out[params.pairs + i] = {"BA-BA", i, portrait_divergence(pb, portrait(ba_b)).d_js};
    out[2 * params.pairs + i] = {"ER-BA", i, portrait_divergence(pe, pb).d_js};
  });
  return out;
}

std::vector<CurvePoint> rewiring_curve(const RewiringParams& params) {
  struct Model {
    const char* name;
    bool ba;
  };
  std::vector<Model> models;
  if (params.include_er) models.push_back({"ER", false});
  if (params.include_ba) models.push_back({"BA", true});
  const char* kinds[] = {"random", "degree-preserving"};
  const std::size_t counts = params.rewirings.size();

  std::vector<CurvePoint> out;
  for (const Model& model : models) {
    // samples x (kind, count) divergences
    std::vector<double> values(params.samples * 2 * counts);
    detail::parallel_for(params.samples, [&](std::size_t s) {
      const std::uint64_t base_seed = stream_seed(params.seed, kBase, s);
      const Graph base = model.ba ? barabasi_albert(params.n_nodes, params.ba_m, base_seed)
                                  : erdos_renyi(params.n_nodes, params.er_p, base_seed);
      const Portrait base_portrait = portrait(base);
      for (std::size_t kind = 0; kind < 2; ++kind) {
        for (std::size_t c = 0; c < counts; ++c) {
          const std::uint64_t rewire_seed =
              stream_seed(params.seed, kRewire, (s * 2 + kind) * counts + c);
          const std::size_t steps = params.rewirings[c];
          const Graph perturbed = kind == 0 ? rewire_random(base, steps, rewire_seed)
                                            : rewire_degree_preserving(base, steps, rewire_seed);
          values[(s * 2 + kind) * counts + c] =
              portrait_divergence(base_portrait, portrait(perturbed)).d_js;
        }
      }
    });
    for (std::size_t kind = 0; kind < 2; ++kind) {
      for (std::size_t c = 0; c < counts; ++c) {
        double sum = 0.0;
        for (std::size_t s = 0; s < params.samples; ++s) {
          sum += values[(s * 2 + kind) * counts + c];
        }
        const double mean = params.samples ? sum / static_cast<double>(params.samples) : 0.0;
        double ss = 0.0;
        for (std::size_t s = 0; s < params.samples; ++s) {
          const double d = values[(s * 2 + kind) * counts + c] - mean;
          ss += d * d;
        }
        const double sd =
            params.samples > 1 ? std::sqrt(ss / static_cast<double>(params.samples - 1)) : 0.0;
        out.push_back({model.name, kinds[kind], params.rewirings[c], params.samples, mean, sd});
      }
    }
  }
  return out;
}

}  // namespace npd::experiments
