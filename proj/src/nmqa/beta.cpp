#include "qfilt/nmqa/beta.hpp"

#include <cmath>

#include "qfilt/core/truncated_normal.hpp"
#include "qfilt/errors.hpp"

namespace qfilt::nmqa {

BetaLayer generate_beta(BetaStrategy strategy, double r_bar, std::optional<double> fano_prev,
                        Interval r_bounds, std::size_t n_beta, SeededRng& rng) {
  if (r_bounds.empty()) throw ConfigError("generate_beta: empty r_bounds");
  BetaLayer layer;
  layer.samples.resize(n_beta);
  if (strategy == BetaStrategy::uniform || !fano_prev) {
    for (double& r : layer.samples) r = rng.uniform(r_bounds.lo, r_bounds.hi);
    return layer;
  }
  const double variance = std::max(0.0, r_bar * *fano_prev);
  const double stddev = std::sqrt(variance);
  for (double& r : layer.samples) r = sample_truncated_normal(r_bar, stddev, r_bounds, rng);
  return layer;
}

}  // namespace qfilt::nmqa
