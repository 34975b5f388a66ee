#include "qfilt/core/resample.hpp"

#include <algorithm>
#include <cmath>

#include "qfilt/errors.hpp"

namespace qfilt {

ResampleOutcome multinomial_resample(std::span<const double> weights, std::size_t n_target,
                                     SeededRng& rng) {
  if (weights.empty()) throw ConfigError("multinomial_resample: empty weight vector");
  if (n_target < 1) throw ConfigError("multinomial_resample: n_target must be >= 1");

  std::vector<double> cumulative(weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError("multinomial_resample: weights must be finite and non-negative");
    }
    total += w;
    cumulative[i] = total;
  }
  if (!(total > 0.0)) throw DegenerateWeightsError("multinomial_resample: all weights are zero");

  std::size_t last_positive = weights.size() - 1;
  while (weights[last_positive] == 0.0) --last_positive;

  std::vector<double> uniforms(n_target);
  for (double& u : uniforms) u = rng.uniform() * total;
  std::sort(uniforms.begin(), uniforms.end());

  ResampleOutcome out;
  out.offspring_counts.assign(weights.size(), 0);
  out.parent_indices.reserve(n_target);
  std::size_t category = 0;
  for (double u : uniforms) {
    // Strict inequality skips zero-weight categories whose cumulative value repeats.
    while (category < last_positive && !(u < cumulative[category])) ++category;
    out.offspring_counts[category] += 1;
    out.parent_indices.push_back(category);
  }
  return out;
}

ResampleOutcome multinomial_resample_or_uniform(std::span<const double> weights,
                                                std::size_t n_target, SeededRng& rng,
                                                bool& degenerate) {
  try {
    degenerate = false;
    return multinomial_resample(weights, n_target, rng);
  } catch (const DegenerateWeightsError&) {
    degenerate = true;
    const std::vector<double> flat(weights.size(), 1.0);
    return multinomial_resample(flat, n_target, rng);
  }
}

}  // namespace qfilt
