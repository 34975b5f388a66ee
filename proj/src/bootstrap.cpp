#include "qfilt/bootstrap.hpp"

#include "qfilt/core/resample.hpp"
#include "qfilt/errors.hpp"

namespace qfilt {

TransitionKernel TransitionKernel::identity() {
  return TransitionKernel{[](double x, SeededRng&) { return x; }, true};
}

BootstrapState bootstrap_init(Interval prior_bounds, std::size_t n, SeededRng& rng,
                              MeasurementModel model, SignalMap signal, TransitionKernel kernel) {
  if (n < 1) throw ConfigError("bootstrap_init: need n >= 1");
  if (prior_bounds.empty()) throw ConfigError("bootstrap_init: empty prior interval");
  std::vector<double> positions(n);
  for (double& x : positions) x = rng.uniform(prior_bounds.lo, prior_bounds.hi);
  return BootstrapState{WeightedEnsemble<double>::uniform(std::move(positions)), std::move(model),
                        std::move(signal), std::move(kernel)};
}

BootstrapState bootstrap_step(BootstrapState state, int outcome, SeededRng& rng) {
  auto& positions = state.ensemble.positions;
  const std::size_t n = positions.size();
  if (!state.kernel.static_flag) {
    for (double& x : positions) x = state.kernel.apply(x, rng);
  }

  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = likelihood(outcome, state.signal.forward(positions[i]), state.model);
  }
  bool degenerate = false;
  const ResampleOutcome drawn = multinomial_resample_or_uniform(weights, n, rng, degenerate);
  if (degenerate) ++state.degenerate_steps;

  std::vector<double> next(n);
  for (std::size_t i = 0; i < n; ++i) next[i] = positions[drawn.parent_indices[i]];
  state.ensemble = WeightedEnsemble<double>::uniform(std::move(next), state.t + 1);
  state.t += 1;
  return state;
}

Moments empirical_moments(const WeightedEnsemble<double>& ensemble) {
  double mean = 0.0;
  for (std::size_t i = 0; i < ensemble.size(); ++i) mean += ensemble.weights[i] * ensemble.positions[i];
  double variance = 0.0;
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    const double dx = ensemble.positions[i] - mean;
    variance += ensemble.weights[i] * dx * dx;
  }
  return {mean, variance};
}

}  // namespace qfilt
