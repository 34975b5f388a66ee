#pragma once

#include <functional>

#include "qfilt/core/ensemble.hpp"
#include "qfilt/core/interval.hpp"
#include "qfilt/core/rng.hpp"
#include "qfilt/measurement.hpp"

namespace qfilt {

/// Markov transition applied to each particle between measurements.
struct TransitionKernel {
  std::function<double(double, SeededRng&)> apply;
  bool static_flag = false;

  /// Dirac-delta kernel: positions do not move.
  static TransitionKernel identity();
};


/// Bootstrap particle filter over a scalar state observed through single shots.
struct BootstrapState {
  WeightedEnsemble<double> ensemble;
  MeasurementModel model;
  SignalMap signal;
  TransitionKernel kernel;
  int t = 0;
  /// Number of steps that fell back to uniform resampling.
  int degenerate_steps = 0;
};

struct Moments {
  double mean;
  double variance;
};

/// n i.i.d. uniform draws on `prior_bounds`, uniform weights.
BootstrapState bootstrap_init(Interval prior_bounds, std::size_t n, SeededRng& rng,
                              MeasurementModel model = MeasurementModel{},
                              SignalMap signal = SignalMap::ramsey(),
                              TransitionKernel kernel = TransitionKernel::identity());

/// Propagate, weight by the likelihood of `outcome`, multinomially resample to n.
BootstrapState bootstrap_step(BootstrapState state, int outcome, SeededRng& rng);

Moments empirical_moments(const WeightedEnsemble<double>& ensemble);
inline Moments empirical_moments(const BootstrapState& state) {
  return empirical_moments(state.ensemble);
}

}  // namespace qfilt
