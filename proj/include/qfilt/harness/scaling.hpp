#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qfilt/simworld.hpp"

namespace qfilt::harness {

/// Per-qubit squared error ||posterior - truth||^2 / d of a single run.
double compute_L(std::span<const double> posterior_f_mean, const TrueField& truth);

struct EpsilonFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;
  /// Particle counts dropped because their mean error was not positive.
  std::vector<double> excluded;
};

/// OLS slope of log(mean L) on log(n_alpha). Non-positive L values are
/// excluded; fewer than three remaining points throws UndefinedFitError.
EpsilonFit fit_epsilon(std::span<const std::pair<double, double>> mean_L_per_n);

/// Median of a non-empty sample (mean of the two middle values for even sizes).
double median(std::vector<double> values);

}  // namespace qfilt::harness
