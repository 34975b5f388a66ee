#include "qfilt/core/grid_oracle.hpp"

#include <cmath>

#include "qfilt/errors.hpp"

namespace qfilt {

std::vector<double> grid_bayes_oracle(std::span<const double> prior,
                                      const CellLikelihood& likelihood,
                                      std::span<const int> observations) {
  if (prior.empty() || prior.size() > 10'000) {
    throw ConfigError("grid_bayes_oracle: grid size must be in [1, 1e4]");
  }
  double prior_total = 0.0;
  for (double p : prior) {
    if (!(p >= 0.0)) throw ConfigError("grid_bayes_oracle: prior must be non-negative");
    prior_total += p;
  }
  if (std::abs(prior_total - 1.0) > 1e-9) throw ConfigError("grid_bayes_oracle: prior must sum to 1");

  std::vector<double> posterior(prior.begin(), prior.end());
  for (std::size_t step = 0; step < observations.size(); ++step) {
    double mass = 0.0;
    for (std::size_t cell = 0; cell < posterior.size(); ++cell) {
      posterior[cell] *= likelihood(cell, observations[step]);
      mass += posterior[cell];
    }
    if (!(mass > 0.0)) {
      throw ImpossibleObservationError("grid_bayes_oracle: zero likelihood mass at step " +
                                       std::to_string(step));
    }
    for (double& p : posterior) p /= mass;
  }
  return posterior;
}

std::vector<double> grid_points(double lo, double hi, std::size_t cells) {
  if (cells == 0) throw ConfigError("grid_points: need at least one cell");
  std::vector<double> points(cells, lo);
  if (cells == 1) return points;
  const double step = (hi - lo) / static_cast<double>(cells - 1);
  for (std::size_t i = 0; i < cells; ++i) points[i] = lo + step * static_cast<double>(i);
  return points;
}

double grid_mean(std::span<const double> points, std::span<const double> probabilities) {
  double mean = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) mean += points[i] * probabilities[i];
  return mean;
}

}  // namespace qfilt
