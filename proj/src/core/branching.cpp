#include "qfilt/core/branching.hpp"

#include <algorithm>
#include <cmath>

#include "qfilt/errors.hpp"

namespace qfilt {

BranchingVerdict validate_branching(std::span<const double> weights, std::size_t n_target,
                                    std::size_t trials, SeededRng& rng,
                                    const Resampler& resampler) {
  if (trials < 10'000) throw ConfigError("validate_branching: trials must be >= 1e4");
  const std::size_t n = weights.size();
  std::vector<double> probs(weights.begin(), weights.end());
  {
    double total = 0.0;
    for (double w : probs) total += w;
    if (!(total > 0.0)) throw DegenerateWeightsError("validate_branching: all weights are zero");
    for (double& w : probs) w /= total;
  }

  BranchingVerdict verdict;
  std::vector<double> sum(n, 0.0);
  std::vector<double> cross(n * n, 0.0);
  SeededRng draw_rng = rng.substream(0);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const ResampleOutcome outcome = resampler(probs, n_target, draw_rng);
    std::size_t total = 0;
    for (std::size_t c : outcome.offspring_counts) total += c;
    if (total != n_target || outcome.offspring_counts.size() != n) {
      verdict.conserves_particle_number = false;
    }
    const std::size_t m = std::min(n, outcome.offspring_counts.size());
    for (std::size_t i = 0; i < m; ++i) {
      const double xi = static_cast<double>(outcome.offspring_counts[i]);
      sum[i] += xi;
      if (xi == 0.0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        cross[i * n + j] += xi * static_cast<double>(outcome.offspring_counts[j]);
      }
    }
  }

  const double t = static_cast<double>(trials);
  const double nt = static_cast<double>(n_target);
  BranchingStats& stats = verdict.stats;
  stats.trials = trials;
  stats.empirical_mean_counts.resize(n);
  stats.empirical_covariance.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) stats.empirical_mean_counts[i] = sum[i] / t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      stats.empirical_covariance[i * n + j] =
          cross[i * n + j] / t - stats.empirical_mean_counts[i] * stats.empirical_mean_counts[j];
    }
  }
  // Symmetrize away the rounding asymmetry of the two accumulation orders.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (stats.empirical_covariance[i * n + j] +
                                stats.empirical_covariance[j * n + i]);
      stats.empirical_covariance[i * n + j] = avg;
      stats.empirical_covariance[j * n + i] = avg;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const double expected = nt * probs[i];
    const double se = std::sqrt(nt * probs[i] * (1.0 - probs[i]) / t);
    if (std::abs(stats.empirical_mean_counts[i] - expected) > 4.0 * se + 1e-12) {
      verdict.mean_proportional = false;
    }
  }

  verdict.quadratic_bound = 1.0 + 5.0 / std::sqrt(t);
  SeededRng probe_rng = rng.substream(1);
  std::vector<double> q(n);
  for (int probe = 0; probe < 100; ++probe) {
    for (double& qi : q) qi = probe_rng.uniform(-1.0, 1.0);
    double form = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) form += q[i] * stats.empirical_covariance[i * n + j] * q[j];
    }
    verdict.max_quadratic_ratio = std::max(verdict.max_quadratic_ratio, form / nt);
  }
  verdict.covariance_bounded = verdict.max_quadratic_ratio <= verdict.quadratic_bound;
  return verdict;
}

}  // namespace qfilt
