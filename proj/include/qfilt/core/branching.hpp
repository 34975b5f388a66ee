#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qfilt/core/resample.hpp"
#include "qfilt/core/rng.hpp"

namespace qfilt {

using Resampler =
    std::function<ResampleOutcome(std::span<const double>, std::size_t, SeededRng&)>;

/// Empirical first and second moments of offspring counts over repeated draws.
struct BranchingStats {
  std::vector<double> empirical_mean_counts;
  /// Row-major n x n covariance of the offspring counts.
  std::vector<double> empirical_covariance;
  std::size_t trials = 0;

  double covariance(std::size_t i, std::size_t j) const {
    return empirical_covariance[i * empirical_mean_counts.size() + j];
  }
};

struct BranchingVerdict {
  BranchingStats stats;
  bool conserves_particle_number = true;
  bool mean_proportional = true;
  bool covariance_bounded = true;
  /// Largest q^T A q / n_target seen over the random probe vectors.
  double max_quadratic_ratio = 0.0;
  /// Accepted upper bound for that ratio: 1 + 5 / sqrt(trials).
  double quadratic_bound = 0.0;

  bool passed() const noexcept {
    return conserves_particle_number && mean_proportional && covariance_bounded;
  }
};

/**
 * Empirically checks the branching conditions a resampler needs for the
 * standard 1/n convergence bounds: constant particle number, offspring means
 * n * G_i (4 standard errors), and q^T A q <= n c with c = 1 + 5/sqrt(trials)
 * for 100 random probes |q_i| < 1.
 */
BranchingVerdict validate_branching(std::span<const double> weights, std::size_t n_target,
                                    std::size_t trials, SeededRng& rng,
                                    const Resampler& resampler = multinomial_resample);

}  // namespace qfilt
