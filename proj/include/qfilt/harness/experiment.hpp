#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qfilt/harness/config.hpp"
#include "qfilt/simworld.hpp"

namespace qfilt::harness {

/// One filter trajectory against a fixed ground truth.
struct RunRecord {
  /// posterior_f[t - 1] is the posterior mean field after step t.
  std::vector<std::vector<double>> posterior_f;
  std::vector<double> L;
  std::vector<std::size_t> locations;
  std::uint64_t truth_stream = 0;
  std::uint64_t filter_stream = 0;
  int attempts = 1;
  int degenerate_steps = 0;
  double wall_time_s = 0.0;
};

/// Seeds and bookkeeping for one (n_alpha, repetition) cell.
struct CellInfo {
  std::size_t n_alpha = 0;
  std::size_t repetition = 0;
  std::uint64_t truth_stream = 0;
  std::uint64_t filter_stream = 0;
  int attempts = 1;
  int degenerate_steps = 0;
  double wall_time_s = 0.0;
  std::vector<std::string> failures;
};

struct ScalingResult {
  std::string case_name;
  std::string strategy;
  std::vector<std::size_t> n_alpha_grid;
  std::vector<std::size_t> n_beta;
  std::size_t t_max = 0;
  /// mean_L[i][t - 1] and sem_L[i][t - 1] for n_alpha_grid[i].
  std::vector<std::vector<double>> mean_L;
  std::vector<std::vector<double>> sem_L;
  /// Log-log slope per t; NaN where the fit is undefined.
  std::vector<double> epsilon;
  std::vector<double> intercept;
  std::vector<std::vector<double>> residuals;
  std::vector<CellInfo> cells;
  double wall_time_s = 0.0;

  /// Median epsilon over t in [t_lo, t_hi], skipping undefined fits.
  double median_epsilon(std::size_t t_lo, std::size_t t_hi) const;
};

/// Stream ids for a cell. The truth stream depends only on the repetition and
/// attempt so every particle count sees the same simulated shot sequence.
std::uint64_t truth_stream_id(std::size_t repetition, int attempt);
std::uint64_t filter_stream_id(const ExperimentConfig& config, std::size_t n_alpha,
                               std::size_t repetition, int attempt);

/// Runs NMQA for t_max steps with the controller choosing each location.
RunRecord run_trajectory(const ExperimentConfig& config, std::size_t n_alpha,
                         std::size_t repetition, int attempt = 0);

/// Every (n_alpha, repetition) trajectory, then per-t means and epsilon fits.
/// Failed trajectories are retried with fresh streams up to three attempts.
ScalingResult run_scaling_experiment(const ExperimentConfig& config);

}  // namespace qfilt::harness
