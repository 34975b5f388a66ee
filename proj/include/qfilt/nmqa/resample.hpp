#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfilt/core/resample.hpp"
#include "qfilt/core/rng.hpp"

namespace qfilt::nmqa {

/// Result of resampling (alpha, beta) pairs and then alpha parents.
struct TwoStageOutcome {
  std::size_t n_alpha = 0;
  std::size_t n_beta = 0;
  /// Stage one offspring per pair, index alpha * n_beta + beta; sums to n_alpha * n_beta.
  std::vector<std::size_t> pair_counts;
  /// Surviving beta count of each alpha over the stage-one total.
  std::vector<double> omega;
  /// Stage two draw over alpha parents with weights omega; n_alpha offspring.
  ResampleOutcome alpha_offspring;
  bool degenerate = false;

  std::size_t survivors(std::size_t alpha) const;
};

/// Pair weights are row-major n_alpha x n_beta and need not be normalized.
/// All-zero weights fall back to uniform and set `degenerate`.
TwoStageOutcome two_stage_resample(std::span<const double> pair_weights, std::size_t n_alpha,
                                   std::size_t n_beta, SeededRng& rng);

/// Mean, population variance and variance-to-mean ratio of a weighted sample.
struct SurvivorSummary {
  double mean = 0.0;
  double variance = 0.0;
  double fano = 0.0;
};

/// Summary of beta samples weighted by their offspring counts (at least one positive).
SurvivorSummary summarize_survivors(std::span<const double> samples,
                                    std::span<const std::size_t> counts);

/// Var(samples) / r_mean with the population (1/n) variance.
double fano_factor(std::span<const double> samples, double r_mean);

struct ControlRecord {
  /// Last computed Fano factor per location; NaN where none has been computed.
  std::vector<double> fano;
  std::size_t next_location = 0;
};

/// Lowest-index never-measured location if any; otherwise argmax of fano,
/// lowest index on ties, ignoring NaN entries.
std::size_t select_next_location(std::span<const double> fano, std::span<const long> tau);

}  // namespace qfilt::nmqa
