#include <algorithm>
#include "qfilt/nmqa/resample.hpp"

#include <cmath>
#include <limits>

#include "qfilt/errors.hpp"

namespace qfilt::nmqa {

std::size_t TwoStageOutcome::survivors(std::size_t alpha) const {
  std::size_t total = 0;
  for (std::size_t b = 0; b < n_beta; ++b) total += pair_counts[alpha * n_beta + b];
  return total;
}

TwoStageOutcome two_stage_resample(std::span<const double> pair_weights, std::size_t n_alpha,
                                   std::size_t n_beta, SeededRng& rng) {
  if (pair_weights.size() != n_alpha * n_beta || n_alpha == 0 || n_beta == 0) {
    throw ConfigError("two_stage_resample: weights must be n_alpha x n_beta");
  }
  TwoStageOutcome out;
  out.n_alpha = n_alpha;
  out.n_beta = n_beta;

  const std::size_t n_pairs = n_alpha * n_beta;
  bool degenerate = false;
  const ResampleOutcome stage_one =
      multinomial_resample_or_uniform(pair_weights, n_pairs, rng, degenerate);
  out.degenerate = degenerate;
  out.pair_counts = stage_one.offspring_counts;

  out.omega.assign(n_alpha, 0.0);
  for (std::size_t a = 0; a < n_alpha; ++a) {
    out.omega[a] = static_cast<double>(out.survivors(a)) / static_cast<double>(n_pairs);
  }
  out.alpha_offspring = multinomial_resample(out.omega, n_alpha, rng);
  return out;
}

SurvivorSummary summarize_survivors(std::span<const double> samples,
                                    std::span<const std::size_t> counts) {
  // Moments about the first survivor so identical samples give exactly zero variance.
  std::size_t first = 0;
  while (first < samples.size() && counts[first] == 0) ++first;
  if (first == samples.size()) throw ConfigError("summarize_survivors: no survivors");
  const double shift = samples[first];
  double total = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::size_t i = first; i < samples.size(); ++i) {
    const double c = static_cast<double>(counts[i]);
    const double dx = samples[i] - shift;
    total += c;
    m1 += c * dx;
    m2 += c * dx * dx;
  }
  m1 /= total;
  const double mean = shift + m1;
  const double variance = std::max(0.0, m2 / total - m1 * m1);
  return {mean, variance, mean > 0.0 ? variance / mean : 0.0};
}

double fano_factor(std::span<const double> samples, double r_mean) {
  if (samples.empty()) throw ConfigError("fano_factor: empty sample");
  double mean = 0.0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(samples.size());
  double variance = 0.0;
  for (double x : samples) variance += (x - mean) * (x - mean);
  variance /= static_cast<double>(samples.size());
  return variance / r_mean;
}

std::size_t select_next_location(std::span<const double> fano, std::span<const long> tau) {
  for (std::size_t k = 0; k < tau.size(); ++k) {
    if (tau[k] == 0) return k;
  }
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < fano.size(); ++k) {
    if (!std::isnan(fano[k]) && fano[k] > best_value) {
      best_value = fano[k];
      best = k;
    }
  }
  return best;
}

}  // namespace qfilt::nmqa
