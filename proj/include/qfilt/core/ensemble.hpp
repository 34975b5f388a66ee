#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "qfilt/errors.hpp"

namespace qfilt {

/// Normalizes in place. Throws DegenerateWeightsError if the total is zero.
inline void normalize_weights(std::span<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError("weights must be finite and non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) throw DegenerateWeightsError("all weights are zero");
  for (double& w : weights) w /= total;
}

/// Particles with normalized weights at a given generation.
template <typename State>
struct WeightedEnsemble {
  std::vector<State> positions;
  std::vector<double> weights;
  int generation_index = 0;

  static WeightedEnsemble uniform(std::vector<State> positions, int generation = 0) {
    if (positions.empty()) throw ConfigError("ensemble needs at least one particle");
    const auto n = positions.size();
    return WeightedEnsemble{std::move(positions),
                            std::vector<double>(n, 1.0 / static_cast<double>(n)), generation};
  }

  std::size_t size() const noexcept { return positions.size(); }

  /// Checks equal lengths and unit total weight (1e-12).
  bool is_valid() const {
    if (positions.empty() || positions.size() != weights.size()) return false;
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    return std::abs(total - 1.0) <= 1e-12;
  }
};

}  // namespace qfilt
