#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qfilt {

/// Likelihood of `outcome` given the state at grid cell `cell`.
using CellLikelihood = std::function<double(std::size_t cell, int outcome)>;

/**
 * Exact discrete Bayes recursion on a 1-D grid (at most 1e4 cells).
 *
 * Used as ground truth for particle-filter tests. Throws
 * ImpossibleObservationError when an observation has zero total mass.
 */
std::vector<double> grid_bayes_oracle(std::span<const double> prior,
                                      const CellLikelihood& likelihood,
                                      std::span<const int> observations);

/// Cell centres of an n-cell grid spanning [lo, hi] inclusive of both ends.
std::vector<double> grid_points(double lo, double hi, std::size_t cells);

double grid_mean(std::span<const double> points, std::span<const double> probabilities);

}  // namespace qfilt
