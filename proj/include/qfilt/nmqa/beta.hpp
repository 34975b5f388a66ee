#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qfilt/core/interval.hpp"
#include "qfilt/core/rng.hpp"
#include "qfilt/nmqa/config.hpp"

namespace qfilt::nmqa {

/// Candidate length scales at the measured location for one alpha particle.
struct BetaLayer {
  std::vector<double> samples;
};

/**
 * Uniform: i.i.d. on r_bounds. TruncGauss: N(r_bar, r_bar * C_prev) truncated
 * to r_bounds. TruncGauss without a stored Fano factor (location never
 * scored) falls back to Uniform.
 */
BetaLayer generate_beta(BetaStrategy strategy, double r_bar, std::optional<double> fano_prev,
                        Interval r_bounds, std::size_t n_beta, SeededRng& rng);

}  // namespace qfilt::nmqa
