#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfilt/core/rng.hpp"

namespace qfilt {

/// Offspring counts per parent and the (sorted) multiset of chosen parents.
struct ResampleOutcome {
  std::vector<std::size_t> offspring_counts;
  std::vector<std::size_t> parent_indices;

  std::size_t total() const noexcept { return parent_indices.size(); }
};

/**
 * One multinomial draw of `n_target` offspring with category probabilities
 * proportional to `weights`.
 *
 * Inverse CDF over the cumulative weights with one sorted batch of uniforms.
 * Throws DegenerateWeightsError when every weight is zero.
 */
ResampleOutcome multinomial_resample(std::span<const double> weights, std::size_t n_target,
                                     SeededRng& rng);

/// Same draw but a uniform fallback instead of throwing; `degenerate` records it.
ResampleOutcome multinomial_resample_or_uniform(std::span<const double> weights,
                                                std::size_t n_target, SeededRng& rng,
                                                bool& degenerate);

}  // namespace qfilt
