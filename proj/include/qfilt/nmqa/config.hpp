#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "qfilt/core/interval.hpp"
#include "qfilt/simworld.hpp"

namespace qfilt::nmqa {

/// How beta-layer length-scale candidates are drawn each step.
enum class BetaStrategy { uniform, trunc_gauss };

std::string_view to_string(BetaStrategy strategy);
BetaStrategy parse_beta_strategy(std::string_view name);

struct NmqaConfig {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double sigma_v = 0.0;
  double mu_F = 0.0;
  double sigma_F = 1.0;
  std::size_t n_alpha = 3;
  /// Defaults to round(2/3 n_alpha), at least 1.
  std::optional<std::size_t> n_beta;
  double k0 = 1.0;
  BetaStrategy beta_strategy = BetaStrategy::trunc_gauss;
  /// Defaults to [min separation, r_max_multiple * max separation].
  std::optional<Interval> r_bounds;
  double r_max_multiple = 3.0;
  double bound_b = 0.5;
  /// Rescale pair weights by their maximum in log space before resampling.
  /// Off by default: weights are the plain product g1 * g2, and a step where
  /// every product underflows takes the uniform fallback.
  bool log_space_weights = false;

  std::size_t resolved_n_beta() const;
  Interval resolved_r_bounds(const Geometry& geometry) const;
  /// Throws ConfigError on out-of-range parameters.
  void validate() const;
};

}  // namespace qfilt::nmqa
