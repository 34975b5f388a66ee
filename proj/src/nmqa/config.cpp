#include "qfilt/nmqa/config.hpp"

#include <cmath>
#include <string>

#include "qfilt/errors.hpp"

namespace qfilt::nmqa {

std::string_view to_string(BetaStrategy strategy) {
  return strategy == BetaStrategy::uniform ? "Uniform" : "TruncGauss";
}

BetaStrategy parse_beta_strategy(std::string_view name) {
  if (name == "Uniform" || name == "uniform") return BetaStrategy::uniform;
  if (name == "TruncGauss" || name == "trunc_gauss") return BetaStrategy::trunc_gauss;
  throw ConfigError("unknown beta strategy: " + std::string(name));
}

std::size_t NmqaConfig::resolved_n_beta() const {
  if (n_beta) return *n_beta;
  const auto rounded = static_cast<std::size_t>(std::llround(2.0 * static_cast<double>(n_alpha) / 3.0));
  return rounded < 1 ? 1 : rounded;
}

Interval NmqaConfig::resolved_r_bounds(const Geometry& geometry) const {
  if (r_bounds) return *r_bounds;
  return Interval{geometry.min_separation(), r_max_multiple * geometry.max_separation()};
}

void NmqaConfig::validate() const {
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(lambda1) || !in_unit(lambda2)) throw ConfigError("lambda1, lambda2 must lie in [0, 1]");
  if (!(sigma_v >= 0.0)) throw ConfigError("sigma_v must be non-negative");
  if (!(sigma_F > 0.0)) throw ConfigError("sigma_F must be positive");
  if (n_alpha < 1) throw ConfigError("n_alpha must be >= 1");
  if (n_beta && *n_beta < 1) throw ConfigError("n_beta must be >= 1");
  if (!(k0 >= 1.0)) throw ConfigError("k0 must be >= 1");
  if (!(r_max_multiple > 0.0)) throw ConfigError("r_max_multiple must be positive");
  if (!(bound_b > 0.0)) throw ConfigError("bound_b must be positive");
  if (r_bounds && (r_bounds->empty() || !(r_bounds->lo > 0.0))) {
    throw ConfigError("r_bounds must be a non-empty interval of positive lengths");
  }
}

}  // namespace qfilt::nmqa
