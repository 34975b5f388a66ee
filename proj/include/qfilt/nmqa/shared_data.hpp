#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qfilt/core/rng.hpp"
#include "qfilt/measurement.hpp"

namespace qfilt::nmqa {

struct PhysicalMeasurement {
  std::size_t location;
  int outcome;
};

struct DataMessage {
  std::size_t location;
  int outcome;
};

using DataEvent = std::variant<PhysicalMeasurement, DataMessage>;

/**
 * Per-location measurement and message bookkeeping shared by all alpha
 * particles.
 *
 * tau/phi count physical measurements and data messages. kappa/gamma are
 * d x n_alpha running means of those outcomes; before the first event at a
 * location they hold the particle's initial Bernoulli draw.
 */
struct SharedDataState {
  std::size_t d = 0;
  std::size_t n_alpha = 0;
  std::vector<long> tau;
  std::vector<long> phi;
  std::vector<double> kappa;
  std::vector<double> gamma;

  /// kappa_0 = gamma_0 = Bernoulli(1/2 + s(f0)). `initial_f` is n_alpha x d, row per particle.
  static SharedDataState initialize(std::size_t d, std::size_t n_alpha,
                                    std::span<const double> initial_f, const SignalMap& signal,
                                    SeededRng& rng);

  double kappa_at(std::size_t k, std::size_t alpha) const { return kappa[k * n_alpha + alpha]; }
  double gamma_at(std::size_t k, std::size_t alpha) const { return gamma[k * n_alpha + alpha]; }
  bool touched(std::size_t k) const { return tau[k] > 0 || phi[k] > 0; }

  /// Applies one event in place.
  void apply(const DataEvent& event);

  /// Re-labels particle columns after resampling: new column a copies column parents[a].
  void reorder_particles(std::span<const std::size_t> parents);
};

/// Value-semantic form of SharedDataState::apply.
SharedDataState update_counts_and_stats(SharedDataState state, const DataEvent& event);

}  // namespace qfilt::nmqa
