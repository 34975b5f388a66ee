#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfilt/core/rng.hpp"
#include "qfilt/measurement.hpp"
#include "qfilt/nmqa/config.hpp"
#include "qfilt/nmqa/resample.hpp"
#include "qfilt/nmqa/shared_data.hpp"
#include "qfilt/simworld.hpp"

namespace qfilt::nmqa {

/// Map hypothesis: field value f and length scale r at every location.
struct AlphaParticle {
  std::vector<double> f;
  std::vector<double> r;
};

struct StepReport {
  std::size_t location = 0;
  int outcome = 0;
  bool degenerate = false;
  double fano = 0.0;
  std::vector<DataMessage> messages;
};

/// Data messages from j to each q in `neighborhood_set`, drawn as
/// Bernoulli(1/2 + s(chi)) with chi built from posterior-mean quantities.
std::vector<DataMessage> emit_data_messages(std::span<const double> posterior_f,
                                            double posterior_r_j, std::size_t j,
                                            std::span<const std::size_t> neighborhood_set,
                                            std::span<const long> tau, double lambda2,
                                            const Geometry& geometry, const SignalMap& signal,
                                            SeededRng& rng);

/**
 * Adaptive two-layer particle filter for a static field over a qubit array.
 *
 * Each step takes one physical outcome at location j and runs: beta
 * generation, g1 * g2 scoring of all (alpha, beta) pairs (in log space),
 * two-stage multinomial resampling, Fano-factor bookkeeping, selection of
 * the next location, and emission of data messages to the posterior
 * neighborhood of j. The field transition is the identity.
 */
class NmqaFilter {
 public:
  NmqaFilter(NmqaConfig config, Geometry geometry, SeededRng& rng,
             SignalMap signal = SignalMap::ramsey());

  /// Location the controller wants measured next.
  std::size_t next_location() const noexcept { return control_.next_location; }
  StepReport step(std::size_t j, int y, SeededRng& rng);

  std::vector<double> posterior_f_mean() const;
  std::vector<double> posterior_r_mean() const;

  const NmqaConfig& config() const noexcept { return config_; }
  const Geometry& geometry() const noexcept { return geometry_; }
  const MeasurementModel& model() const noexcept { return model_; }
  const std::vector<AlphaParticle>& particles() const noexcept { return particles_; }
  const SharedDataState& shared() const noexcept { return shared_; }
  const ControlRecord& control() const noexcept { return control_; }
  const TwoStageOutcome& last_resample() const noexcept { return last_resample_; }
  Interval r_bounds() const noexcept { return r_bounds_; }
  int t() const noexcept { return t_; }
  int degenerate_steps() const noexcept { return degenerate_steps_; }
  int clamp_warnings() const noexcept { return clamp_warnings_; }

 private:
  void refresh_field_estimates();

  NmqaConfig config_;
  Geometry geometry_;
  SignalMap signal_;
  MeasurementModel model_;
  Interval f_bounds_;
  Interval r_bounds_;
  std::size_t n_beta_;
  double k1_;
  std::vector<AlphaParticle> particles_;
  SharedDataState shared_;
  ControlRecord control_;
  TwoStageOutcome last_resample_;
  /// h estimates, d x n_alpha, refreshed each step.
  std::vector<double> h_table_;
  int t_ = 0;
  int degenerate_steps_ = 0;
  int clamp_warnings_ = 0;
};

}  // namespace qfilt::nmqa
