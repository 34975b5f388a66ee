#pragma once

#include <functional>

#include "qfilt/core/rng.hpp"

namespace qfilt {

/// Detection efficiency of a single-bit quantizer: the probability mass of
/// (uniform(-b, b) convolved with N(0, sigma_v)) that stays inside [-b, b].
/// Exactly 1 for sigma_v = 0. Throws InvalidModelError for b <= 0 or sigma_v < 0.
double compute_rho0(double bound_b, double sigma_v);

/// Amplitude-quantized projective measurement with symmetric bounds [-b, b].
class MeasurementModel {
 public:
  explicit MeasurementModel(double sigma_v = 0.0, double bound_b = 0.5);
  /// Rejects asymmetric bounds (lower != -upper).
  MeasurementModel(double sigma_v, double lower_bound, double upper_bound);

  double sigma_v() const noexcept { return sigma_v_; }
  double bound_b() const noexcept { return bound_b_; }
  double rho0() const noexcept { return rho0_; }

  void set_sigma_v(double sigma_v);
  void set_bound_b(double bound_b);

  /// True when b <= 3 sigma_v, where binarization discards most of the signal.
  bool model_failure_warning() const noexcept { return bound_b_ <= 3.0 * sigma_v_; }

 private:
  double sigma_v_;
  double bound_b_;
  double rho0_;
};

/// P(y | s) = rho0/2 + rho0 * s for y = 1 and rho0/2 - rho0 * s for y = 0.
double likelihood(int outcome, double s_value, const MeasurementModel& model);

/// Bernoulli draw with success probability clamped into [0, 1].
int sample_outcome(double born_probability, SeededRng& rng);

/// Value after clamping and whether the raw input was out of range.
struct Clamped {
  double value;
  bool out_of_range;
};

/// Ramsey signal s(F) = cos(F) / 2 on [0, pi].
double ramsey_forward(double phase);
/// arccos(2z) with z clamped into [-1/2, 1/2]; flags inputs more than 1e-9 outside.
Clamped ramsey_inverse_checked(double z);
double ramsey_inverse(double z);

/// Signal map with its inverse and the closed domain of the mapped state.
struct SignalMap {
  std::function<double(double)> forward;
  std::function<Clamped(double)> inverse;
  double domain_min = 0.0;
  double domain_max = 0.0;

  static SignalMap ramsey();
};

}  // namespace qfilt
