#include "qfilt/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfilt/errors.hpp"

namespace qfilt {

double compute_rho0(double bound_b, double sigma_v) {
  if (!(bound_b > 0.0)) throw InvalidModelError("compute_rho0: bound b must be positive");
  if (!(sigma_v >= 0.0)) throw InvalidModelError("compute_rho0: sigma_v must be non-negative");
  if (sigma_v == 0.0) return 1.0;

  const double width = std::sqrt(2.0 * sigma_v);
  const double x = 2.0 * bound_b / width;
  const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
  // The last two terms nearly cancel for small sigma_v; -expm1 keeps the difference accurate.
  const double tail = (width / (2.0 * bound_b)) * inv_sqrt_pi * std::expm1(-x * x);
  return std::clamp(std::erf(x) + tail, 0.0, 1.0);
}

MeasurementModel::MeasurementModel(double sigma_v, double bound_b)
    : sigma_v_(sigma_v), bound_b_(bound_b), rho0_(compute_rho0(bound_b, sigma_v)) {}

MeasurementModel::MeasurementModel(double sigma_v, double lower_bound, double upper_bound)
    : MeasurementModel(sigma_v, upper_bound) {
  if (lower_bound != -upper_bound) {
    throw InvalidModelError("MeasurementModel: asymmetric quantization bounds are not supported");
  }
}

void MeasurementModel::set_sigma_v(double sigma_v) {
  rho0_ = compute_rho0(bound_b_, sigma_v);
  sigma_v_ = sigma_v;
}

void MeasurementModel::set_bound_b(double bound_b) {
  rho0_ = compute_rho0(bound_b, sigma_v_);
  bound_b_ = bound_b;
}

double likelihood(int outcome, double s_value, const MeasurementModel& model) {
  const double rho0 = model.rho0();
  return outcome == 1 ? rho0 / 2.0 + rho0 * s_value : rho0 / 2.0 - rho0 * s_value;
}

int sample_outcome(double born_probability, SeededRng& rng) {
  return rng.bernoulli(std::clamp(born_probability, 0.0, 1.0)) ? 1 : 0;
}

double ramsey_forward(double phase) { return 0.5 * std::cos(phase); }

Clamped ramsey_inverse_checked(double z) {
  const bool out_of_range = z < -0.5 - 1e-9 || z > 0.5 + 1e-9;
  const double arg = std::clamp(2.0 * z, -1.0, 1.0);
  return {std::acos(arg), out_of_range};
}

double ramsey_inverse(double z) { return ramsey_inverse_checked(z).value; }

SignalMap SignalMap::ramsey() {
  return SignalMap{ramsey_forward, ramsey_inverse_checked, 0.0, std::numbers::pi};
}

}  // namespace qfilt
