#include "qfilt/core/truncated_normal.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>

#include "qfilt/errors.hpp"

namespace qfilt {
namespace {

double standard_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// Standard normal restricted to [a, b] with a <= 0 side handled accurately.
double sample_standard_window(double a, double b, SeededRng& rng) {
  if (a > 0.0) return -sample_standard_window(-b, -a, rng);
  const double pa = standard_cdf(a);
  const double pb = standard_cdf(b);
  if (!(pb > pa)) return std::abs(a) < std::abs(b) ? a : b;
  double u = pa + rng.uniform() * (pb - pa);
  if (u <= 0.0) return a;
  if (u >= 1.0) return b;
  const double z = -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u);
  return z < a ? a : (z > b ? b : z);
}

}  // namespace

double sample_truncated_normal(double mean, double stddev, Interval support, SeededRng& rng) {
  if (support.empty()) throw ConfigError("sample_truncated_normal: empty support");
  if (!(stddev > 0.0)) return support.clamp(mean);
  const double a = (support.lo - mean) / stddev;
  const double b = (support.hi - mean) / stddev;
  return support.clamp(mean + stddev * sample_standard_window(a, b, rng));
}

}  // namespace qfilt
