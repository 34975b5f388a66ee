#include "oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

namespace qfilt::oracles {
namespace {

double phi(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

template <typename F>
double integrate(F f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12, &error);
}

}  // namespace

double rho0_quadrature(double bound_b, double sigma_v) {
  const double b = bound_b;
  if (sigma_v == 0.0) return 1.0;
  const double sigma = std::sqrt(sigma_v);
  // Density of U(-b, b) + N(0, sigma^2) at v.
  auto density = [&](double v) { return (phi((v + b) / sigma) - phi((v - b) / sigma)) / (2.0 * b); };
  // Split where the density changes on the sigma scale.
  const double edge = std::min(b, 12.0 * sigma);
  return integrate(density, -b, -b + edge) + integrate(density, -b + edge, b - edge) +
         integrate(density, b - edge, b);
}

double gaussian_mass_quadrature(double mu, double variance, double lo, double hi) {
  const double sigma = std::sqrt(variance);
  auto density = [&](double x) {
    const double z = (x - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
  };
  // Break points around the mode so narrow Gaussians are resolved.
  std::vector<double> cuts{lo, hi};
  for (double k : {-12.0, -4.0, 0.0, 4.0, 12.0}) {
    const double c = mu + k * sigma;
    if (c > lo && c < hi) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(density, cuts[i], cuts[i + 1]);
  return total;
}

double truncated_normal_rejection(double mean, double stddev, Interval support, SeededRng& rng) {
  for (;;) {
    const double x = mean + stddev * rng.normal();
    if (support.contains(x)) return x;
  }
}

std::vector<double> product_posterior(std::span<const double> cell_values,
                                      std::span<const int> observations, double rho0) {
  long ones = 0;
  for (int y : observations) ones += y;
  const long zeros = static_cast<long>(observations.size()) - ones;
  std::vector<double> log_post(cell_values.size());
  for (std::size_t i = 0; i < cell_values.size(); ++i) {
    const double p1 = rho0 * (0.5 + 0.5 * std::cos(cell_values[i]));
    const double p0 = rho0 * (0.5 - 0.5 * std::cos(cell_values[i]));
    const double a = ones > 0 ? static_cast<double>(ones) * std::log(p1) : 0.0;
    const double b = zeros > 0 ? static_cast<double>(zeros) * std::log(p0) : 0.0;
    log_post[i] = a + b;
  }
  const double max_log = *std::max_element(log_post.begin(), log_post.end());
  std::vector<double> post(cell_values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < post.size(); ++i) {
    post[i] = std::isfinite(log_post[i]) ? std::exp(log_post[i] - max_log) : 0.0;
    total += post[i];
  }
  for (double& p : post) p /= total;
  return post;
}

}  // namespace qfilt::oracles
