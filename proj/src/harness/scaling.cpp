#include "qfilt/harness/scaling.hpp"

#include <algorithm>
#include <cmath>

#include "qfilt/errors.hpp"

namespace qfilt::harness {

double compute_L(std::span<const double> posterior_f_mean, const TrueField& truth) {
  if (posterior_f_mean.size() != truth.values.size() || truth.values.empty()) {
    throw ConfigError("compute_L: posterior and truth lengths differ");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < truth.values.size(); ++k) {
    const double e = posterior_f_mean[k] - truth.values[k];
    total += e * e;
  }
  return total / static_cast<double>(truth.values.size());
}

EpsilonFit fit_epsilon(std::span<const std::pair<double, double>> mean_L_per_n) {
  EpsilonFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, L] : mean_L_per_n) {
    if (!(L > 0.0) || !(n > 0.0)) {
      fit.excluded.push_back(n);
      continue;
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(L));
  }
  if (xs.size() < 3) throw UndefinedFitError("fit_epsilon: fewer than three positive points");

  const double m = static_cast<double>(xs.size());
  double x_bar = 0.0;
  double y_bar = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_bar += xs[i];
    y_bar += ys[i];
  }
  x_bar /= m;
  y_bar /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - x_bar) * (xs[i] - x_bar);
    sxy += (xs[i] - x_bar) * (ys[i] - y_bar);
  }
  if (!(sxx > 0.0)) throw UndefinedFitError("fit_epsilon: particle counts must differ");
  fit.slope = sxy / sxx;
  fit.intercept = y_bar - fit.slope * x_bar;
  fit.residuals.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fit.residuals.push_back(ys[i] - (fit.intercept + fit.slope * xs[i]));
  }
  return fit;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ConfigError("median: empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace qfilt::harness
