#include "qfilt/nmqa/scoring.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qfilt/errors.hpp"

namespace qfilt::nmqa {

std::vector<std::size_t> neighborhood(std::size_t j, double r, const Geometry& geometry,
                                      double k0) {
  if (j >= geometry.size()) throw ConfigError("neighborhood: location out of range");
  std::vector<std::size_t> out;
  const double radius = k0 * r;
  for (std::size_t q = 0; q < geometry.size(); ++q) {
    if (q != j && geometry.distance(j, q) < radius) out.push_back(q);
  }
  return out;
}

double chi(double f_q, double f_j, double r, double nu, double lambda2, long tau_q) {
  const double share = std::pow(lambda2, static_cast<double>(tau_q));
  double kernel = 0.0;
  if (r > 0.0) {
    kernel = std::exp(-(nu * nu) / (2.0 * r * r));
  } else {
    kernel = nu == 0.0 ? 1.0 : 0.0;
  }
  return (1.0 - share) * f_q + share * f_j * kernel;
}

double data_association_H(double lambda1, long tau, long phi, double kappa, double gamma) {
  if (tau > 0 && phi > 0) {
    const double blend = std::pow(lambda1, static_cast<double>(tau)) / 2.0;
    return (1.0 - blend) * kappa + blend * gamma;
  }
  if (tau > 0) return kappa;
  if (phi > 0) return gamma;
  return kappa;
}

Clamped map_estimate_h(double H, const SignalMap& signal) {
  Clamped out = signal.inverse(H - 0.5);
  if (out.value < signal.domain_min) out.value = signal.domain_min;
  if (out.value > signal.domain_max) out.value = signal.domain_max;
  return out;
}

double compute_k1(double mu_F, double sigma_F) {
  if (!(sigma_F > 0.0)) throw ConfigError("compute_k1: sigma_F must be positive");
  const double width = std::sqrt(2.0 * sigma_F);
  return 0.5 * (std::erf((std::numbers::pi + mu_F) / width) +
                std::erf((std::numbers::pi - mu_F) / width));
}

double score_g1(int y, double h_j, const MeasurementModel& model, const SignalMap& signal) {
  return likelihood(y, signal.forward(h_j), model);
}

double log_g2_factor(double h_q, double chi_value, double mu_F, double sigma_F, double k1) {
  const double mismatch = h_q - chi_value - mu_F;
  return -std::log(k1) - mismatch * mismatch / (2.0 * sigma_F);
}

double h_estimate(const ScoringContext& ctx, std::size_t k, std::size_t alpha) {
  const SharedDataState& s = ctx.shared;
  const double H = data_association_H(ctx.config.lambda1, s.tau[k], s.phi[k], s.kappa_at(k, alpha),
                                      s.gamma_at(k, alpha));
  return map_estimate_h(H, ctx.signal).value;
}

double score_g1(int y, std::size_t j, std::size_t alpha, const ScoringContext& ctx) {
  return score_g1(y, h_estimate(ctx, j, alpha), ctx.model, ctx.signal);
}

double log_score_g2(std::size_t alpha, double r_beta, std::size_t j,
                    std::span<const std::size_t> neighborhood_set, const ScoringContext& ctx) {
  if (neighborhood_set.empty()) return 0.0;
  const double h_j = h_estimate(ctx, j, alpha);
  double total = 0.0;
  for (std::size_t q : neighborhood_set) {
    const double h_q = h_estimate(ctx, q, alpha);
    const double smeared =
        chi(h_q, h_j, r_beta, ctx.geometry.distance(j, q), ctx.config.lambda2, ctx.shared.tau[q]);
    total += log_g2_factor(h_q, smeared, ctx.config.mu_F, ctx.config.sigma_F, ctx.k1);
  }
  return total;
}

double score_g2(std::size_t alpha, double r_beta, std::size_t j,
                std::span<const std::size_t> neighborhood_set, const ScoringContext& ctx) {
  return std::exp(log_score_g2(alpha, r_beta, j, neighborhood_set, ctx));
}

}  // namespace qfilt::nmqa
