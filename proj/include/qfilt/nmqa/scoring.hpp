#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfilt/measurement.hpp"
#include "qfilt/nmqa/config.hpp"
#include "qfilt/nmqa/shared_data.hpp"
#include "qfilt/simworld.hpp"

namespace qfilt::nmqa {

/// Locations q != j with distance(j, q) < k0 * r.
std::vector<std::size_t> neighborhood(std::size_t j, double r, const Geometry& geometry, double k0);

/// Field estimate at q smeared from j: (1 - l^tau) f_q + l^tau f_j exp(-nu^2 / (2 r^2)), l = lambda2.
/// r = 0 gives a Gaussian factor of 1 at nu = 0 and 0 otherwise.
double chi(double f_q, double f_j, double r, double nu, double lambda2, long tau_q);

/// Blend of measurement and message statistics at one location. When both
/// counts are zero `kappa` is returned; it still holds the initial draw.
double data_association_H(double lambda1, long tau, long phi, double kappa, double gamma);

/// s^{-1}(H - 1/2), clamped into the signal domain.
Clamped map_estimate_h(double H, const SignalMap& signal);

/// Normalizer of the Gaussian mismatch kernel: mass of N(mu_F, sigma_F) on [-pi, pi].
double compute_k1(double mu_F, double sigma_F);

/// Physical-measurement score of an alpha particle with field estimate h_j.
double score_g1(int y, double h_j, const MeasurementModel& model, const SignalMap& signal);

/// Log of one neighbor factor (1/k1) exp(-(h_q - chi - mu_F)^2 / (2 sigma_F)).
double log_g2_factor(double h_q, double chi_value, double mu_F, double sigma_F, double k1);

/// Everything the pair scorer reads, bundled so the filter can score many pairs.
struct ScoringContext {
  const Geometry& geometry;
  const SharedDataState& shared;
  const NmqaConfig& config;
  const MeasurementModel& model;
  const SignalMap& signal;
  double k1;
};

/// h(lambda1, Lambda^(k, alpha)).
double h_estimate(const ScoringContext& ctx, std::size_t k, std::size_t alpha);

double score_g1(int y, std::size_t j, std::size_t alpha, const ScoringContext& ctx);

/// Sum of log neighbor factors for candidate length scale r_beta; 0 for an empty neighborhood.
double log_score_g2(std::size_t alpha, double r_beta, std::size_t j,
                    std::span<const std::size_t> neighborhood_set, const ScoringContext& ctx);

double score_g2(std::size_t alpha, double r_beta, std::size_t j,
                std::span<const std::size_t> neighborhood_set, const ScoringContext& ctx);

}  // namespace qfilt::nmqa
