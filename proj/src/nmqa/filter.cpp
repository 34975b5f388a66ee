#include "qfilt/nmqa/filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "qfilt/errors.hpp"
#include "qfilt/nmqa/beta.hpp"
#include "qfilt/nmqa/scoring.hpp"

namespace qfilt::nmqa {

std::vector<DataMessage> emit_data_messages(std::span<const double> posterior_f,
                                            double posterior_r_j, std::size_t j,
                                            std::span<const std::size_t> neighborhood_set,
                                            std::span<const long> tau, double lambda2,
                                            const Geometry& geometry, const SignalMap& signal,
                                            SeededRng& rng) {
  std::vector<DataMessage> messages;
  messages.reserve(neighborhood_set.size());
  for (std::size_t q : neighborhood_set) {
    const double smeared = chi(posterior_f[q], posterior_f[j], posterior_r_j,
                               geometry.distance(j, q), lambda2, tau[q]);
    messages.push_back({q, sample_outcome(0.5 + signal.forward(smeared), rng)});
  }
  return messages;
}

NmqaFilter::NmqaFilter(NmqaConfig config, Geometry geometry, SeededRng& rng, SignalMap signal)
    : config_(std::move(config)),
      geometry_(std::move(geometry)),
      signal_(std::move(signal)),
      model_(config_.sigma_v, config_.bound_b),
      f_bounds_{signal_.domain_min, signal_.domain_max},
      r_bounds_(config_.resolved_r_bounds(geometry_)),
      n_beta_(config_.resolved_n_beta()),
      k1_(compute_k1(config_.mu_F, config_.sigma_F)) {
  config_.validate();
  if (r_bounds_.empty() || !(r_bounds_.lo > 0.0)) throw ConfigError("NmqaFilter: invalid r bounds");
  const std::size_t d = geometry_.size();
  const std::size_t n_alpha = config_.n_alpha;

  particles_.resize(n_alpha);
  std::vector<double> initial_f(n_alpha * d);
  for (std::size_t a = 0; a < n_alpha; ++a) {
    particles_[a].f.resize(d);
    particles_[a].r.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      particles_[a].f[k] = rng.uniform(f_bounds_.lo, f_bounds_.hi);
      particles_[a].r[k] = rng.uniform(r_bounds_.lo, r_bounds_.hi);
      initial_f[a * d + k] = particles_[a].f[k];
    }
  }
  shared_ = SharedDataState::initialize(d, n_alpha, initial_f, signal_, rng);
  control_.fano.assign(d, std::numeric_limits<double>::quiet_NaN());
  control_.next_location = select_next_location(control_.fano, shared_.tau);
  h_table_.assign(d * n_alpha, 0.0);
}

void NmqaFilter::refresh_field_estimates() {
  const std::size_t d = geometry_.size();
  const std::size_t n_alpha = config_.n_alpha;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t a = 0; a < n_alpha; ++a) {
      const double H = data_association_H(config_.lambda1, shared_.tau[k], shared_.phi[k],
                                          shared_.kappa_at(k, a), shared_.gamma_at(k, a));
      const Clamped h = map_estimate_h(H, signal_);
      if (h.out_of_range) ++clamp_warnings_;
      h_table_[k * n_alpha + a] = h.value;
      // Untouched locations keep their prior draw of f.
      if (shared_.touched(k)) particles_[a].f[k] = f_bounds_.clamp(h.value);
    }
  }
}

StepReport NmqaFilter::step(std::size_t j, int y, SeededRng& rng) {
  const std::size_t d = geometry_.size();
  const std::size_t n_alpha = config_.n_alpha;
  if (j >= d) throw ConfigError("NmqaFilter::step: location out of range");

  StepReport report;
  report.location = j;
  report.outcome = y;

  shared_.apply(PhysicalMeasurement{j, y});
  refresh_field_estimates();

  std::optional<double> fano_prev;
  if (!std::isnan(control_.fano[j])) fano_prev = control_.fano[j];

  std::vector<BetaLayer> layers(n_alpha);
  std::vector<double> log_weights(n_alpha * n_beta_);
  for (std::size_t a = 0; a < n_alpha; ++a) {
    layers[a] = generate_beta(config_.beta_strategy, particles_[a].r[j], fano_prev, r_bounds_,
                              n_beta_, rng);
    const double h_j = h_table_[j * n_alpha + a];
    const double g1 = score_g1(y, h_j, model_, signal_);
    const double log_g1 = g1 > 0.0 ? std::log(g1) : -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < n_beta_; ++b) {
      const double r_beta = layers[a].samples[b];
      double log_g2 = 0.0;
      for (std::size_t q : neighborhood(j, r_beta, geometry_, config_.k0)) {
        const double h_q = h_table_[q * n_alpha + a];
        const double smeared =
            chi(h_q, h_j, r_beta, geometry_.distance(j, q), config_.lambda2, shared_.tau[q]);
        log_g2 += log_g2_factor(h_q, smeared, config_.mu_F, config_.sigma_F, k1_);
      }
      log_weights[a * n_beta_ + b] = log_g1 + log_g2;
    }
  }

  double offset = 0.0;
  if (config_.log_space_weights) {
    const double max_log = *std::max_element(log_weights.begin(), log_weights.end());
    if (std::isfinite(max_log)) offset = max_log;
  }
  std::vector<double> weights(log_weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = std::exp(log_weights[i] - offset);

  last_resample_ = two_stage_resample(weights, n_alpha, n_beta_, rng);
  report.degenerate = last_resample_.degenerate;
  if (report.degenerate) ++degenerate_steps_;

  std::vector<SurvivorSummary> summaries(n_alpha);
  for (std::size_t a = 0; a < n_alpha; ++a) {
    if (last_resample_.survivors(a) == 0) continue;
    const std::span<const std::size_t> counts(last_resample_.pair_counts.data() + a * n_beta_,
                                              n_beta_);
    summaries[a] = summarize_survivors(layers[a].samples, counts);
  }

  // Each posterior alpha inherits the beta summary of its parent.
  const auto& parents = last_resample_.alpha_offspring.parent_indices;
  std::vector<AlphaParticle> next(n_alpha);
  double fano = 0.0;
  for (std::size_t a = 0; a < n_alpha; ++a) {
    next[a] = particles_[parents[a]];
    next[a].r[j] = r_bounds_.clamp(summaries[parents[a]].mean);
    fano += summaries[parents[a]].fano;
  }
  fano /= static_cast<double>(n_alpha);
  control_.fano[j] = fano;
  report.fano = fano;
  particles_ = std::move(next);
  shared_.reorder_particles(parents);

  control_.next_location = select_next_location(control_.fano, shared_.tau);

  const std::vector<double> f_mean = posterior_f_mean();
  double r_mean_j = 0.0;
  for (const auto& p : particles_) r_mean_j += p.r[j];
  r_mean_j /= static_cast<double>(n_alpha);
  const auto posterior_neighbors = neighborhood(j, r_mean_j, geometry_, config_.k0);
  report.messages = emit_data_messages(f_mean, r_mean_j, j, posterior_neighbors, shared_.tau,
                                       config_.lambda2, geometry_, signal_, rng);
  for (const DataMessage& msg : report.messages) shared_.apply(msg);

  t_ += 1;
  return report;
}

std::vector<double> NmqaFilter::posterior_f_mean() const {
  const std::size_t d = geometry_.size();
  std::vector<double> mean(d, 0.0);
  for (const auto& p : particles_) {
    for (std::size_t k = 0; k < d; ++k) mean[k] += p.f[k];
  }
  for (double& m : mean) m /= static_cast<double>(particles_.size());
  return mean;
}

std::vector<double> NmqaFilter::posterior_r_mean() const {
  const std::size_t d = geometry_.size();
  std::vector<double> mean(d, 0.0);
  for (const auto& p : particles_) {
    for (std::size_t k = 0; k < d; ++k) mean[k] += p.r[k];
  }
  for (double& m : mean) m /= static_cast<double>(particles_.size());
  return mean;
}

}  // namespace qfilt::nmqa
