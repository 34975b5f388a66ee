#include "qfilt/nmqa/shared_data.hpp"

#include "qfilt/errors.hpp"

namespace qfilt::nmqa {

SharedDataState SharedDataState::initialize(std::size_t d, std::size_t n_alpha,
                                            std::span<const double> initial_f,
                                            const SignalMap& signal, SeededRng& rng) {
  if (initial_f.size() != d * n_alpha) {
    throw ConfigError("SharedDataState::initialize: initial_f must be n_alpha x d");
  }
  SharedDataState state;
  state.d = d;
  state.n_alpha = n_alpha;
  state.tau.assign(d, 0);
  state.phi.assign(d, 0);
  state.kappa.assign(d * n_alpha, 0.0);
  for (std::size_t alpha = 0; alpha < n_alpha; ++alpha) {
    for (std::size_t k = 0; k < d; ++k) {
      const double p = 0.5 + signal.forward(initial_f[alpha * d + k]);
      state.kappa[k * n_alpha + alpha] = static_cast<double>(sample_outcome(p, rng));
    }
  }
  state.gamma = state.kappa;
  return state;
}

void SharedDataState::apply(const DataEvent& event) {
  // Running means with uniform weights 1/count; the first event replaces the initial draw.
  auto update = [this](std::vector<long>& counts, std::vector<double>& stat, std::size_t k,
                       int outcome) {
    if (k >= d) throw ConfigError("SharedDataState: location out of range");
    counts[k] += 1;
    const double inv = 1.0 / static_cast<double>(counts[k]);
    const double y = static_cast<double>(outcome);
    for (std::size_t alpha = 0; alpha < n_alpha; ++alpha) {
      double& value = stat[k * n_alpha + alpha];
      value = counts[k] == 1 ? y : value + (y - value) * inv;
    }
  };
  if (const auto* m = std::get_if<PhysicalMeasurement>(&event)) {
    update(tau, kappa, m->location, m->outcome);
  } else {
    const auto& msg = std::get<DataMessage>(event);
    update(phi, gamma, msg.location, msg.outcome);
  }
}

void SharedDataState::reorder_particles(std::span<const std::size_t> parents) {
  if (parents.size() != n_alpha) throw ConfigError("reorder_particles: wrong parent count");
  std::vector<double> new_kappa(kappa.size());
  std::vector<double> new_gamma(gamma.size());
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t a = 0; a < n_alpha; ++a) {
      new_kappa[k * n_alpha + a] = kappa[k * n_alpha + parents[a]];
      new_gamma[k * n_alpha + a] = gamma[k * n_alpha + parents[a]];
    }
  }
  kappa = std::move(new_kappa);
  gamma = std::move(new_gamma);
}

SharedDataState update_counts_and_stats(SharedDataState state, const DataEvent& event) {
  state.apply(event);
  return state;
}

}  // namespace qfilt::nmqa
