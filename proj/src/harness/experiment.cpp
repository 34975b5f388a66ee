#include "qfilt/harness/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "qfilt/core/rng.hpp"
#include "qfilt/errors.hpp"
#include "qfilt/harness/scaling.hpp"
#include "qfilt/nmqa/filter.hpp"

namespace qfilt::harness {
namespace {

constexpr int kMaxAttempts = 3;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double ScalingResult::median_epsilon(std::size_t t_lo, std::size_t t_hi) const {
  std::vector<double> window;
  for (std::size_t t = t_lo; t <= t_hi && t <= epsilon.size(); ++t) {
    if (t >= 1 && !std::isnan(epsilon[t - 1])) window.push_back(epsilon[t - 1]);
  }
  if (window.empty()) return std::numeric_limits<double>::quiet_NaN();
  return median(std::move(window));
}

std::uint64_t truth_stream_id(std::size_t repetition, int attempt) {
  return derive_stream({0x7472757468ULL, repetition, static_cast<std::uint64_t>(attempt)});
}

std::uint64_t filter_stream_id(const ExperimentConfig& config, std::size_t n_alpha,
                               std::size_t repetition, int attempt) {
  return derive_stream({0x66696C746572ULL, fnv1a(config.case_name),
                        static_cast<std::uint64_t>(config.nmqa.beta_strategy), n_alpha, repetition,
                        static_cast<std::uint64_t>(attempt)});
}

RunRecord run_trajectory(const ExperimentConfig& config, std::size_t n_alpha,
                         std::size_t repetition, int attempt) {
  const auto start = std::chrono::steady_clock::now();
  const Geometry geometry = make_geometry(config.world.geometry, config.world.d, config.world.spacing);
  const TrueField truth = make_field(config.world.field, geometry);

  nmqa::NmqaConfig nmqa_config = config.nmqa;
  nmqa_config.n_alpha = n_alpha;

  RunRecord record;
  record.truth_stream = truth_stream_id(repetition, attempt);
  record.filter_stream = filter_stream_id(config, n_alpha, repetition, attempt);
  SeededRng truth_rng(config.seed, record.truth_stream);
  SeededRng filter_rng(config.seed, record.filter_stream);

  nmqa::NmqaFilter filter(nmqa_config, geometry, filter_rng);
  record.posterior_f.reserve(config.t_max);
  record.L.reserve(config.t_max);
  record.locations.reserve(config.t_max);
  for (std::size_t t = 1; t <= config.t_max; ++t) {
    const std::size_t j = filter.next_location();
    const int y = oracle_measure(truth, j, filter.model(), config.world.truth_noise, truth_rng);
    filter.step(j, y, filter_rng);
    std::vector<double> f_mean = filter.posterior_f_mean();
    record.L.push_back(compute_L(f_mean, truth));
    record.posterior_f.push_back(std::move(f_mean));
    record.locations.push_back(j);
  }
  record.degenerate_steps = filter.degenerate_steps();
  record.attempts = attempt + 1;
  record.wall_time_s = seconds_since(start);
  return record;
}

ScalingResult run_scaling_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t grid = config.n_alpha_grid.size();
  const std::size_t reps = config.repetitions;
  const std::size_t t_max = config.t_max;

  // L values per cell, filled in any order, reduced in (n_alpha, repetition) order.
  std::vector<std::vector<double>> cell_L(grid * reps);
  std::vector<CellInfo> cells(grid * reps);

  auto run_cell = [&](std::size_t index) {
    const std::size_t i = index / reps;
    const std::size_t rep = index % reps;
    CellInfo& info = cells[index];
    info.n_alpha = config.n_alpha_grid[i];
    info.repetition = rep;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      try {
        RunRecord record = run_trajectory(config, info.n_alpha, rep, attempt);
        info.truth_stream = record.truth_stream;
        info.filter_stream = record.filter_stream;
        info.attempts = record.attempts;
        info.degenerate_steps = record.degenerate_steps;
        info.wall_time_s = record.wall_time_s;
        cell_L[index] = std::move(record.L);
        return;
      } catch (const std::exception& e) {
        info.failures.push_back(e.what());
      }
    }
    throw Error("trajectory failed " + std::to_string(kMaxAttempts) + " times (n_alpha=" +
                std::to_string(info.n_alpha) + ", repetition=" + std::to_string(rep) +
                "): " + info.failures.back());
  };

  std::size_t workers = config.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, grid * reps);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&]() {
    for (std::size_t index = next++; index < grid * reps; index = next++) {
      try {
        run_cell(index);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  ScalingResult result;
  result.case_name = config.case_name;
  result.strategy = std::string(nmqa::to_string(config.nmqa.beta_strategy));
  result.n_alpha_grid = config.n_alpha_grid;
  result.t_max = t_max;
  for (std::size_t n_alpha : config.n_alpha_grid) {
    nmqa::NmqaConfig c = config.nmqa;
    c.n_alpha = n_alpha;
    result.n_beta.push_back(c.resolved_n_beta());
  }
  result.mean_L.assign(grid, std::vector<double>(t_max, 0.0));
  result.sem_L.assign(grid, std::vector<double>(t_max, 0.0));
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t t = 0; t < t_max; ++t) {
      double sum = 0.0;
      for (std::size_t rep = 0; rep < reps; ++rep) sum += cell_L[i * reps + rep][t];
      const double mean = sum / static_cast<double>(reps);
      double ss = 0.0;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const double e = cell_L[i * reps + rep][t] - mean;
        ss += e * e;
      }
      result.mean_L[i][t] = mean;
      result.sem_L[i][t] =
          reps > 1 ? std::sqrt(ss / static_cast<double>(reps - 1) / static_cast<double>(reps)) : 0.0;
    }
  }

  result.epsilon.assign(t_max, std::numeric_limits<double>::quiet_NaN());
  result.intercept.assign(t_max, std::numeric_limits<double>::quiet_NaN());
  result.residuals.assign(t_max, {});
  for (std::size_t t = 0; t < t_max; ++t) {
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < grid; ++i) {
      points.emplace_back(static_cast<double>(config.n_alpha_grid[i]), result.mean_L[i][t]);
    }
    try {
      EpsilonFit fit = fit_epsilon(points);
      result.epsilon[t] = fit.slope;
      result.intercept[t] = fit.intercept;
      result.residuals[t] = std::move(fit.residuals);
    } catch (const UndefinedFitError&) {
      // Left as NaN; fewer than three usable grid points.
    }
  }
  result.cells = std::move(cells);
  result.wall_time_s = seconds_since(start);
  return result;
}

}  // namespace qfilt::harness
