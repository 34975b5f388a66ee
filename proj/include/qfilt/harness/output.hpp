#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "qfilt/harness/config.hpp"
#include "qfilt/harness/experiment.hpp"

namespace qfilt::harness {

inline constexpr const char* kCodeVersion = "qfilt 0.1.0";

struct ExperimentOutput {
  ExperimentConfig config;
  ScalingResult result;
};

/// Shortest decimal text that round-trips to the same double; "nan" for NaN.
std::string format_double(double value);

/// results.csv: one row per (experiment, n_alpha, t) with the fixed column set.
void write_results_csv(std::ostream& out, std::span<const ExperimentOutput> experiments);

/// Config echo, code version and per-cell stream ids (plus timing).
nlohmann::json make_manifest(std::span<const ExperimentOutput> experiments);

/// Writes results.csv and manifest.json into `dir`, creating it if needed.
void write_artifacts(const std::filesystem::path& dir, std::span<const ExperimentOutput> experiments);

}  // namespace qfilt::harness
