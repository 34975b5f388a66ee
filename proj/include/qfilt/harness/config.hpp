#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfilt/nmqa/config.hpp"
#include "qfilt/simworld.hpp"

namespace qfilt::harness {

struct WorldConfig {
  GeometryKind geometry = GeometryKind::chain_1d;
  std::size_t d = 25;
  double spacing = 1.0;
  FieldKind field = FieldKind::linear_1d;
  /// Inject truncated Gaussian amplitude noise into the simulated outcomes.
  bool truth_noise = false;
};

struct ExperimentConfig {
  std::string case_name = "1d-linear";
  nmqa::NmqaConfig nmqa;
  WorldConfig world;
  std::vector<std::size_t> n_alpha_grid{3, 9, 15, 21, 30};
  std::size_t repetitions = 50;
  std::size_t t_max = 75;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "qfilt-out";
  /// 0 means one worker per hardware thread.
  std::size_t workers = 0;

  /// Throws ConfigError on an empty or non-increasing grid and other bad values.
  void validate() const;
};

/// Parses the JSON mirror of ExperimentConfig; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Tuned parameters reported for each demo case. `d` selects the square-field
/// size (9, 16 or 25); `no_sharing` sets lambda1 = lambda2 = 0 with the
/// matching variance parameters.
ExperimentConfig preset_config(const std::string& case_name, nmqa::BetaStrategy strategy,
                               std::size_t d = 25, bool no_sharing = false);

}  // namespace qfilt::harness
