#include "qfilt/harness/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "qfilt/errors.hpp"

namespace qfilt::harness {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

void write_results_csv(std::ostream& out, std::span<const ExperimentOutput> experiments) {
  out << "case,strategy,n_alpha,n_beta,t,mean_L,sem_L,epsilon_t,lambda1,lambda2,sigma_v,sigma_F,seed\n";
  for (const ExperimentOutput& exp : experiments) {
    const ScalingResult& r = exp.result;
    const nmqa::NmqaConfig& c = exp.config.nmqa;
    for (std::size_t i = 0; i < r.n_alpha_grid.size(); ++i) {
      for (std::size_t t = 1; t <= r.t_max; ++t) {
        out << r.case_name << ',' << r.strategy << ',' << r.n_alpha_grid[i] << ',' << r.n_beta[i]
            << ',' << t << ',' << format_double(r.mean_L[i][t - 1]) << ','
            << format_double(r.sem_L[i][t - 1]) << ',' << format_double(r.epsilon[t - 1]) << ','
            << format_double(c.lambda1) << ',' << format_double(c.lambda2) << ','
            << format_double(c.sigma_v) << ',' << format_double(c.sigma_F) << ','
            << exp.config.seed << '\n';
      }
    }
  }
}

nlohmann::json make_manifest(std::span<const ExperimentOutput> experiments) {
  nlohmann::json manifest;
  manifest["code_version"] = kCodeVersion;
  manifest["experiments"] = nlohmann::json::array();
  for (const ExperimentOutput& exp : experiments) {
    nlohmann::json cells = nlohmann::json::array();
    for (const CellInfo& cell : exp.result.cells) {
      cells.push_back({{"n_alpha", cell.n_alpha},
                       {"repetition", cell.repetition},
                       {"truth_stream", cell.truth_stream},
                       {"filter_stream", cell.filter_stream},
                       {"attempts", cell.attempts},
                       {"degenerate_steps", cell.degenerate_steps},
                       {"failures", cell.failures},
                       {"wall_time_s", cell.wall_time_s}});
    }
    manifest["experiments"].push_back({{"config", config_to_json(exp.config)},
                                       {"cells", cells},
                                       {"wall_time_s", exp.result.wall_time_s}});
  }
  return manifest;
}

void write_artifacts(const std::filesystem::path& dir, std::span<const ExperimentOutput> experiments) {
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / "results.csv", std::ios::binary);
  if (!csv) throw ConfigError("cannot write " + (dir / "results.csv").string());
  write_results_csv(csv, experiments);
  std::ofstream manifest(dir / "manifest.json", std::ios::binary);
  if (!manifest) throw ConfigError("cannot write " + (dir / "manifest.json").string());
  manifest << make_manifest(experiments).dump(2) << '\n';
}

}  // namespace qfilt::harness
