#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "criteria.hpp"
#include "qfilt/errors.hpp"
#include "qfilt/harness/config.hpp"
#include "qfilt/harness/experiment.hpp"
#include "qfilt/harness/output.hpp"

namespace {

using namespace qfilt;

void print_summary(const harness::ScalingResult& r) {
  std::cout << r.case_name << " / " << r.strategy << ": t_max=" << r.t_max
            << ", wall " << r.wall_time_s << " s\n";
  const std::size_t t = r.t_max;
  std::cout << "  eps_t at t=" << t << ": " << harness::format_double(r.epsilon[t - 1]) << '\n';
  for (std::size_t i = 0; i < r.n_alpha_grid.size(); ++i) {
    std::cout << "  n_alpha=" << r.n_alpha_grid[i] << " mean L=" << r.mean_L[i][t - 1] << '\n';
  }
}

int run_command(const std::string& config_path, const std::string& out_override) {
  harness::ExperimentConfig config = harness::load_config(config_path);
  if (!out_override.empty()) config.output_dir = out_override;
  std::vector<harness::ExperimentOutput> outputs;
  outputs.push_back({config, harness::run_scaling_experiment(config)});
  print_summary(outputs.back().result);
  harness::write_artifacts(config.output_dir, outputs);
  std::cout << "wrote " << (config.output_dir / "results.csv").string() << '\n';
  return 0;
}

int validate_command(bool quick) {
  std::vector<criteria::CriterionResult> results{
      criteria::rho0_oracle_equivalence(),
      criteria::likelihood_identities(),
      criteria::branching_conformance(),
      quick ? criteria::bootstrap_scaling(40, 100) : criteria::bootstrap_scaling(),
  };
  bool ok = true;
  for (const auto& r : results) {
    std::cout << criteria::format_line(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

int demo_command(const std::string& case_name, std::size_t d, std::size_t reps, std::size_t t_max,
                 std::uint64_t seed, std::size_t workers, const std::string& out) {
  std::vector<harness::ExperimentOutput> outputs;
  for (auto strategy : {nmqa::BetaStrategy::trunc_gauss, nmqa::BetaStrategy::uniform}) {
    harness::ExperimentConfig config = harness::preset_config(case_name, strategy, d);
    if (reps > 0) config.repetitions = reps;
    if (t_max > 0) config.t_max = t_max;
    config.seed = seed;
    config.workers = workers;
    config.output_dir = out;
    outputs.push_back({config, harness::run_scaling_experiment(config)});
    print_summary(outputs.back().result);
  }
  harness::write_artifacts(out, outputs);
  std::cout << "wrote " << out << "/results.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Particle filters for single-shot qubit phase estimation and NMQA field mapping"};
  app.require_subcommand(1);

  std::string config_path;
  std::string run_out;
  auto* run = app.add_subcommand("run", "Run a scaling experiment from a JSON config");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_out, "Override output_dir");

  bool quick = false;
  auto* validate = app.add_subcommand("validate", "Rho0, likelihood, branching and grid-oracle checks");
  validate->add_flag("--quick", quick, "Fewer bootstrap repetitions");

  std::string case_name;
  std::size_t d = 25;
  std::size_t reps = 0;
  std::size_t t_max = 0;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::string demo_out = "qfilt-demo";
  auto* demo = app.add_subcommand("demo", "Tuned presets for both beta strategies");
  demo->add_option("--case", case_name, "Field case")
      ->required()
      ->check(CLI::IsMember({"1d-linear", "2d-square", "2d-gaussian"}));
  demo->add_option("--d", d, "Number of qubits for 2d-square (9, 16 or 25)");
  demo->add_option("--reps", reps, "Repetitions per particle count (preset default 50)");
  demo->add_option("--t-max", t_max, "Iterations (preset default max(75, 3d))");
  demo->add_option("--seed", seed, "Master seed");
  demo->add_option("--workers", workers, "Worker threads (0 = all cores)");
  demo->add_option("--out", demo_out, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(config_path, run_out);
    if (*validate) return validate_command(quick);
    if (*demo) return demo_command(case_name, d, reps, t_max, seed, workers, demo_out);
  } catch (const qfilt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
