#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hardylab/config.hpp"
#include "hardylab/experiments.hpp"

namespace {

struct Common {
  std::string config_path;
  hardylab::ConfigOverrides overrides;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app->add_option("--out", c.overrides.output_dir, "output directory for CSV and JSON reports");
  app->add_option("--seed", c.overrides.seed, "corpus seed");
  app->add_option("--grid-m", c.overrides.grid_m, "boundary grid size");
  app->add_option("--grid-r", c.overrides.grid_r, "radial grid size");
  app->add_option("--degree-cap", c.overrides.degree_cap, "polynomial degree cap for the solvers");
  app->add_option("--tol", c.overrides.tol, "solver tolerance");
}

hardylab::ExperimentConfig resolve(const std::string& experiment, const Common& c) {
  hardylab::ExperimentConfig cfg =
      c.config_path.empty() ? hardylab::default_config(experiment) : hardylab::load_config(c.config_path);
  if (cfg.experiment != experiment)
    throw hardylab::ConfigError("config is for experiment '" + cfg.experiment + "', not '" + experiment + "'");
  hardylab::apply_overrides(cfg, c.overrides);
  return cfg;
}

int report(const hardylab::ExperimentConfig& cfg, const hardylab::RunResult& res) {
  if (!res.error.empty()) {
    std::fprintf(stderr, "%s: error: %s\n", cfg.experiment.c_str(), res.error.c_str());
    std::fprintf(stderr, "failure record: %s\n", res.failure_path.c_str());
    return res.exit_code;
  }
  const auto failed = res.report.failures().size();
  std::printf("%s: %zu rows, %zu failed\n", cfg.experiment.c_str(), res.report.rows.size(), failed);
  std::printf("csv:  %s\njson: %s\n", res.csv_path.c_str(), res.json_path.c_str());
  if (!res.failure_path.empty()) std::printf("failure record: %s\n", res.failure_path.c_str());
  return res.exit_code;
}

int run(const hardylab::ExperimentConfig& cfg) { return report(cfg, hardylab::run_experiment(cfg)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments on Hardy and Bergman spaces of the unit disc"};
  app.require_subcommand(1);

  const std::vector<std::string> ops{"project", "squarefn", "extremal", "dual", "approx"};
  const std::vector<std::string> descriptions{
      "Bergman or Szego projection of the configured input",
      "square function S(|F|^delta) and the Calderon ratios",
      "Bergman/Hardy extremal function of a kernel",
      "dual minimal-norm problem and duality gap",
      "best analytic approximation in L^p"};
  std::vector<Common> op_opts(ops.size());
  std::vector<CLI::App*> op_apps;
  for (size_t i = 0; i < ops.size(); ++i) {
    op_apps.push_back(app.add_subcommand(ops[i], descriptions[i]));
    add_common(op_apps.back(), op_opts[i]);
  }

  Common verify_opts;
  std::string experiment;
  auto* verify = app.add_subcommand("verify", "run a named verification experiment");
  verify->add_option("experiment", experiment, "experiment name")
      ->required()
      ->check(CLI::IsMember(hardylab::experiment_names()));
  add_common(verify, verify_opts);

  Common ledger_opts;
  std::string ledger_file;
  auto* ledger = app.add_subcommand("ledger", "constants ledger");
  ledger->require_subcommand(1);
  auto* build = ledger->add_subcommand("build", "estimate the ledger constants from a seeded corpus");
  add_common(build, ledger_opts);
  build->add_option("--ledger-out", ledger_file, "path of the standalone ledger JSON (default <out>/constants.json)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (size_t i = 0; i < ops.size(); ++i)
      if (op_apps[i]->parsed()) return run(resolve(ops[i], op_opts[i]));
    if (verify->parsed()) return run(resolve(experiment, verify_opts));
    if (build->parsed()) {
      const auto cfg = resolve("ledger", ledger_opts);
      const auto res = hardylab::run_experiment(cfg);
      const int code = report(cfg, res);
      if (!res.report.ledger) return code;
      if (ledger_file.empty()) ledger_file = (std::filesystem::path(cfg.output_dir) / "constants.json").string();
      std::ofstream(ledger_file) << res.report.ledger->to_json() << '\n';
      std::printf("ledger: %s\n", ledger_file.c_str());
      return code;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
