// jchsim: configure a Jaynes-Cummings-Hubbard chain, run exact or
// limiting-regime single-excitation evolutions, validate invariants, and emit
// CSV/JSON for plotting.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "jch/params.hpp"
#include "jch/sim.hpp"
#include "jch/validation.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitRegimeError = 3;

int run_config_command(const std::string& config_path, const std::string& out_dir, int threads,
                       bool compare) {
  try {
    const auto config = jch::sim::parse_config_file(config_path);
    const auto result = compare ? jch::sim::run_compare(config, out_dir, threads)
                                : jch::sim::run_simulate(config, out_dir, threads);
    for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
    return 0;
  } catch (const jch::sim::ConfigError& e) {
    std::cerr << "config error: " << config_path << ": " << e.what() << "\n";
    return kExitConfigError;
  } catch (const jch::SingularDetuningError& e) {
    std::cerr << "regime precondition failed: " << e.what() << "\n";
    return kExitRegimeError;
  } catch (const jch::ModeClassError& e) {
    std::cerr << "regime precondition failed: " << e.what() << "\n";
    return kExitRegimeError;
  } catch (const jch::TopologyError& e) {
    std::cerr << "regime precondition failed: " << e.what() << "\n";
    return kExitRegimeError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "regime precondition failed: " << e.what() << "\n";
    return kExitRegimeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_validate(const std::string& scope, std::uint64_t seed, const std::string& out_dir) {
  if (!jch::validation::scope_is_known(scope)) {
    std::cerr << "unknown --scope '" << scope
              << "' (use all|topology|krawtchouk|specfun|dynamics|regimes)\n";
    return kExitConfigError;
  }
  const auto summary = jch::validation::run_validation(scope, seed);
  for (const auto& c : summary.checks) {
    std::printf("[%s] %s/%s  max_error=%.3e  threshold=%.3e\n", c.pass ? "PASS" : "FAIL",
                c.module.c_str(), c.name.c_str(), c.max_error, c.threshold);
  }

  nlohmann::ordered_json j;
  j["schema_version"] = jch::sim::kSchemaVersion;
  j["tool_version"] = std::string(jch::sim::kToolVersion);
  j["scope"] = scope;
  j["seed"] = seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : summary.checks) {
    checks.push_back({{"module", c.module},
                      {"name", c.name},
                      {"pass", c.pass},
                      {"max_error", c.max_error},
                      {"threshold", c.threshold}});
  }
  j["checks"] = checks;
  j["all_pass"] = summary.all_pass();
  std::filesystem::create_directories(out_dir);
  std::ofstream(std::filesystem::path(out_dir) / "validation_summary.json")
      << j.dump(2) << "\n";

  if (!summary.all_pass()) {
    std::cerr << "failed invariants:\n";
    for (const auto& name : summary.failed_names()) std::cerr << "  " << name << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-excitation dynamics of Jaynes-Cummings-Hubbard cavity arrays"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir = ".";
  int threads = 1;
  std::uint64_t seed = 20240901;
  app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  app.add_option("--threads", threads, "worker threads for grid evaluation")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized validation draws (never physics)")
      ->capture_default_str();

  std::string sim_config, cmp_config;
  auto* sim_cmd = app.add_subcommand("simulate", "run a configured evolution, write CSV + manifest");
  sim_cmd->add_option("config", sim_config, "experiment config file")->required();
  auto* cmp_cmd =
      app.add_subcommand("compare", "deviation of a regime kernel from exact evolution");
  cmp_cmd->add_option("config", cmp_config, "experiment config file")->required();

  std::string scope = "all";
  auto* val_cmd = app.add_subcommand("validate", "run the invariant suite");
  val_cmd->add_option("--scope", scope, "all|topology|krawtchouk|specfun|dynamics|regimes")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (sim_cmd->parsed()) return run_config_command(sim_config, out_dir, threads, false);
  if (cmp_cmd->parsed()) return run_config_command(cmp_config, out_dir, threads, true);
  return run_validate(scope, seed, out_dir);
}
