#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jch/params.hpp"
#include "jch/regimes.hpp"
#include "jch/state.hpp"

namespace jch::sim {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

// Config file parsing failed; `line` is 1-based (0 when no line applies).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

// One experiment: chain + initial excitation + evolution regime + time grid
// + requested observables.  Parsed from flat `key = value` text; unknown keys
// are hard errors.
struct ExperimentConfig {
  ChainParams chain;

  regimes::Channel initial_channel = regimes::Channel::Photon;
  int initial_site = 0;
  bool initial_is_raw = false;
  Eigen::VectorXcd raw_photon;
  Eigen::VectorXcd raw_atom;
  bool initial_normalize = true;

  regimes::RegimeSpec regime;

  std::vector<double> time_grid;

  bool out_site_populations = false;
  bool out_transfer_fidelity = false;
  bool out_kernel_dump = false;
  bool out_validity_report = false;
  int fidelity_source = 0;
  int fidelity_target = 0;
  regimes::Channel fidelity_channel = regimes::Channel::Photon;

  std::string source_text;  // verbatim config file, echoed into the manifest

  [[nodiscard]] SingleExcitationState initial_state() const;
  // t in units of 1/kappa, or 1/g for the resonance regimes
  [[nodiscard]] double time_unit() const;
  [[nodiscard]] std::string time_unit_label() const;
};

ExperimentConfig parse_config_file(const std::filesystem::path& path);
ExperimentConfig parse_config_text(const std::string& text);

// Evolves the configured initial state to time t under the configured regime.
SingleExcitationState propagate(const ExperimentConfig& config,
                                const SingleExcitationState& state, double t);

struct RunResult {
  std::vector<std::filesystem::path> files;  // CSVs + manifest
};

// Writes one CSV per requested observable plus run_manifest.json.
// Deterministic: identical config -> byte-identical CSVs.
RunResult run_simulate(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                       int threads);

// Sup-norm deviation per sector between the regime propagator and exact
// evolution over the grid, as compare_deviation.csv (+ validity + manifest).
RunResult run_compare(const ExperimentConfig& config, const std::filesystem::path& out_dir,
                      int threads);

// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace jch::sim
