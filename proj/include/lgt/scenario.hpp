#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgt/config.hpp"
#include "lgt/dynamics.hpp"

namespace lgt {

inline constexpr const char* kVersion = "1.0.0";

struct OutputFile {
  std::string name;       // relative to the output directory
  std::uint64_t fnv1a64;  // digest of the file content
  std::size_t bytes;
};

struct ResultManifest {
  std::string scenario;
  std::string config_echo;
  std::string version = kVersion;
  double wall_seconds = 0.0;
  std::vector<OutputFile> files;

  std::string to_json() const;
};

// Resolved coefficient vector of a state section (normalized).
std::vector<double> state_alphas(const StateSpec& st);

// auto: Neel for Schwinger, vacuum for QuantumLink.
FermionConfig resolve_seed(ModelKind model, int n_sites,
                           const std::string& seed);

// Builds the evolving superposition one [state] section describes, with the
// dimension cap enforced before any sector matrix is allocated.
MultiSectorState build_state(ModelKind model, int n_sites, ModelParams params,
                             const StateSpec& st, std::size_t cap_dim);

// Equilibrium averaging grid: avg_samples equally spaced points in
// [avg_t0, avg_t1].
std::vector<double> averaging_times(const ScenarioConfig& c);

// Writes one CSV per metric (plus crossing report, averages, distributions
// and optional SVG plots) into the resolved output directory.
ResultManifest run_scenario(const ScenarioConfig& c);

// (N, J) table of window-averaged metrics; J = 0 rows carry the
// zero-frequency weight from both evaluation routes.
ResultManifest run_sweep(const ScenarioConfig& c);

}  // namespace lgt
