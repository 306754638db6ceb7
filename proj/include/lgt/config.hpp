#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgt/types.hpp"

namespace lgt {

struct TimeGrid {
  enum class Kind { Linear, Log };
  Kind kind = Kind::Log;
  double t0 = 0.5;
  double t1 = 200.0;
  int count = 401;

  std::vector<double> points() const;
};

// One initial state: a superposition of gauge sectors sharing a fermion seed.
// `sectors` lists the Gauss charges on sites 1..ell of each component; sites
// beyond ell carry charge 0. Coefficients come from `alphas` (normalized), or
// from `angle` as (cos, sin) for two components, or default to equal weight.
struct StateSpec {
  std::string label;
  std::vector<GaugeSector> sectors;
  std::vector<double> alphas;
  std::optional<double> angle;
  std::string seed = "auto";  // auto | neel | vacuum | explicit bits "1010.."
};

enum class RunKind { Series, Sweep };

struct ScenarioConfig {
  std::string scenario;  // catalog id this config started from, if any
  RunKind kind = RunKind::Series;
  ModelKind model = ModelKind::Schwinger;
  int n_sites = 12;
  ModelParams params;
  int ell = 2;
  TimeGrid grid;
  double avg_t0 = 1e3;  // equilibrium window, units of 1/w
  double avg_t1 = 1e4;
  int avg_samples = 121;
  bool emit_averages = false;
  std::vector<std::string> metrics{"ea"};
  std::vector<double> j_list;  // sweep only
  std::vector<int> n_list;     // sweep only
  double bin_width = 0.01;     // fine frequency bin for zdist
  double coarse_bin = 0.0;     // peak-detection bin; 0 means 0.05 * j
  int smooth_width = 5;        // crossing-detector moving average
  std::string probe = "all-ones";  // all-ones | identity | random
  std::uint64_t rng_seed = 0xC0FFEE;
  std::size_t cap_dim = 4096;
  std::string out_dir;  // empty: $LGT_QUENCH_OUT, else ./out
  bool plots = false;
  std::vector<StateSpec> states;
};

// Accepts "0.25pi", "pi", "-pi", or a plain number.
double parse_angle(const std::string& text);

// Parses the flat key = value format ( [state] opens a state section ).
// Unknown keys, duplicate keys and malformed values raise ConfigError with
// "<source>:<line>" positions. A `scenario = <id>` line pulls the catalog
// entry's values as defaults for all following keys.
ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& source);

// `arg` is a config file path, or a catalog id if no such file exists.
ScenarioConfig load_config(const std::string& arg);

// Canonical text form; parse(serialize(c)) reproduces c.
std::string serialize_config(const ScenarioConfig& c);

// Structural checks shared by run and sweep (ranges, metric names,
// state shapes). Throws ConfigError.
void validate_config(const ScenarioConfig& c);

std::vector<std::string> scenario_names();
const ScenarioConfig& builtin_scenario(const std::string& id);

}  // namespace lgt
