#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "lgt/config.hpp"
#include "lgt/io.hpp"
#include "lgt/scenario.hpp"

#ifdef LGT_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

// exit codes: 0 success, 2 config error, 3 dimension-cap refusal
constexpr int kOkExit = 0;
constexpr int kConfigExit = 2;
constexpr int kCapExit = 3;

struct CommonOpts {
  std::string out;
  int threads = 0;
  long long cap_dim = -1;
};

void apply_overrides(lgt::ScenarioConfig& cfg, const CommonOpts& opts) {
  if (!opts.out.empty()) cfg.out_dir = opts.out;
  if (opts.cap_dim >= 0) cfg.cap_dim = static_cast<std::size_t>(opts.cap_dim);
#ifdef LGT_HAVE_OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#else
  if (opts.threads > 0)
    std::fprintf(stderr, "note: built without OpenMP, --threads ignored\n");
#endif
}

void print_manifest(const lgt::ResultManifest& m) {
  std::printf("scenario: %s\n", m.scenario.empty() ? "custom" : m.scenario.c_str());
  std::printf("wall seconds: %.2f\n", m.wall_seconds);
  for (const auto& f : m.files)
    std::printf("  %s  (%zu bytes, fnv1a64 %s)\n", f.name.c_str(), f.bytes,
                lgt::hex64(f.fnv1a64).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gauge-sector quench simulator: exact-diagonalization dynamics of the "
      "lattice Schwinger and U(1) quantum link models, tracking how a "
      "subsystem's gauge symmetry is restored after a quench"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--out", opts.out, "Output directory (default: $LGT_QUENCH_OUT or ./out)");
  app.add_option("--threads", opts.threads, "OpenMP thread count (0 = library default)");
  app.add_option("--cap-dim", opts.cap_dim, "Refuse sectors larger than this dimension");

  std::string run_arg, sweep_arg;
  auto* run_cmd =
      app.add_subcommand("run", "Run a time-series scenario from a config file or catalog id");
  run_cmd->add_option("config", run_arg, "Config file path or built-in scenario id")
      ->required();
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Run an (N, J) sweep from a config file or catalog id");
  sweep_cmd->add_option("config", sweep_arg, "Config file path or built-in scenario id")
      ->required();
  auto* list_cmd = app.add_subcommand("list-scenarios", "List the built-in scenario catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list_cmd->parsed()) {
      for (const auto& name : lgt::scenario_names()) {
        const auto& sc = lgt::builtin_scenario(name);
        std::printf("%-14s %-6s %-12s n=%-3d j=%g\n", name.c_str(),
                    sc.kind == lgt::RunKind::Sweep ? "sweep" : "series",
                    lgt::to_string(sc.model).c_str(), sc.n_sites, sc.params.j);
      }
      return kOkExit;
    }
    if (run_cmd->parsed()) {
      lgt::ScenarioConfig cfg = lgt::load_config(run_arg);
      apply_overrides(cfg, opts);
      print_manifest(lgt::run_scenario(cfg));
      return kOkExit;
    }
    lgt::ScenarioConfig cfg = lgt::load_config(sweep_arg);
    apply_overrides(cfg, opts);
    print_manifest(lgt::run_sweep(cfg));
    return kOkExit;
  } catch (const lgt::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigExit;
  } catch (const lgt::CapExceeded& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return kCapExit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
