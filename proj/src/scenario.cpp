#include "lgt/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lgt/asymmetry.hpp"
#include "lgt/io.hpp"
#include "lgt/reduced_density.hpp"
#include "lgt/spectral.hpp"

namespace lgt {

namespace fs = std::filesystem;

std::string ResultManifest::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["version"] = version;
  j["wall_seconds"] = wall_seconds;
  j["config"] = config_echo;
  j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : files)
    j["files"].push_back({{"name", f.name},
                          {"fnv1a64", hex64(f.fnv1a64)},
                          {"bytes", f.bytes}});
  return j.dump(2) + "\n";
}

std::vector<double> state_alphas(const StateSpec& st) {
  std::vector<double> a;
  if (st.angle) {
    a = {std::cos(*st.angle), std::sin(*st.angle)};
  } else if (!st.alphas.empty()) {
    a = st.alphas;
    double n2 = 0.0;
    for (double v : a) n2 += v * v;
    if (n2 <= 0.0)
      throw ConfigError("state '" + st.label + "': zero coefficient vector");
    for (double& v : a) v /= std::sqrt(n2);
  } else {
    a.assign(st.sectors.size(), 1.0 / std::sqrt(double(st.sectors.size())));
  }
  return a;
}

FermionConfig resolve_seed(ModelKind model, int n_sites,
                           const std::string& seed) {
  if (seed == "neel") return neel_state(n_sites);
  if (seed == "vacuum") return vacuum_state(n_sites);
  if (seed == "auto")
    return model == ModelKind::Schwinger ? neel_state(n_sites)
                                         : vacuum_state(n_sites);
  if (static_cast<int>(seed.size()) != n_sites ||
      seed.find_first_not_of("01") != std::string::npos)
    throw ConfigError("seed bit string must have exactly n entries of 0/1");
  FermionConfig occ(seed.size());
  for (std::size_t i = 0; i < seed.size(); ++i) occ[i] = seed[i] == '1';
  return occ;
}

MultiSectorState build_state(ModelKind model, int n_sites, ModelParams params,
                             const StateSpec& st, std::size_t cap_dim) {
  MultiSectorState state(model, n_sites, params);
  const auto alphas = state_alphas(st);
  const FermionConfig occ = resolve_seed(model, n_sites, st.seed);
  for (std::size_t k = 0; k < st.sectors.size(); ++k)
    state.add_sector(st.sectors[k], alphas[k], occ, cap_dim);
  return state;
}

std::vector<double> averaging_times(const ScenarioConfig& c) {
  std::vector<double> t(static_cast<std::size_t>(c.avg_samples));
  for (int i = 0; i < c.avg_samples; ++i)
    t[static_cast<std::size_t>(i)] =
        c.avg_samples == 1
            ? c.avg_t0
            : c.avg_t0 + (c.avg_t1 - c.avg_t0) * i / (c.avg_samples - 1);
  return t;
}

namespace {

std::string resolve_out_dir(const ScenarioConfig& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("LGT_QUENCH_OUT"); env && *env)
    return env;
  return "out";
}

std::string stem_of(const ScenarioConfig& c) {
  return c.scenario.empty() ? "custom" : c.scenario;
}

std::vector<std::string> rdm_metrics(const ScenarioConfig& c) {
  std::vector<std::string> out;
  for (const auto& m : c.metrics)
    if (m != "zdist") out.push_back(m);
  return out;
}

double eval_metric(const std::string& metric, const ReducedDensityMatrix& rdm,
                   ModelKind model) {
  if (metric == "ea") return entanglement_asymmetry(rdm);
  if (metric == "renyi2") return renyi2_asymmetry(rdm);
  if (metric == "trace-distance") return trace_distance_asymmetry(rdm);
  if (metric == "order-parameter") return order_parameter(rdm, model);
  throw ConfigError("unknown metric '" + metric + "'");
}

// Per-state metric table evaluated over `times`, parallel across samples.
// values[metric][sample]; slot writes keep the result thread-count
// independent.
std::map<std::string, std::vector<double>> metric_table(
    const MultiSectorState& state, const ReductionPlan& plan,
    const std::vector<std::string>& metrics, const std::vector<double>& times,
    ModelKind model) {
  std::map<std::string, std::vector<double>> values;
  for (const auto& m : metrics) values[m].resize(times.size());
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(times.size());
#ifdef LGT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto idx = static_cast<std::size_t>(i);
      const ReducedDensityMatrix rdm = plan.reduce_at(state, times[idx]);
      for (const auto& m : metrics)
        values[m][idx] = eval_metric(m, rdm, model);
    } catch (...) {
#ifdef LGT_HAVE_OPENMP
#pragma omp critical
#endif
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return values;
}

ProbeOperator make_probe(const ScenarioConfig& c) {
  if (c.probe == "identity") return ProbeOperator::identity(c.ell);
  if (c.probe == "random")
    return ProbeOperator::seeded_random(c.ell, c.rng_seed);
  return ProbeOperator::all_ones(c.ell);
}

std::vector<std::string> base_comments(const ScenarioConfig& c) {
  std::ostringstream par;
  par << "model=" << to_string(c.model) << " n=" << c.n_sites
      << " w=" << c.params.w << " m=" << c.params.m << " j=" << c.params.j
      << " theta=" << c.params.theta << " ell=" << c.ell;
  // digest ignores the output location so moved runs stay comparable
  ScenarioConfig keyed = c;
  keyed.out_dir.clear();
  return {
      "scenario: " + stem_of(c),
      par.str(),
      "config fnv1a64: " + hex64(fnv1a64(serialize_config(keyed))),
      "units: time column wt in 1/w, entropies in nats",
  };
}

struct Emitter {
  fs::path dir;
  ResultManifest manifest;

  void emit(const std::string& name, const std::string& content) {
    write_text_file(dir / name, content);
    manifest.files.push_back({name, lgt::fnv1a64(content), content.size()});
  }
};

// Crossing report rows: for every state pair and metric, first crossing of
// the initially-higher curve below the other, crossing count and the
// fraction of later samples it stays below. The order parameter is compared
// through its magnitude.
CsvTable crossing_report(
    const ScenarioConfig& c, const std::vector<double>& times,
    const std::vector<std::string>& labels,
    const std::map<std::string, std::vector<std::vector<double>>>& series) {
  CsvTable csv;
  csv.comments = base_comments(c);
  csv.comments.push_back(
      "order-parameter curves are compared via |value|; "
      "hi is the state with the larger t=0 value");
  csv.columns = {"metric",         "hi",         "lo",
                 "first_crossing", "n_crossings", "stay_below_frac"};
  for (const auto& [metric, per_state] : series) {
    const bool use_abs = metric == "order-parameter";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t k = i + 1; k < labels.size(); ++k) {
        std::vector<double> a = per_state[i], b = per_state[k];
        if (use_abs) {
          for (double& v : a) v = std::abs(v);
          for (double& v : b) v = std::abs(v);
        }
        std::size_t hi = i, lo = k;
        if (b[0] > a[0]) {
          std::swap(hi, lo);
          std::swap(a, b);
        }
        const MetricSeries sa{times, a}, sb{times, b};
        const auto cross = detect_crossing(sa, sb, c.smooth_width);
        const double first = cross.empty() ? std::nan("") : cross.front();
        const double frac =
            cross.empty() ? std::nan("")
                          : fraction_below_after(sa, sb, cross.front());
        csv.rows.push_back({metric, labels[hi], labels[lo],
                            format_sci(first),
                            std::to_string(cross.size()),
                            format_sci(frac)});
      }
    }
  }
  return csv;
}

}  // namespace

ResultManifest run_scenario(const ScenarioConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(c);
  if (c.kind != RunKind::Series)
    throw ConfigError("this config is a sweep; use the sweep command");

  Emitter em;
  em.dir = resolve_out_dir(c);
  fs::create_directories(em.dir);
  em.manifest.scenario = c.scenario;
  em.manifest.config_echo = serialize_config(c);

  const std::string stem = stem_of(c);
  const SubsystemSpec sub{c.ell};
  const std::vector<double> times = c.grid.points();
  const auto metrics = rdm_metrics(c);

  std::vector<std::string> labels;
  // series[metric][state][sample]
  std::map<std::string, std::vector<std::vector<double>>> series;
  std::vector<MultiSectorState> states;
  states.reserve(c.states.size());
  for (const auto& spec : c.states) {
    labels.push_back(spec.label);
    states.push_back(build_state(c.model, c.n_sites, c.params, spec, c.cap_dim));
  }

  if (!metrics.empty()) {
    for (std::size_t s = 0; s < states.size(); ++s) {
      const ReductionPlan plan(states[s], sub);
      auto table = metric_table(states[s], plan, metrics, times, c.model);
      for (const auto& m : metrics) series[m].push_back(std::move(table[m]));
    }
    for (const auto& m : metrics) {
      CsvTable csv;
      csv.comments = base_comments(c);
      csv.comments.push_back("metric: " + m);
      csv.columns = {"wt"};
      for (const auto& l : labels) csv.columns.push_back(l);
      for (std::size_t i = 0; i < times.size(); ++i) {
        std::vector<double> row{times[i]};
        for (const auto& sv : series[m]) row.push_back(sv[i]);
        csv.add_row(row);
      }
      em.emit(stem + "_" + m + ".csv", csv.to_string());
      if (c.plots) {
        std::vector<SvgSeries> sv;
        for (std::size_t s = 0; s < labels.size(); ++s)
          sv.push_back({labels[s], series[m][s]});
        em.emit(stem + "_" + m + ".svg",
                svg_line_plot(stem + ": " + m, "wt", m, times, sv,
                              c.grid.kind == TimeGrid::Kind::Log));
      }
    }
    if (labels.size() >= 2)
      em.emit(stem + "_crossings.csv",
              crossing_report(c, times, labels, series).to_string());
  }

  if (std::count(c.metrics.begin(), c.metrics.end(), "zdist") > 0) {
    const ProbeOperator probe = make_probe(c);
    for (std::size_t s = 0; s < states.size(); ++s) {
      const auto dist =
          gap_distribution(states[s], 0, 1, sub, probe, c.bin_width);
      CsvTable csv;
      csv.comments = base_comments(c);
      csv.comments.push_back(
          "gap-resolved weights between sector components 0 and 1; "
          "probe: " + c.probe);
      csv.comments.push_back(
          "omega replaces wt: rows are frequency bins, not time samples");
      csv.comments.push_back(
          "abs_z_norm: |z| per bin scaled so the global maximum is 1");
      if (c.params.j == 0.0) {
        const cplx z0 = zero_frequency_diagonal_ensemble(states[s], 0, 1, sub,
                                                         probe);
        csv.comments.push_back("abs z0 (dephased ensemble): " +
                               format_sci(std::abs(z0)));
      }
      double zmax = 0.0;
      for (const auto& [key, z] : dist.bins)
        zmax = std::max(zmax, std::abs(z));
      if (zmax <= 0.0) zmax = 1.0;
      csv.columns = {"omega", "re_z", "im_z", "abs_z_norm"};
      for (const auto& [key, z] : dist.bins)
        csv.add_row({dist.representative(key), z.real(), z.imag(),
                     std::abs(z) / zmax});
      em.emit(stem + "_zdist_" + labels[s] + ".csv", csv.to_string());
      if (c.plots) {
        std::vector<double> omega;
        std::vector<SvgSeries> sv(1);
        sv[0].label = "|z| / max";
        for (const auto& [key, z] : dist.bins) {
          omega.push_back(dist.representative(key));
          sv[0].y.push_back(std::abs(z) / zmax);
        }
        em.emit(stem + "_zdist_" + labels[s] + ".svg",
                svg_line_plot(stem + ": normalized |z| per bin, " + labels[s],
                              "omega/w", "|z| / max", omega, sv));
      }
    }
  }

  if (c.emit_averages && !metrics.empty()) {
    const std::vector<double> avg_times = averaging_times(c);
    CsvTable csv;
    csv.comments = base_comments(c);
    {
      std::ostringstream note;
      note << "window average over [" << c.avg_t0 << ", " << c.avg_t1
           << "], " << c.avg_samples << " samples";
      csv.comments.push_back(note.str());
    }
    csv.columns = {"state"};
    for (const auto& m : metrics) csv.columns.push_back("avg_" + m);
    const bool with_z0 = c.params.j == 0.0;
    if (with_z0) {
      csv.columns.push_back("abs_z0_enumerated");
      csv.columns.push_back("abs_z0_ensemble");
      csv.comments.push_back(
          "j = 0: zero-frequency weight from gap enumeration and from the "
          "dephased ensemble");
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
      const ReductionPlan plan(states[s], sub);
      auto table = metric_table(states[s], plan, metrics, avg_times, c.model);
      std::vector<std::string> row{labels[s]};
      for (const auto& m : metrics) {
        double sum = 0.0;
        for (double v : table[m]) sum += v;
        row.push_back(format_sci(sum / double(avg_times.size())));
      }
      if (with_z0) {
        const ProbeOperator probe = make_probe(c);
        const auto dist =
            gap_distribution(states[s], 0, 1, sub, probe, 1e-10);
        const cplx z0c =
            zero_frequency_diagonal_ensemble(states[s], 0, 1, sub, probe);
        row.push_back(format_sci(std::abs(dist.zero_frequency())));
        row.push_back(format_sci(std::abs(z0c)));
      }
      csv.rows.push_back(std::move(row));
    }
    em.emit(stem + "_averages.csv", csv.to_string());
  }

  em.manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  em.emit(stem + "_manifest.json", em.manifest.to_json());
  // the manifest lists the data files; itself is excluded from the digest set
  em.manifest.files.pop_back();
  return em.manifest;
}

ResultManifest run_sweep(const ScenarioConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(c);
  if (c.kind != RunKind::Sweep)
    throw ConfigError("sweep requires kind = sweep");

  Emitter em;
  em.dir = resolve_out_dir(c);
  fs::create_directories(em.dir);
  em.manifest.scenario = c.scenario;
  em.manifest.config_echo = serialize_config(c);

  const std::string stem = stem_of(c);
  const SubsystemSpec sub{c.ell};
  const auto metrics = rdm_metrics(c);
  const std::vector<double> avg_times = averaging_times(c);
  const StateSpec& spec = c.states.front();

  // values[metric][(n,j) row]
  std::map<std::string, std::vector<double>> table;
  std::vector<std::pair<int, double>> grid_rows;
  std::vector<double> z0_enum, z0_ens;
  for (int n : c.n_list) {
    for (double j : c.j_list) {
      ModelParams p = c.params;
      p.j = j;
      const MultiSectorState state = build_state(c.model, n, p, spec, c.cap_dim);
      const ReductionPlan plan(state, sub);
      auto vals = metric_table(state, plan, metrics, avg_times, c.model);
      grid_rows.emplace_back(n, j);
      for (const auto& m : metrics) {
        double sum = 0.0;
        for (double v : vals[m]) sum += v;
        table[m].push_back(sum / double(avg_times.size()));
      }
      if (j == 0.0 && spec.sectors.size() >= 2) {
        const ProbeOperator probe = make_probe(c);
        const auto dist = gap_distribution(state, 0, 1, sub, probe, 1e-10);
        const cplx z0c =
            zero_frequency_diagonal_ensemble(state, 0, 1, sub, probe);
        z0_enum.push_back(std::abs(dist.zero_frequency()));
        z0_ens.push_back(std::abs(z0c));
      } else {
        z0_enum.push_back(std::nan(""));
        z0_ens.push_back(std::nan(""));
      }
    }
  }

  for (const auto& m : metrics) {
    CsvTable csv;
    csv.comments = base_comments(c);
    {
      std::ostringstream note;
      note << "window average over [" << c.avg_t0 << ", " << c.avg_t1
           << "], " << c.avg_samples << " samples; state: " << spec.label;
      csv.comments.push_back(note.str());
    }
    csv.columns = {"n", "j", "avg_" + m};
    const bool with_z0 = m == "ea";
    if (with_z0) {
      csv.columns.push_back("abs_z0_enumerated");
      csv.columns.push_back("abs_z0_ensemble");
      csv.comments.push_back(
          "z0 columns filled on j = 0 rows only (nan elsewhere)");
    }
    for (std::size_t r = 0; r < grid_rows.size(); ++r) {
      std::vector<double> row{double(grid_rows[r].first), grid_rows[r].second,
                              table[m][r]};
      if (with_z0) {
        row.push_back(z0_enum[r]);
        row.push_back(z0_ens[r]);
      }
      csv.add_row(row);
    }
    em.emit(stem + "_sweep_" + m + ".csv", csv.to_string());
    if (c.plots) {
      // one curve per n over the j grid
      std::vector<double> x(c.j_list.begin(), c.j_list.end());
      std::vector<SvgSeries> sv;
      std::size_t r = 0;
      for (int n : c.n_list) {
        SvgSeries s;
        s.label = "n=" + std::to_string(n);
        for (std::size_t k = 0; k < c.j_list.size(); ++k)
          s.y.push_back(table.at(m)[r++]);
        sv.push_back(std::move(s));
      }
      em.emit(stem + "_sweep_" + m + ".svg",
              svg_line_plot(stem + ": window-averaged " + m, "j/w", m, x, sv));
    }
  }

  em.manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  em.emit(stem + "_manifest.json", em.manifest.to_json());
  em.manifest.files.pop_back();
  return em.manifest;
}

}  // namespace lgt
