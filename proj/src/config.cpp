#include "lgt/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lgt {

std::vector<double> TimeGrid::points() const {
  std::vector<double> t(static_cast<std::size_t>(count));
  if (count == 1) {
    t[0] = t0;
    return t;
  }
  if (kind == Kind::Linear) {
    for (int i = 0; i < count; ++i)
      t[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * i / (count - 1);
  } else {
    const double l0 = std::log(t0), l1 = std::log(t1);
    for (int i = 0; i < count; ++i)
      t[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (count - 1));
  }
  return t;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_any(const std::string& s,
                                   const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& msg) {
  throw ConfigError(source + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& s, const std::string& source, int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(source, line, "expected a number, got '" + s + "'");
  }
}

long long to_int(const std::string& s, const std::string& source, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(source, line, "expected an integer, got '" + s + "'");
  }
}

bool to_bool(const std::string& s, const std::string& source, int line) {
  const std::string v = lower(s);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(source, line, "expected true/false, got '" + s + "'");
}

}  // namespace

double parse_angle(const std::string& text) {
  const std::string s = trim(text);
  try {
    if (s.size() >= 2 && lower(s.substr(s.size() - 2)) == "pi") {
      const std::string head = trim(s.substr(0, s.size() - 2));
      if (head.empty()) return kPi;
      if (head == "-") return -kPi;
      std::size_t used = 0;
      const double f = std::stod(head, &used);
      if (used != head.size())
        throw ConfigError("bad angle literal '" + text + "'");
      return f * kPi;
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw ConfigError("bad angle literal '" + text + "'");
    return v;
  } catch (const std::logic_error&) {  // stod: invalid or out of range
    throw ConfigError("bad angle literal '" + text + "'");
  }
}

namespace {

double parse_angle_at(const std::string& s, const std::string& source,
                      int line) {
  try {
    return parse_angle(s);
  } catch (const ConfigError& e) {
    fail(source, line, e.what());
  }
}

void apply_global(ScenarioConfig& c, const std::string& key,
                  const std::string& val, const std::string& source,
                  int line) {
  if (key == "kind") {
    const std::string v = lower(val);
    if (v == "series")
      c.kind = RunKind::Series;
    else if (v == "sweep")
      c.kind = RunKind::Sweep;
    else
      fail(source, line, "kind must be series or sweep");
  } else if (key == "model") {
    auto m = model_from_string(lower(val));
    if (!m) fail(source, line, "unknown model '" + val + "'");
    c.model = *m;
  } else if (key == "n") {
    c.n_sites = static_cast<int>(to_int(val, source, line));
  } else if (key == "w") {
    c.params.w = to_double(val, source, line);
  } else if (key == "m") {
    c.params.m = to_double(val, source, line);
  } else if (key == "j") {
    c.params.j = to_double(val, source, line);
  } else if (key == "theta") {
    c.params.theta = parse_angle_at(val, source, line);
  } else if (key == "ell") {
    c.ell = static_cast<int>(to_int(val, source, line));
  } else if (key == "time_grid") {
    auto f = split_any(val, " \t");
    if (f.size() != 4) fail(source, line, "time_grid = <linear|log> <t0> <t1> <count>");
    const std::string k = lower(f[0]);
    if (k == "linear")
      c.grid.kind = TimeGrid::Kind::Linear;
    else if (k == "log")
      c.grid.kind = TimeGrid::Kind::Log;
    else
      fail(source, line, "time_grid kind must be linear or log");
    c.grid.t0 = to_double(f[1], source, line);
    c.grid.t1 = to_double(f[2], source, line);
    c.grid.count = static_cast<int>(to_int(f[3], source, line));
  } else if (key == "avg_window") {
    auto f = split_any(val, " \t");
    if (f.size() != 3) fail(source, line, "avg_window = <t0> <t1> <samples>");
    c.avg_t0 = to_double(f[0], source, line);
    c.avg_t1 = to_double(f[1], source, line);
    c.avg_samples = static_cast<int>(to_int(f[2], source, line));
  } else if (key == "emit_averages") {
    c.emit_averages = to_bool(val, source, line);
  } else if (key == "metrics") {
    c.metrics = split_any(lower(val), ", \t");
  } else if (key == "j_list") {
    c.j_list.clear();
    for (const auto& f : split_any(val, ", \t"))
      c.j_list.push_back(to_double(f, source, line));
  } else if (key == "n_list") {
    c.n_list.clear();
    for (const auto& f : split_any(val, ", \t"))
      c.n_list.push_back(static_cast<int>(to_int(f, source, line)));
  } else if (key == "bin_width") {
    c.bin_width = to_double(val, source, line);
  } else if (key == "coarse_bin") {
    c.coarse_bin = to_double(val, source, line);
  } else if (key == "smooth_width") {
    c.smooth_width = static_cast<int>(to_int(val, source, line));
  } else if (key == "probe") {
    c.probe = lower(val);
  } else if (key == "rng_seed") {
    c.rng_seed = static_cast<std::uint64_t>(to_int(val, source, line));
  } else if (key == "cap_dim") {
    c.cap_dim = static_cast<std::size_t>(to_int(val, source, line));
  } else if (key == "out") {
    c.out_dir = val;
  } else if (key == "plots") {
    c.plots = to_bool(val, source, line);
  } else {
    fail(source, line, "unknown key '" + key + "'");
  }
}

void apply_state(StateSpec& st, const std::string& key, const std::string& val,
                 const std::string& source, int line) {
  if (key == "label") {
    st.label = val;
  } else if (key == "sectors") {
    st.sectors.clear();
    for (const auto& part : split_any(val, "|")) {
      GaugeSector g;
      for (const auto& f : split_any(part, ", \t"))
        g.push_back(static_cast<int>(to_int(f, source, line)));
      if (g.empty()) fail(source, line, "empty sector component");
      st.sectors.push_back(std::move(g));
    }
  } else if (key == "alphas") {
    st.alphas.clear();
    if (lower(val) != "equal")
      for (const auto& f : split_any(val, ", \t"))
        st.alphas.push_back(to_double(f, source, line));
  } else if (key == "angle") {
    st.angle = parse_angle_at(val, source, line);
  } else if (key == "seed") {
    st.seed = lower(val);
  } else {
    fail(source, line, "unknown state key '" + key + "'");
  }
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& source) {
  ScenarioConfig cfg;
  bool in_state = false;
  bool inherited_states = false;
  std::set<std::string> seen_global;
  std::set<std::string> seen_state;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool first_key = true;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s == "[state]") {
      if (inherited_states) {
        // a file that declares its own states replaces the catalog's
        cfg.states.clear();
        inherited_states = false;
      }
      cfg.states.emplace_back();
      in_state = true;
      seen_state.clear();
      continue;
    }
    if (s.front() == '[') fail(source, line, "unknown section '" + s + "'");
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(source, line, "expected key = value");
    const std::string key = lower(trim(s.substr(0, eq)));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty()) fail(source, line, "empty key");
    if (key == "scenario") {
      if (!first_key)
        fail(source, line, "scenario = <id> must be the first setting");
      try {
        cfg = builtin_scenario(val);  // catalog entry becomes the default set
      } catch (const ConfigError& e) {
        fail(source, line, e.what());
      }
      inherited_states = !cfg.states.empty();
      first_key = false;
      continue;
    }
    first_key = false;
    if (in_state) {
      if (!seen_state.insert(key).second)
        fail(source, line, "duplicate state key '" + key + "'");
      apply_state(cfg.states.back(), key, val, source, line);
    } else {
      if (!seen_global.insert(key).second)
        fail(source, line, "duplicate key '" + key + "'");
      apply_global(cfg, key, val, source, line);
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(fs::path(arg))) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), arg);
  }
  for (const auto& name : scenario_names())
    if (name == arg) return builtin_scenario(arg);
  throw ConfigError("no such config file or scenario id: " + arg);
}

std::string serialize_config(const ScenarioConfig& c) {
  std::ostringstream out;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  out << "kind = " << (c.kind == RunKind::Sweep ? "sweep" : "series") << "\n";
  out << "model = " << to_string(c.model) << "\n";
  out << "n = " << c.n_sites << "\n";
  out << "w = " << num(c.params.w) << "\n";
  out << "m = " << num(c.params.m) << "\n";
  out << "j = " << num(c.params.j) << "\n";
  out << "theta = " << num(c.params.theta) << "\n";
  out << "ell = " << c.ell << "\n";
  out << "time_grid = "
      << (c.grid.kind == TimeGrid::Kind::Linear ? "linear" : "log") << " "
      << num(c.grid.t0) << " " << num(c.grid.t1) << " " << c.grid.count
      << "\n";
  out << "avg_window = " << num(c.avg_t0) << " " << num(c.avg_t1) << " "
      << c.avg_samples << "\n";
  out << "emit_averages = " << (c.emit_averages ? "true" : "false") << "\n";
  out << "metrics =";
  for (const auto& m : c.metrics) out << " " << m;
  out << "\n";
  if (!c.j_list.empty()) {
    out << "j_list =";
    for (double j : c.j_list) out << " " << num(j);
    out << "\n";
  }
  if (!c.n_list.empty()) {
    out << "n_list =";
    for (int n : c.n_list) out << " " << n;
    out << "\n";
  }
  out << "bin_width = " << num(c.bin_width) << "\n";
  out << "coarse_bin = " << num(c.coarse_bin) << "\n";
  out << "smooth_width = " << c.smooth_width << "\n";
  out << "probe = " << c.probe << "\n";
  out << "rng_seed = " << c.rng_seed << "\n";
  out << "cap_dim = " << c.cap_dim << "\n";
  if (!c.out_dir.empty()) out << "out = " << c.out_dir << "\n";
  out << "plots = " << (c.plots ? "true" : "false") << "\n";
  for (const auto& st : c.states) {
    out << "\n[state]\n";
    out << "label = " << st.label << "\n";
    out << "sectors =";
    for (std::size_t i = 0; i < st.sectors.size(); ++i) {
      if (i) out << " |";
      for (int g : st.sectors[i]) out << " " << g;
    }
    out << "\n";
    if (st.angle)
      out << "angle = " << num(*st.angle) << "\n";
    else if (st.alphas.empty())
      out << "alphas = equal\n";
    else {
      out << "alphas =";
      for (double a : st.alphas) out << " " << num(a);
      out << "\n";
    }
    out << "seed = " << st.seed << "\n";
  }
  return out.str();
}

void validate_config(const ScenarioConfig& c) {
  if (c.n_sites < 2 || c.n_sites % 2 != 0)
    throw ConfigError("n must be an even integer >= 2, got " +
                      std::to_string(c.n_sites));
  if (c.ell < 1 || c.ell >= c.n_sites)
    throw ConfigError("ell must lie in [1, n-1]");
  if (c.params.w <= 0) throw ConfigError("w must be positive");
  if (c.grid.count < 1) throw ConfigError("time grid needs >= 1 point");
  if (c.grid.kind == TimeGrid::Kind::Log && c.grid.t0 <= 0)
    throw ConfigError("log time grid needs t0 > 0");
  if (c.grid.count > 1 && !(c.grid.t1 > c.grid.t0))
    throw ConfigError("time grid needs t1 > t0");
  if (c.avg_samples < 1 || !(c.avg_t1 >= c.avg_t0))
    throw ConfigError("bad averaging window");
  if (c.bin_width <= 0) throw ConfigError("bin_width must be positive");
  if (c.smooth_width < 1 || c.smooth_width % 2 == 0)
    throw ConfigError("smooth_width must be a positive odd integer");
  static const std::set<std::string> known_metrics = {
      "ea", "renyi2", "trace-distance", "order-parameter", "zdist"};
  for (const auto& m : c.metrics)
    if (!known_metrics.count(m))
      throw ConfigError("unknown metric '" + m + "'");
  if (c.probe != "all-ones" && c.probe != "identity" && c.probe != "random")
    throw ConfigError("probe must be all-ones, identity or random");
  const bool wants_order =
      std::count(c.metrics.begin(), c.metrics.end(), "order-parameter") > 0;
  if (wants_order && c.model != ModelKind::QuantumLink)
    throw ConfigError(
        "order-parameter is defined on quantumlink link spins only");
  if (c.kind == RunKind::Sweep) {
    if (c.j_list.empty() || c.n_list.empty())
      throw ConfigError("sweep needs nonempty j_list and n_list");
    for (int n : c.n_list)
      if (n < 2 || n % 2 != 0 || c.ell >= n)
        throw ConfigError("bad sweep n = " + std::to_string(n));
  }
  if (c.states.empty()) throw ConfigError("at least one [state] is required");
  for (const auto& st : c.states) {
    if (st.label.empty()) throw ConfigError("state needs a label");
    if (st.sectors.empty())
      throw ConfigError("state '" + st.label + "' lists no sectors");
    for (const auto& g : st.sectors)
      if (static_cast<int>(g.size()) != c.ell)
        throw ConfigError("state '" + st.label + "': sector charge tuple " +
                          "must have ell = " + std::to_string(c.ell) +
                          " entries");
    if (st.angle && st.sectors.size() != 2)
      throw ConfigError("state '" + st.label +
                        "': angle form needs exactly 2 sectors");
    if (st.angle && !st.alphas.empty())
      throw ConfigError("state '" + st.label +
                        "': give either angle or alphas, not both");
    if (!st.alphas.empty() && st.alphas.size() != st.sectors.size())
      throw ConfigError("state '" + st.label +
                        "': alphas count must match sectors");
    if (st.seed != "auto" && st.seed != "neel" && st.seed != "vacuum") {
      if (st.seed.find_first_not_of("01") != std::string::npos)
        throw ConfigError("state '" + st.label + "': seed must be auto, " +
                          "neel, vacuum or a 0/1 string");
    }
    if (std::count(c.metrics.begin(), c.metrics.end(), "zdist") > 0 &&
        st.sectors.size() < 2)
      throw ConfigError("zdist needs states with >= 2 sectors");
  }
}

namespace {

StateSpec make_state(std::string label, std::vector<GaugeSector> sectors,
                     std::optional<double> angle, std::string seed) {
  StateSpec st;
  st.label = std::move(label);
  st.sectors = std::move(sectors);
  st.angle = angle;
  st.seed = std::move(seed);
  return st;
}

std::map<std::string, ScenarioConfig> build_catalog() {
  std::map<std::string, ScenarioConfig> cat;

  // Equilibrium value of the asymmetry vs coupling and size, resonant angle.
  {
    ScenarioConfig c;
    c.scenario = "fig2a-sweep";
    c.kind = RunKind::Sweep;
    c.model = ModelKind::Schwinger;
    c.params.theta = kPi;
    c.ell = 2;
    c.j_list = {0.0, 0.05, 0.1, 0.15, 0.25, 0.5};
    c.n_list = {8, 10};
    c.metrics = {"ea"};
    c.plots = true;
    c.states.push_back(
        make_state("q1", {{0, 0}, {1, -1}}, std::nullopt, "neel"));
    cat[c.scenario] = c;
  }
  // Same sweep at theta = 0.
  {
    ScenarioConfig c = cat["fig2a-sweep"];
    c.scenario = "fig2b-sweep";
    c.params.theta = 0.0;
    cat[c.scenario] = c;
  }
  // Frequency-resolved weights |z(omega)| in the strong-coupling regime.
  {
    ScenarioConfig c;
    c.scenario = "fig2c-zdist";
    c.model = ModelKind::Schwinger;
    c.n_sites = 8;
    c.params.j = 6.0;
    c.ell = 2;
    c.metrics = {"zdist"};
    c.plots = true;
    c.states.push_back(
        make_state("theta0", {{0, 0}, {1, -1}}, std::nullopt, "neel"));
    cat[c.scenario] = c;
  }
  // Two-site restoration crossings for the q-family.
  {
    ScenarioConfig c;
    c.scenario = "fig3a-scaled";
    c.model = ModelKind::Schwinger;
    c.n_sites = 12;
    c.params.j = 0.15;
    c.params.theta = kPi;
    c.ell = 2;
    c.metrics = {"ea", "renyi2", "trace-distance"};
    c.plots = true;
    const double q_max = 3.0;
    for (int q = 1; q <= 3; ++q)
      c.states.push_back(make_state(
          "q" + std::to_string(q), {{0, 0}, {q, -q}},
          (kPi / 4.0) * (q / q_max), "neel"));
    cat[c.scenario] = c;
  }
  // Three-site variant at weaker coupling.
  {
    ScenarioConfig c = cat["fig3a-scaled"];
    c.scenario = "fig3b-scaled";
    c.params.j = 0.05;
    c.ell = 3;
    c.states.clear();
    const double q_max = 3.0;
    for (int q = 1; q <= 3; ++q)
      c.states.push_back(make_state(
          "q" + std::to_string(q), {{0, 0, 0}, {q, 0, -q}},
          (kPi / 4.0) * (q / q_max), "neel"));
    cat[c.scenario] = c;
  }
  // Quantum link model: asymmetry and the measurable order parameter.
  {
    ScenarioConfig c;
    c.scenario = "fig4-scaled";
    c.model = ModelKind::QuantumLink;
    c.n_sites = 10;
    c.params.j = 0.2;
    c.ell = 2;
    c.grid = TimeGrid{TimeGrid::Kind::Linear, 0.0, 200.0, 401};
    c.metrics = {"ea", "order-parameter"};
    c.plots = true;
    c.states.push_back(
        make_state("psi1", {{1, -1}, {0, 0}}, kPi / 8.0, "vacuum"));
    c.states.push_back(
        make_state("psi2", {{1, -1}, {-1, 1}}, kPi / 5.0, "vacuum"));
    cat[c.scenario] = c;
  }
  // Frozen gauge field: the asymmetry plateaus instead of relaxing.
  {
    ScenarioConfig c;
    c.scenario = "j0-plateau";
    c.model = ModelKind::Schwinger;
    c.n_sites = 10;
    c.params.j = 0.0;
    c.params.theta = kPi;
    c.ell = 2;
    c.emit_averages = true;
    c.metrics = {"ea"};
    c.plots = true;
    c.states.push_back(
        make_state("q1", {{0, 0}, {1, -1}}, std::nullopt, "neel"));
    cat[c.scenario] = c;
  }
  return cat;
}

const std::map<std::string, ScenarioConfig>& catalog() {
  static const std::map<std::string, ScenarioConfig> cat = build_catalog();
  return cat;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : catalog()) names.push_back(k);
  return names;
}

const ScenarioConfig& builtin_scenario(const std::string& id) {
  auto it = catalog().find(id);
  if (it == catalog().end())
    throw ConfigError("unknown scenario id '" + id + "'");
  return it->second;
}

}  // namespace lgt
