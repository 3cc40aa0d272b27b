#include "dkp/config.hpp"

#include "dkp/diagnostics.hpp"
#include "dkp/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace dkp {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto z = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string{} : s.substr(a, z - a + 1);
}

double to_double(const std::string& v, int line) {
  std::string s = v;
  double scale = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    scale = std::numbers::pi;
    s = trim(s.substr(0, s.size() - 2));
    if (s.empty()) s = "1";
  }
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(d)) throw ParseError(line, "bad number '" + v + "'");
  return d * scale;
}

std::size_t to_size(const std::string& v, int line) {
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
    n = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ParseError(line, "bad non-negative integer '" + v + "'");
  return static_cast<std::size_t>(n);
}

bool to_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ParseError(line, "bad boolean '" + v + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double RunConfig::hx() const { return half_width_x > 0.0 ? half_width_x : 5.0 * std::numbers::pi; }
double RunConfig::hy() const { return half_width_y > 0.0 ? half_width_y : 5.0 * std::numbers::pi; }

void RunConfig::validate() const {
  auto pow2 = [](std::size_t n) { return n >= 8 && std::has_single_bit(n); };
  if (!pow2(nx) || !pow2(ny)) throw ContractError("nx and ny must be powers of two >= 8");
  if (half_width_x < 0.0 || half_width_y < 0.0) throw ContractError("half widths must be positive");
  if (!(t_end > 0.0)) throw ContractError("t_end must be positive");
  if (nt == 0) throw ContractError("nt must be positive");
  if (epsilon < 0.0 || c < 0.0 || krasny < 0.0) throw ContractError("epsilon, c, krasny must be >= 0");
  if (model == ModelKind::transformed && epsilon != 0.0)
    throw ContractError("epsilon must be 0 for the transformed model");
  if (model == ModelKind::dissipative && detect)
    throw ContractError("catastrophe detection needs the transformed model");
  if (profile == ProfileId::custom) throw ContractError("custom profiles are library-only");
  for (double t : capture_times)
    if (!(t > 0.0 && t <= t_end)) throw ContractError("capture times must lie in (0, t_end]");
}

std::string RunConfig::to_text() const {
  std::ostringstream o;
  o << "name = " << name << '\n'
    << "model = " << to_string(model) << '\n'
    << "nx = " << nx << '\n'
    << "ny = " << ny << '\n'
    << "half_width_x = " << fmt(hx()) << '\n'
    << "half_width_y = " << fmt(hy()) << '\n'
    << "t_end = " << fmt(t_end) << '\n'
    << "nt = " << nt << '\n'
    << "epsilon = " << fmt(epsilon) << '\n'
    << "c = " << fmt(c) << '\n'
    << "krasny = " << fmt(krasny) << '\n'
    << "profile = " << to_string(profile) << '\n'
    << "amplitude = " << fmt(amplitude) << '\n'
    << "project_mean = " << (project_mean ? "true" : "false") << '\n'
    << "dealias = " << (dealias ? "true" : "false") << '\n'
    << "output_dir = " << output_dir << '\n'
    << "snapshot_stride = " << snapshot_stride << '\n'
    << "diagnostics_stride = " << diagnostics_stride << '\n'
    << "capture_times = ";
  for (std::size_t i = 0; i < capture_times.size(); ++i) o << (i ? "," : "") << fmt(capture_times[i]);
  o << '\n'
    << "detect = " << (detect ? "true" : "false") << '\n'
    << "max_events = " << max_events << '\n'
    << "t_tol = " << fmt(t_tol) << '\n'
    << "exclusion_radius = " << fmt(exclusion_radius) << '\n';
  return o.str();
}

std::string RunConfig::hash() const {
  RunConfig c = *this;
  c.name.clear();
  c.output_dir.clear();
  return fnv1a_hex(c.to_text());
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value, int line) {
  const std::string& v = value;
  try {
    if (key == "name") c.name = v;
    else if (key == "model") c.model = parse_model_kind(v);
    else if (key == "nx") c.nx = to_size(v, line);
    else if (key == "ny") c.ny = to_size(v, line);
    else if (key == "n") c.nx = c.ny = to_size(v, line);
    else if (key == "half_width_x") c.half_width_x = to_double(v, line);
    else if (key == "half_width_y") c.half_width_y = to_double(v, line);
    else if (key == "half_width") c.half_width_x = c.half_width_y = to_double(v, line);
    else if (key == "t_end") c.t_end = to_double(v, line);
    else if (key == "nt") c.nt = to_size(v, line);
    else if (key == "epsilon") c.epsilon = to_double(v, line);
    else if (key == "c") c.c = to_double(v, line);
    else if (key == "krasny") c.krasny = to_double(v, line);
    else if (key == "profile") c.profile = parse_profile_id(v);
    else if (key == "amplitude") c.amplitude = to_double(v, line);
    else if (key == "project_mean") c.project_mean = to_bool(v, line);
    else if (key == "dealias") c.dealias = to_bool(v, line);
    else if (key == "output_dir") c.output_dir = v;
    else if (key == "snapshot_stride") c.snapshot_stride = to_size(v, line);
    else if (key == "diagnostics_stride") c.diagnostics_stride = to_size(v, line);
    else if (key == "capture_times") {
      c.capture_times.clear();
      std::stringstream ss(v);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!trim(item).empty()) c.capture_times.push_back(to_double(trim(item), line));
    } else if (key == "detect") c.detect = to_bool(v, line);
    else if (key == "max_events") c.max_events = to_size(v, line);
    else if (key == "t_tol") c.t_tol = to_double(v, line);
    else if (key == "exclusion_radius") c.exclusion_radius = to_double(v, line);
    else throw ParseError(line, "unknown key '" + key + "'");
  } catch (const ContractError& e) {
    throw ParseError(line, e.what());
  }
}

RunConfig parse_config(const std::string& text, RunConfig cfg) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    if (key.empty()) throw ParseError(line, "empty key");
    apply_setting(cfg, key, trim(s.substr(eq + 1)), line);
  }
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::vector<std::string> preset_names() {
  return {"table1",        "table1_first", "table1_smoke", "table2",        "table2_radial",
          "table2_skew",   "dissipative_sech", "dissipative_skew", "zero"};
}

std::vector<RunConfig> preset(const std::string& name) {
  RunConfig c;
  c.name = name;
  c.output_dir = "out/" + name;
  if (name == "table1_first") {
    c.nx = c.ny = 512;
    c.t_end = 0.23;
    c.nt = 1000;
    c.detect = true;
    c.max_events = 1;
    return {c};
  }
  if (name == "table1" || name == "table1_smoke") {
    c.nx = name == "table1" ? 512 : 256;
    c.ny = name == "table1" ? 2048 : 512;
    c.t_end = 0.32;
    c.nt = 5000;
    c.detect = true;
    c.max_events = 2;
    return {c};
  }
  if (name == "table2_radial") {
    c.profile = ProfileId::asym_gauss_radial;
    c.nx = 512;
    c.ny = 2048;
    c.t_end = 0.15;
    c.nt = 5000;
    c.detect = true;
    c.max_events = 2;
    return {c};
  }
  if (name == "table2_skew") {
    c.profile = ProfileId::asym_gauss_skew;
    c.nx = c.ny = 2048;
    c.t_end = 0.15;
    c.nt = 2000;
    c.detect = true;
    c.max_events = 1;
    return {c};
  }
  if (name == "table2") {
    auto a = preset("table2_radial");
    auto b = preset("table2_skew");
    a.front().output_dir = "out/table2/radial";
    b.front().output_dir = "out/table2/skew";
    return {a.front(), b.front()};
  }
  if (name == "dissipative_sech") {
    c.model = ModelKind::dissipative;
    c.epsilon = 0.01;
    c.nx = 16384;
    c.ny = 1024;
    c.t_end = 0.32;
    c.nt = 5000;
    return {c};
  }
  if (name == "dissipative_skew") {
    c.model = ModelKind::dissipative;
    c.profile = ProfileId::asym_gauss_skew;
    c.epsilon = 0.04;
    c.c = 1.0;
    c.nx = c.ny = 2048;
    c.t_end = 0.15;
    c.nt = 2000;
    return {c};
  }
  if (name == "zero") {
    c.nx = c.ny = 64;
    c.amplitude = 0.0;
    c.t_end = 0.1;
    c.nt = 10;
    c.detect = true;
    return {c};
  }
  throw ContractError("unknown preset '" + name + "'");
}

}  // namespace dkp
