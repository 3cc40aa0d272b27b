#pragma once

#include "dkp/models.hpp"

#include <string>
#include <vector>

namespace dkp {

/// Experiment description. Text form: one `key = value` per line, `#`
/// starts a comment. Lengths accept a `pi` suffix ("5pi").
struct RunConfig {
  std::string name = "run";
  ModelKind model = ModelKind::transformed;
  std::size_t nx = 512, ny = 512;
  double half_width_x = 0.0, half_width_y = 0.0;  // 0 -> 5 pi
  double t_end = 0.23;
  std::size_t nt = 1000;
  double epsilon = 0.0;
  double c = 0.0;
  double krasny = 1e-10;
  ProfileId profile = ProfileId::sym_sech;
  double amplitude = 1.0;
  bool project_mean = true;
  bool dealias = false;
  std::string output_dir = "out";
  std::size_t snapshot_stride = 0;  // 0: final snapshot only
  std::size_t diagnostics_stride = 1;
  std::vector<double> capture_times;
  bool detect = false;
  std::size_t max_events = 1;
  double t_tol = 1e-4;
  double exclusion_radius = 1.0;

  double hx() const;
  double hy() const;
  /// Throws ContractError when a physical parameter is out of range.
  void validate() const;
  /// Canonical text form (every key, fixed order).
  std::string to_text() const;
  /// FNV-1a of the canonical form without name and output_dir.
  std::string hash() const;
};

/// Apply one `key = value` assignment. Throws ParseError(line) on an unknown
/// key or malformed value.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, int line = 0);

RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Named presets; a preset may expand to several runs (e.g. both Table 2
/// profiles).
std::vector<std::string> preset_names();
std::vector<RunConfig> preset(const std::string& name);

}  // namespace dkp
