#pragma once

#include "dkp/characteristics.hpp"
#include "dkp/config.hpp"
#include "dkp/diagnostics.hpp"
#include "dkp/evolve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dkp {

struct RunOptions {
  /// Stop the march once max_events catastrophes are found.
  bool stop_after_events = false;
  /// Directory for stride snapshots written during the march; empty disables.
  std::string snapshot_dir;
};

struct Capture {
  double t = 0.0;
  SpectralField state;
};

struct RunOutcome {
  RunConfig config;
  GridPtr grid;
  SpectralField initial;
  SpectralField final_state;
  double t = 0.0;
  std::size_t steps = 0;
  bool blew_up = false;
  std::vector<DiagnosticsRecord> diagnostics;
  std::vector<std::pair<double, double>> min_delta;
  std::vector<DetectedEvent> events;
  std::vector<CriticalBundle> bundles;
  std::vector<Capture> captures;
  std::vector<std::string> files;  ///< snapshots written during the march
};

/// Evolve the configured model with diagnostics, optional detection and
/// exact-time captures. A blow-up is reported in the outcome (last finite
/// state kept), never thrown.
RunOutcome run_experiment(const RunConfig& config, const RunOptions& options = {});

SnapshotMeta snapshot_meta(const RunConfig& config, double t);

/// Write diagnostics.csv, min_delta.csv, events.csv, bundle_<k>.txt,
/// capture and final snapshots and config.txt into config.output_dir.
/// Returns the written paths (relative to output_dir).
std::vector<std::string> write_outputs(const RunOutcome& outcome);

/// manifest.txt: config hash, thread count, then "<hash>  <file>" lines.
void write_manifest(const std::string& dir, const std::string& config_hash, int threads,
                    const std::vector<std::string>& files);

}  // namespace dkp
