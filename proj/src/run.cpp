#include "dkp/run.hpp"

#include "dkp/fft.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace dkp {

namespace {

class CaptureObserver : public Observer {
 public:
  CaptureObserver(std::vector<double> times, double krasny) : times_(std::move(times)), krasny_(krasny) {
    std::sort(times_.begin(), times_.end());
  }

  bool on_step(const StepContext& ctx) override {
    while (next_ < times_.size() && times_[next_] <= ctx.t + 1e-12 * std::max(1.0, ctx.t)) {
      const double tc = times_[next_++];
      const double h = tc - ctx.t_prev;
      captures.push_back({tc, h >= ctx.t - ctx.t_prev ? *ctx.state
                                                      : advance(*ctx.model, *ctx.previous, ctx.t_prev, h, krasny_)});
    }
    return true;
  }

  std::vector<Capture> captures;

 private:
  std::vector<double> times_;
  double krasny_;
  std::size_t next_ = 0;
};

class SnapshotObserver : public Observer {
 public:
  SnapshotObserver(const RunConfig& cfg, std::string dir) : cfg_(cfg), dir_(std::move(dir)) {}

  bool on_step(const StepContext& ctx) override {
    if (ctx.step % cfg_.snapshot_stride != 0) return true;
    char name[64];
    std::snprintf(name, sizeof name, "snap_%06zu.bin", ctx.step);
    snapshot_write((std::filesystem::path(dir_) / name).string(), snapshot_meta(cfg_, ctx.t),
                   inverse(*ctx.state));
    files.push_back(name);
    return true;
  }

  std::vector<std::string> files;

 private:
  const RunConfig& cfg_;
  std::string dir_;
};

}  // namespace

SnapshotMeta snapshot_meta(const RunConfig& c, double t) {
  SnapshotMeta m;
  m.kind = to_string(c.model);
  m.nx = c.nx;
  m.ny = c.ny;
  m.half_width_x = c.hx();
  m.half_width_y = c.hy();
  m.t = t;
  m.epsilon = c.epsilon;
  m.c = c.c;
  m.config_hash = c.hash();
  return m;
}

RunOutcome run_experiment(const RunConfig& cfg, const RunOptions& options) {
  cfg.validate();
  RunOutcome out;
  out.config = cfg;
  out.grid = make_grid(cfg.nx, cfg.ny, cfg.hx(), cfg.hy());
  ModelOptions mo;
  mo.project_mean = cfg.project_mean;
  mo.dealias = cfg.dealias;
  ModelBinding model(cfg.model, out.grid, cfg.epsilon, cfg.c, mo);
  InitialProfile profile;
  profile.id = cfg.profile;
  profile.amplitude = cfg.amplitude;
  out.initial = forward(initial_profile(profile, out.grid));

  EvolveSettings es;
  es.t_end = cfg.t_end;
  es.nt = cfg.nt;
  es.krasny_threshold = cfg.krasny;

  DiagnosticsSeries diag(cfg.diagnostics_stride);
  DetectorSettings ds;
  ds.t_tol = cfg.t_tol;
  ds.exclusion_radius = cfg.exclusion_radius;
  ds.max_events = cfg.max_events;
  ds.stop_when_done = options.stop_after_events;
  CatastropheDetector detector(ds);
  CaptureObserver capture(cfg.capture_times, cfg.krasny);
  std::optional<SnapshotObserver> snaps;

  std::vector<Observer*> observers{&diag, &capture};
  if (cfg.detect) observers.push_back(&detector);
  if (cfg.snapshot_stride > 0 && !options.snapshot_dir.empty()) {
    std::filesystem::create_directories(options.snapshot_dir);
    snaps.emplace(cfg, options.snapshot_dir);
    observers.push_back(&*snaps);
  }

  try {
    EvolveResult r = evolve(model, out.initial, es, observers);
    out.final_state = std::move(r.state);
    out.t = r.t;
    out.steps = r.steps;
  } catch (const EvolveBlowUp& e) {
    out.blew_up = true;
    out.final_state = e.last_state();
    out.t = e.last_time();
  }
  out.diagnostics = diag.records();
  out.captures = std::move(capture.captures);
  if (snaps) out.files = snaps->files;
  if (cfg.detect) {
    out.min_delta = detector.min_delta_series();
    for (const DetectedEvent& e : detector.events()) {
      out.events.push_back(e);
      out.bundles.push_back(critical_bundle(e.state, e.point, model));
    }
  }
  return out;
}

std::vector<std::string> write_outputs(const RunOutcome& o) {
  namespace fs = std::filesystem;
  const fs::path dir(o.config.output_dir);
  fs::create_directories(dir);
  std::vector<std::string> files = o.files;
  auto at = [&](const std::string& name) { return (dir / name).string(); };

  {
    std::ofstream cfg(at("config.txt"));
    cfg << o.config.to_text();
    files.push_back("config.txt");
  }
  write_diagnostics_csv(at("diagnostics.csv"), o.diagnostics);
  files.push_back("diagnostics.csv");

  if (o.config.detect) {
    std::vector<std::vector<double>> rows;
    for (const auto& [t, m] : o.min_delta) rows.push_back({t, m});
    write_csv(at("min_delta.csv"), {"t", "min_delta"}, rows);
    files.push_back("min_delta.csv");
    rows.clear();
    for (const auto& b : o.bundles) rows.push_back({b.t_c, b.x_c, b.y_c, b.u_c, b.xi_c});
    write_csv(at("events.csv"), {"t_c", "x_c", "y_c", "u_c", "xi_c"}, rows);
    files.push_back("events.csv");
    for (std::size_t k = 0; k < o.bundles.size(); ++k) {
      const std::string name = "bundle_" + std::to_string(k + 1) + ".txt";
      write_bundle(at(name), o.bundles[k]);
      files.push_back(name);
      const std::string snap = "event_" + std::to_string(k + 1) + ".bin";
      snapshot_write(at(snap), snapshot_meta(o.config, o.bundles[k].t_c), inverse(o.events[k].state));
      files.push_back(snap);
    }
  }
  for (std::size_t k = 0; k < o.captures.size(); ++k) {
    const std::string name = "capture_" + std::to_string(k + 1) + ".bin";
    snapshot_write(at(name), snapshot_meta(o.config, o.captures[k].t), inverse(o.captures[k].state));
    files.push_back(name);
  }
  snapshot_write(at("final.bin"), snapshot_meta(o.config, o.t), inverse(o.final_state));
  files.push_back("final.bin");
  return files;
}

void write_manifest(const std::string& dir, const std::string& config_hash, int threads,
                    const std::vector<std::string>& files) {
  namespace fs = std::filesystem;
  std::ofstream m(fs::path(dir) / "manifest.txt");
  m << "config_hash " << config_hash << '\n' << "threads " << threads << '\n';
  for (const std::string& f : files) m << file_hash((fs::path(dir) / f).string()) << "  " << f << '\n';
}

}  // namespace dkp
