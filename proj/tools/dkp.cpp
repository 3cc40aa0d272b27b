#include "dkp/asymptotics.hpp"
#include "dkp/characteristics.hpp"
#include "dkp/config.hpp"
#include "dkp/diagnostics.hpp"
#include "dkp/errors.hpp"
#include "dkp/fft.hpp"
#include "dkp/pearcey.hpp"
#include "dkp/run.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace dkp;

namespace {

enum Exit : int { ok = 0, failure = 1, parse = 2, blowup = 3, not_found = 4, degenerate = 5 };

struct RunArgs {
  std::string config;
  std::string preset;
  std::vector<std::string> set;
  std::string out;
};

struct Common {
  int threads = 1;
};

void apply_threads(int threads) {
  if (threads < 1) threads = 1;
#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
  set_fft_threads(threads);
}

std::vector<RunConfig> resolve(const RunArgs& a) {
  std::vector<RunConfig> runs;
  if (!a.preset.empty()) runs = preset(a.preset);
  else runs.emplace_back();
  for (RunConfig& c : runs) {
    if (!a.config.empty()) c = load_config(a.config, c);
    for (const std::string& kv : a.set) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError(0, "--set expects key=value, got '" + kv + "'");
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(' '));
        s.erase(s.find_last_not_of(' ') + 1);
        return s;
      };
      apply_setting(c, trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
    }
  }
  if (!a.out.empty()) {
    if (runs.size() == 1) runs.front().output_dir = a.out;
    else
      for (RunConfig& c : runs) c.output_dir = (fs::path(a.out) / fs::path(c.output_dir).filename()).string();
  }
  return runs;
}

int run_command(const RunArgs& a, const Common& common, bool detect) {
  int code = ok;
  std::vector<RunConfig> runs = resolve(a);
  for (RunConfig& cfg : runs) {
    if (detect) cfg.detect = true;
    try {
      cfg.validate();
    } catch (const ContractError& e) {
      throw ParseError(0, std::string("invalid configuration: ") + e.what());
    }
  }
  for (const RunConfig& cfg : runs) {
    RunOptions opt;
    opt.stop_after_events = detect;
    opt.snapshot_dir = cfg.output_dir;
    std::cerr << "run " << cfg.name << ": " << to_string(cfg.model) << ' ' << cfg.nx << 'x' << cfg.ny
              << " nt=" << cfg.nt << " t_end=" << cfg.t_end << " -> " << cfg.output_dir << '\n';
    const RunOutcome o = run_experiment(cfg, opt);
    const auto files = write_outputs(o);
    write_manifest(cfg.output_dir, cfg.hash(), common.threads, files);
    for (const CriticalBundle& b : o.bundles)
      std::cout << cfg.name << " event t_c=" << b.t_c << " x_c=" << b.x_c << " y_c=" << b.y_c
                << " u_c=" << b.u_c << " xi_c=" << b.xi_c << '\n';
    if (o.blew_up) {
      std::cerr << "blow-up after t=" << o.t << '\n';
      code = blowup;
    } else if (detect && o.bundles.size() < cfg.max_events && code == ok) {
      std::cerr << cfg.name << ": found " << o.bundles.size() << " of " << cfg.max_events
                << " catastrophes before t_end\n";
      code = not_found;
    }
  }
  return code;
}

CriticalBundle load_bundle(const std::string& path) {
  if (!fs::exists(path)) throw std::runtime_error("missing bundle file " + path);
  return read_bundle(path);
}

void finish(const std::string& dir, const std::vector<std::string>& files, const Common& common,
            const std::string& tag) {
  write_manifest(dir, fnv1a_hex(tag), common.threads, files);
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dkp: dispersionless KP simulations and catastrophe analysis"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "OpenMP and FFTW threads")->default_val(1);

  RunArgs ev, det;
  auto add_run = [&](CLI::App* sub, RunArgs& a) {
    sub->add_option("-c,--config", a.config, "config file (key = value)");
    sub->add_option("-p,--preset", a.preset, "named preset")
        ->check(CLI::IsMember(preset_names()));
    sub->add_option("-s,--set", a.set, "override a config key (key=value), repeatable");
    sub->add_option("-o,--out", a.out, "output directory");
  };
  auto* cmd_evolve = app.add_subcommand("evolve", "integrate a model and write snapshots and diagnostics");
  add_run(cmd_evolve, ev);
  auto* cmd_detect = app.add_subcommand("detect", "integrate with catastrophe monitoring, write bundles");
  add_run(cmd_detect, det);

  std::string bundle_path, out_dir = "out";
  std::vector<double> t_bars{0.005, 0.01, 0.02};
  std::size_t samples = kLipSamples;
  auto* cmd_lip = app.add_subcommand("lip", "lip curves in physical and similarity frames");
  cmd_lip->add_option("-b,--bundle", bundle_path)->required();
  cmd_lip->add_option("-t,--t-bar", t_bars, "times after t_c")->delimiter(',');
  cmd_lip->add_option("-n,--samples", samples);
  cmd_lip->add_option("-o,--out", out_dir);

  double y_bar = 0.0, t_bar = 0.01, x_lo = -0.2, x_hi = 0.2;
  std::size_t n = 401;
  auto* cmd_scurve = app.add_subcommand("scurve", "local multivalued profile along a row");
  cmd_scurve->add_option("-b,--bundle", bundle_path)->required();
  cmd_scurve->add_option("-y,--y-bar", y_bar);
  cmd_scurve->add_option("-t,--t-bar", t_bar);
  cmd_scurve->add_option("--x-min", x_lo);
  cmd_scurve->add_option("--x-max", x_hi);
  cmd_scurve->add_option("-n,--points", n);
  cmd_scurve->add_option("-o,--out", out_dir);

  double y_lo = -0.5, y_hi = 0.5;
  auto* cmd_front = app.add_subcommand("front", "shock front x(y) after breaking");
  cmd_front->add_option("-b,--bundle", bundle_path)->required();
  cmd_front->add_option("-t,--t-bar", t_bars)->delimiter(',');
  cmd_front->add_option("--y-min", y_lo);
  cmd_front->add_option("--y-max", y_hi);
  cmd_front->add_option("-n,--points", n);
  cmd_front->add_option("-o,--out", out_dir);

  double a_lo = -8.0, a_hi = 8.0;
  std::vector<double> bs{-4.0, 0.0, 4.0};
  std::size_t na = 321;
  auto* cmd_pearcey = app.add_subcommand("pearcey-table", "tabulate U(a, b)");
  cmd_pearcey->add_option("--a-min", a_lo);
  cmd_pearcey->add_option("--a-max", a_hi);
  cmd_pearcey->add_option("--na", na);
  cmd_pearcey->add_option("--b", bs)->delimiter(',');
  cmd_pearcey->add_option("-o,--out", out_dir);

  std::string snapshot_path;
  double window = 0.5;
  std::optional<double> eps_override, c_override;
  auto* cmd_compare = app.add_subcommand("compare", "overlay a snapshot row with the local asymptotics");
  cmd_compare->add_option("--snapshot", snapshot_path)->required();
  cmd_compare->add_option("-b,--bundle", bundle_path)->required();
  cmd_compare->add_option("-y,--y-bar", y_bar);
  cmd_compare->add_option("-w,--window", window, "half width in x around the front");
  cmd_compare->add_option("--epsilon", eps_override);
  cmd_compare->add_option("--c", c_override);
  cmd_compare->add_option("-o,--out", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : parse;
  }

  try {
    apply_threads(common.threads);
    if (*cmd_evolve) return run_command(ev, common, false);
    if (*cmd_detect) return run_command(det, common, true);

    fs::create_directories(out_dir);
    auto at = [&](const std::string& f) { return (fs::path(out_dir) / f).string(); };
    const double nan = std::numeric_limits<double>::quiet_NaN();

    if (*cmd_lip) {
      const CriticalBundle b = load_bundle(bundle_path);
      std::vector<LipCurve> phys;
      for (double tb : t_bars) phys.push_back(lip_physical(b, tb, samples));
      write_curve_csv(at("lip_physical.csv"), phys, "x_bar", "y_bar");
      write_curve_csv(at("lip_similarity.csv"), {lip_similarity(b, samples)}, "X1", "Y1");
      std::vector<std::vector<double>> rows;
      for (double Y1 : linspace(-cusp_tip(b), cusp_tip(b), 201)) rows.push_back({Y1, lip_cusp(b, Y1)});
      write_csv(at("lip_cusp.csv"), {"Y1", "half_width_X1"}, rows);
      finish(out_dir, {"lip_physical.csv", "lip_similarity.csv", "lip_cusp.csv"}, common, format_bundle(b));
      return ok;
    }
    if (*cmd_scurve) {
      const CriticalBundle b = load_bundle(bundle_path);
      std::vector<std::vector<double>> rows;
      for (double xb : linspace(x_lo, x_hi, n)) {
        const LocalXT xt = map_XT(xb, y_bar, t_bar, b);
        auto u = local_profile(xb, y_bar, t_bar, b);
        u.resize(3, nan);
        rows.push_back({xb, xt.X, xt.T, u[0], u[1], u[2]});
      }
      char pre[96];
      std::snprintf(pre, sizeof pre, "# y_bar=%.17g t_bar=%.17g", y_bar, t_bar);
      write_csv(at("scurve.csv"), {"x_bar", "X", "T", "u1", "u2", "u3"}, rows, pre);
      finish(out_dir, {"scurve.csv"}, common, format_bundle(b));
      return ok;
    }
    if (*cmd_front) {
      const CriticalBundle b = load_bundle(bundle_path);
      std::vector<std::vector<double>> rows;
      for (double tb : t_bars)
        for (double yb : linspace(y_lo, y_hi, n)) rows.push_back({tb, yb, shock_front(b, yb, tb)});
      write_csv(at("front.csv"), {"t_bar", "y_bar", "x_bar"}, rows);
      finish(out_dir, {"front.csv"}, common, format_bundle(b));
      return ok;
    }
    if (*cmd_pearcey) {
      std::vector<std::vector<double>> rows;
      for (double b : bs)
        for (double a : linspace(a_lo, a_hi, na)) rows.push_back({b, a, pearcey(a, b)});
      write_csv(at("pearcey.csv"), {"b", "a", "U"}, rows);
      finish(out_dir, {"pearcey.csv"}, common, "pearcey");
      return ok;
    }
    if (*cmd_compare) {
      const CriticalBundle b = load_bundle(bundle_path);
      if (!fs::exists(snapshot_path)) throw std::runtime_error("missing snapshot " + snapshot_path);
      SnapshotMeta meta;
      const RealField f = snapshot_read(snapshot_path, meta);
      const double tb = meta.t - b.t_c;
      const auto& g = *f.grid();
      const double y = b.y_c + y_bar;
      const std::size_t iy = static_cast<std::size_t>(
          std::clamp(std::lround((y + g.half_width_y()) / g.dy()), 0L, static_cast<long>(g.ny()) - 1));
      std::vector<std::vector<double>> rows;
      std::string pre = "# t=" + std::to_string(meta.t) + " t_bar=" + std::to_string(tb) +
                        " y=" + std::to_string(g.y(iy)) + " kind=" + meta.kind;
      if (meta.kind == "dissipative") {
        const double eps = eps_override.value_or(meta.epsilon), c = c_override.value_or(meta.c);
        const double xf = b.x_c + shock_front(b, g.y(iy) - b.y_c, std::max(tb, 0.0));
        for (std::size_t ix = 0; ix < g.nx(); ++ix) {
          const double xb = g.x(ix) - b.x_c;
          if (std::abs(g.x(ix) - xf) > window) continue;
          rows.push_back({g.x(ix), f(iy, ix), dissipative_local(xb, g.y(iy) - b.y_c, tb, b, eps, c)});
        }
        write_csv(at("compare.csv"), {"x", "u_numeric", "u_pearcey"}, rows, pre);
        const auto xs = inflection_shock(f, iy);
        std::vector<std::vector<double>> srow{{xs.value_or(nan), xf, dissipative_sigma(b, eps, c)}};
        write_csv(at("shock.csv"), {"x_inflection", "x_front", "sigma"}, srow);
        finish(out_dir, {"compare.csv", "shock.csv"}, common, format_bundle(b) + meta.config_hash);
        return ok;
      }
      for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const double x = g.x(ix) + meta.t * f(iy, ix);
        if (std::abs(x - b.x_c) > window) continue;
        auto u = local_profile(x - b.x_c, g.y(iy) - b.y_c, tb, b);
        u.resize(3, nan);
        rows.push_back({g.x(ix), x, f(iy, ix), u[0], u[1], u[2]});
      }
      write_csv(at("compare.csv"), {"xi", "x", "u_numeric", "u1", "u2", "u3"}, rows, pre);
      finish(out_dir, {"compare.csv"}, common, format_bundle(b) + meta.config_hash);
      return ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse;
  } catch (const BlowUpError& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return blowup;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return degenerate;
  } catch (const std::exception& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << '\n';
    return what.rfind("missing", 0) == 0 ? not_found : failure;
  }
  return ok;
}
