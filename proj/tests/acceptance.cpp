// Acceptance checks for the solver, detector, asymptotics and oracles.
// Prints indented sub-checks, then one PASS/FAIL line per criterion.

#include "dkp/asymptotics.hpp"
#include "dkp/characteristics.hpp"
#include "dkp/config.hpp"
#include "dkp/diagnostics.hpp"
#include "dkp/errors.hpp"
#include "dkp/evolve.hpp"
#include "dkp/fft.hpp"
#include "dkp/pearcey.hpp"
#include "dkp/run.hpp"
#include "dkp/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dkp;
using std::numbers::pi;

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {
    std::cout << "\n== " << title_ << '\n' << std::flush;
  }
  bool check(bool ok, const std::string& text) {
    std::cout << "    " << (ok ? "ok   " : "FAIL ") << text << '\n' << std::flush;
    ++count_;
    if (!ok) ++failed_;
    return ok;
  }
  void info(const std::string& text) { std::cout << "    info " << text << '\n' << std::flush; }
  bool near(const std::string& name, double value, double ref, double tol) {
    return check(std::abs(value - ref) <= tol,
                 fmt("%s = %.6g (ref %.6g +- %.3g, off %.3g)", name.c_str(), value, ref, tol,
                     std::abs(value - ref)));
  }
  bool below(const std::string& name, double value, double bound) {
    return check(value <= bound, fmt("%s = %.3e (<= %.1e)", name.c_str(), value, bound));
  }
  void error(const std::string& what) { check(false, "error: " + what); }
  bool passed() const { return count_ > 0 && failed_ == 0; }
  const std::string& title() const { return title_; }

 private:
  std::string title_;
  int count_ = 0, failed_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct TimedRun {
  RunOutcome outcome;
  double seconds = 0.0;
};

TimedRun timed_run(const RunConfig& cfg, bool stop_after_events) {
  std::cout << "    run " << cfg.name << ": " << to_string(cfg.model) << ' ' << cfg.nx << 'x' << cfg.ny
            << " nt=" << cfg.nt << " t_end=" << cfg.t_end << '\n'
            << std::flush;
  RunOptions opt;
  opt.stop_after_events = stop_after_events;
  const auto t0 = std::chrono::steady_clock::now();
  TimedRun r{run_experiment(cfg, opt), 0.0};
  r.seconds = seconds_since(t0);
  std::cout << "    run " << cfg.name << " finished in " << fmt("%.0f", r.seconds) << " s at t = " << r.outcome.t
            << ", " << r.outcome.events.size() << " event(s)\n"
            << std::flush;
  return r;
}

// Runs shared between criteria, computed on first use.
class Runs {
 public:
  const TimedRun& first() {
    if (!first_) first_ = timed_run(preset("table1_first").front(), true);
    return *first_;
  }
  const TimedRun& full() {
    if (!full_) full_ = timed_run(preset("table1").front(), false);
    return *full_;
  }
  // reduced resolution; the shock width 2 epsilon / [u] is still resolved
  static constexpr std::size_t kDissipativeNx = 4096, kDissipativeNy = 512;
  const TimedRun& dissipative() {
    if (!diss_) {
      RunConfig c = preset("dissipative_sech").front();
      c.nx = kDissipativeNx;
      c.ny = kDissipativeNy;
      c.capture_times = {first_bundle().t_c};
      diss_ = timed_run(c, false);
    }
    return *diss_;
  }
  const CriticalBundle& first_bundle() {
    const auto& o = first().outcome;
    if (o.bundles.empty()) throw Error("no catastrophe found in the first sym_sech run");
    return o.bundles.front();
  }

 private:
  std::optional<TimedRun> first_, full_, diss_;
};

struct Ref {
  const char* name;
  double value, tol;
};

double point_value(const CriticalPoint& p, const std::string& name) {
  if (name == "t_c") return p.t;
  if (name == "x_c") return p.x;
  if (name == "y_c") return p.y;
  if (name == "u_c") return p.u;
  return p.xi;
}

void compare_event(Criterion& c, const std::string& label, const RunOutcome& o, std::size_t k,
                   const std::vector<Ref>& refs, double scale = 1.0) {
  if (!c.check(o.events.size() > k, fmt("%s: event %zu found (%zu events)", label.c_str(), k + 1, o.events.size())))
    return;
  const CriticalPoint& p = o.events[k].point;
  for (const Ref& r : refs) c.near(label + " " + r.name, point_value(p, r.name), r.value, scale * r.tol);
}

void table1_first(Runs& runs, Criterion& c) {
  const TimedRun& r = runs.first();
  compare_event(c, "sym_sech 512^2", r.outcome, 0,
                {{"t_c", 0.222, 0.002}, {"x_c", 1.79, 0.01}, {"y_c", 0.0, 1e-3}, {"u_c", 2.543, 0.01},
                 {"xi_c", 1.227, 0.01}});
  c.info(fmt("runtime %.0f s", r.seconds));
}

void table1_second(Runs& runs, Criterion& c) {
  const std::vector<Ref> refs = {
      {"t_c", 0.300, 0.003}, {"x_c", -2.033, 0.02}, {"u_c", -2.48, 0.02}, {"xi_c", -1.289, 0.02}};
  const TimedRun& full = runs.full();
  compare_event(c, "sym_sech 512x2048", full.outcome, 1, refs);
  if (full.outcome.events.size() > 1) c.info(fmt("second event y_c = %.4f", full.outcome.events[1].point.y));
  c.check(full.seconds <= 3600.0, fmt("full run time %.0f s (<= 3600)", full.seconds));

  const TimedRun smoke = timed_run(preset("table1_smoke").front(), true);
  compare_event(c, "smoke 256x512", smoke.outcome, 1, refs, 5.0);
  c.check(smoke.seconds <= 300.0, fmt("smoke run time %.0f s (<= 300)", smoke.seconds));
}

void table2(Runs&, Criterion& c) {
  auto tol = [](double v) { return std::max(0.02 * std::abs(v), 0.005); };
  auto refs = [&](double t, double x, double y, double u, double xi) {
    return std::vector<Ref>{{"t_c", t, tol(t)}, {"x_c", x, tol(x)}, {"y_c", y, tol(y)}, {"u_c", u, tol(u)},
                            {"xi_c", xi, tol(xi)}};
  };
  const TimedRun radial = timed_run(preset("table2_radial").front(), true);
  compare_event(c, "radial first", radial.outcome, 0, refs(0.0832, -1.210, -0.368, -4.958, -0.798));
  compare_event(c, "radial second", radial.outcome, 1, refs(0.1070, 2.004, -0.368, 4.4066, 1.534));
  const TimedRun skew = timed_run(preset("table2_skew").front(), true);
  compare_event(c, "skew first", skew.outcome, 0, refs(0.086, 0.088, -0.245, -1.477, 0.215));
}

double max_abs_delta(const std::vector<DiagnosticsRecord>& recs, double t_max) {
  double m = 0.0;
  for (const auto& r : recs)
    if (r.t <= t_max + 1e-12) m = std::max(m, std::abs(r.delta));
  return m;
}

void conservation(Runs& runs, Criterion& c) {
  const auto& full = runs.full().outcome;
  c.check(std::abs(full.t - 0.32) < 1e-12 && !full.blew_up, fmt("sym_sech run reached t = %.4f", full.t));
  c.below("max |delta|, sym_sech 512x2048, t <= 0.32", max_abs_delta(full.diagnostics, 0.32), 1e-10);
  c.below("max |delta|, sym_sech 512^2, t <= t_c", max_abs_delta(runs.first().outcome.diagnostics, 0.32), 1e-10);

  const auto& d = runs.dissipative().outcome;
  c.check(!d.blew_up && std::abs(d.t - 0.32) < 1e-12, fmt("dissipative run reached t = %.4f", d.t));
  const double loss = l2_deviation(d.final_state, d.initial);
  c.near("dissipative eps = 0.01 loss of M at t = 0.32", loss, 0.02, 0.01);
  c.info(fmt("dissipative grid %zux%zu, outer-shell max coefficient %.2e", Runs::kDissipativeNx,
             Runs::kDissipativeNy, spectral_tail(d.final_state)));
}

void spectral_health(Runs& runs, Criterion& c) {
  const auto& full = runs.full().outcome;
  c.check(std::abs(full.t - 0.32) < 1e-12, fmt("state at t = %.4f", full.t));
  c.below("outer-shell max coefficient at t = 0.32", spectral_tail(full.final_state), 1e-8);
}

// Delta = 1 + t F_xi of the exact family on a periodic xi grid.
double family_min_delta(const ExactFamily& fam, double t, const GridPtr& g) {
  RealField f(g);
  for (std::size_t iy = 0; iy < g->ny(); ++iy)
    for (std::size_t ix = 0; ix < g->nx(); ++ix) f(iy, ix) = fam.F(g->x(ix), g->y(iy), t);
  const RealField d = delta_field(forward(f), t);
  return *std::min_element(d.values().begin(), d.values().end());
}

double bisect(const std::function<bool(double)>& broken, double lo, double hi, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (broken(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

void exact_family(Runs&, Criterion& c) {
  const ExactFamily fam([](double s) { return -std::sin(s); }, [](double s) { return -std::cos(s); });
  auto g = make_grid(1024, 8, pi, 1.0);
  const double t_u = bisect([&](double t) { return family_min_delta(fam, t, g) <= 0.0; }, 0.1, 0.5, 1e-6);
  c.near("u-breaking time from min Delta", t_u, 0.25, 0.005);

  auto folded = [&](double t) {
    // xi(s) = s + sqrt(t) B(s) + y^2/4t stops being monotone
    const std::size_t n = 20001;
    double prev = -pi + std::sqrt(t) * std::sin(pi);
    for (std::size_t i = 1; i < n; ++i) {
      const double s = -pi + 2 * pi * static_cast<double>(i) / static_cast<double>(n - 1);
      const double xi = s - std::sqrt(t) * std::sin(s);
      if (xi <= prev) return true;
      prev = xi;
    }
    return false;
  };
  const double t_f = bisect(folded, 0.3, 2.0, 1e-6);
  c.near("F-breaking time from the folding of xi(s)", t_f, 1.0, 0.02);
  c.near("ratio of breaking times", t_f / t_u, 4.0, 0.08);

  // constraints at the critical line s = 0 (all y break together)
  for (double y : {0.0, 0.5, -0.8}) {
    const double t = 0.25, xi = y * y / (4 * t), h = 1e-4;
    auto F = [&](double a, double b, double tt) { return fam.F(a, b, tt); };
    auto d_t = [&](auto fn) { return (fn(t + h) - fn(t - h)) / (2 * h); };
    CriticalBundle b;
    b.t_c = t;
    b.y_c = y;
    b.xi_c = xi;
    b.F = F(xi, y, t);
    b.F_xi = (F(xi + h, y, t) - F(xi - h, y, t)) / (2 * h);
    b.F_y = (F(xi, y + h, t) - F(xi, y - h, t)) / (2 * h);
    b.F_yy = (F(xi, y + h, t) - 2 * b.F + F(xi, y - h, t)) / (h * h);
    b.F_t = d_t([&](double tt) { return F(xi, y, tt); });
    b.F_ty = d_t([&](double tt) { return (F(xi, y + h, tt) - F(xi, y - h, tt)) / (2 * h); });
    b.F_xit = d_t([&](double tt) { return (F(xi + h, y, tt) - F(xi - h, y, tt)) / (2 * h); });
    const ConstraintResiduals r = verify_constraints(b);
    c.below(fmt("constraint residual at y = %.1f", y), r.worst(), 1e-3);
  }
}

LipCurve nearest_component(const std::vector<LipCurve>& curves, double x, double y) {
  LipCurve best;
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& cv : curves) {
    double cx = 0.0, cy = 0.0;
    for (const auto& p : cv.samples) {
      cx += p.a;
      cy += p.b;
    }
    cx /= static_cast<double>(cv.samples.size());
    cy /= static_cast<double>(cv.samples.size());
    const double d = std::hypot(cx - x, cy - y);
    if (d < dist) {
      dist = d;
      best = cv;
    }
  }
  return best;
}

void similarity_collapse(Runs& runs, Criterion& c) {
  const auto& o = runs.first().outcome;
  const CriticalBundle& b = runs.first_bundle();
  const auto& ev = o.events.front();
  ModelBinding model(o.config.model, o.grid, 0.0, 0.0, {o.config.project_mean, o.config.dealias});
  const double dt = o.config.t_end / static_cast<double>(o.config.nt);
  const LipCurve reference = lip_similarity(b, 720);
  const double width = reference.width();
  c.info(fmt("similarity lip width %.4g, height %.4g", width, reference.height()));

  std::vector<double> dist;
  for (double tb : {0.02, 0.01, 0.005}) {
    const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(tb / dt)));
    const SpectralField f = advance_to(model, ev.state, b.t_c, b.t_c + tb, n, o.config.krasny);
    Patch patch{b.xi_c - 0.8, b.xi_c + 0.8, b.y_c - 0.8, b.y_c + 0.8, 512, 512};
    const auto curves = multivalued_boundary(f, b.t_c + tb, patch);
    if (!c.check(!curves.empty(), fmt("t_bar = %.3f: Delta = 0 contour found", tb))) return;
    const LipCurve lip = to_similarity(nearest_component(curves, b.x_c, b.y_c), tb, b);
    const double d = hausdorff_distance(lip, reference);
    dist.push_back(d);
    c.check(d <= 0.15 * width, fmt("t_bar = %.3f: Hausdorff %.4g = %.3f lip widths (<= 0.15)", tb, d, d / width));
  }
  c.check(dist[2] < dist[1] && dist[1] < dist[0],
          fmt("distance decreases with t_bar: %.4g, %.4g, %.4g", dist[0], dist[1], dist[2]));
}

void pearcey_suite(Runs&, Criterion& c) {
  double zero = 0.0, odd = 0.0;
  for (double b : {-6.0, -2.0, 0.0, 1.0, 4.0, 8.0}) {
    zero = std::max(zero, std::abs(pearcey(0.0, b)));
    for (double a : {0.25, 1.0, 3.0, 7.5, 20.0}) odd = std::max(odd, std::abs(pearcey(a, b) + pearcey(-a, b)));
  }
  c.below("max |U(0, b)|", zero, 1e-12);
  c.below("max |U(a, b) + U(-a, b)|", odd, 1e-12);

  double ode = 0.0, burgers = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double a = -2.0 + i, b = -2.0 + j;
      ode = std::max(ode, std::abs(pearcey_ode_residual(a, b, 1e-3)));
      burgers = std::max(burgers, std::abs(pearcey_burgers_residual(a, b, 1e-3)));
    }
  c.below("ODE residual on [-2, 2]^2", ode, 1e-4);
  c.below("Burgers residual on [-2, 2]^2", burgers, 1e-5);

  // error against the two-term asymptote, scaled by the claimed |a|^{5/3} decay
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, lo1 = lo, hi1 = 0.0;
  std::string row;
  for (double a : {10.0, 20.0, 50.0, 100.0, 200.0, 300.0}) {
    const double err = std::abs(pearcey(a, 1.0) - pearcey_asymptote(a, 1.0));
    const double s53 = err * std::pow(a, 5.0 / 3.0), s1 = err * a;
    lo = std::min(lo, s53);
    hi = std::max(hi, s53);
    lo1 = std::min(lo1, s1);
    hi1 = std::max(hi1, s1);
    row += fmt(" %.3g", s53);
  }
  c.check(hi / lo <= 3.0, fmt("err * a^(5/3) over a in [10, 300] varies by %.2f (<= 3):%s", hi / lo, row.c_str()));
  c.info(fmt("err * a over the same range varies by %.3f (from %.4f to %.4f)", hi1 / lo1, lo1, hi1));
}

void burgers_oracle(Runs&, Criterion& c) {
  const double nu = 0.1, t_end = 1.0;
  // y-constant data turns the dissipative model into Burgers with nu = epsilon
  auto g = make_grid(256, 8, 2 * pi, pi);
  auto v0 = [](double x) { return std::exp(-x * x); };
  RealField u0(g);
  for (std::size_t iy = 0; iy < g->ny(); ++iy)
    for (std::size_t ix = 0; ix < g->nx(); ++ix) u0(iy, ix) = v0(g->x(ix));
  ModelBinding model(ModelKind::dissipative, g, nu, 0.0);
  const RealField u = inverse(evolve(model, forward(u0), {0.0, t_end, 1000}).state);
  const auto problem = make_burgers(v0, nu);
  double worst = 0.0;
  for (std::size_t ix = 0; ix < g->nx(); ++ix) {
    const double ref = cole_hopf(problem, g->x(ix), t_end);
    for (std::size_t iy = 0; iy < g->ny(); ++iy) worst = std::max(worst, std::abs(u(iy, ix) - ref));
  }
  c.below("sup |ETD - Cole-Hopf|, 256 modes, nu = 0.1, t = 1", worst, 1e-6);

  const auto shock = make_burgers([nu](double x) { return -std::tanh(x / (2 * nu)); }, nu);
  double drift = 0.0;
  for (double t = 0.05; t <= 1.0 + 1e-12; t += 0.05)
    for (double x = -1.5; x <= 1.5; x += 0.025)
      drift = std::max(drift, std::abs(cole_hopf(shock, x, t) + std::tanh(x / (2 * nu))));
  c.below("stationary tanh shock drift over t in (0, 1]", drift, 1e-8);
}

// Shock of the inviscid solution on row y: the x whose vertical chord cuts
// equal areas from the folded profile x = xi + t F, u = F.
std::optional<double> equal_area_shock(const SpectralField& f, double t, double y, double xi0, double xi1) {
  const std::size_t n = 16384;
  std::vector<double> xis(n);
  for (std::size_t i = 0; i < n; ++i) xis[i] = xi0 + (xi1 - xi0) * static_cast<double>(i) / static_cast<double>(n - 1);
  const std::vector<double> F = evaluate_tensor(f, xis, {y});
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = xis[i] + t * F[i];
  std::size_t first = n, last = n;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (x[i + 1] < x[i]) {
      if (first == n) first = i;
      last = i + 1;
    }
  if (first == n) return std::nullopt;
  auto chord = [&](double xs) {
    std::size_t a = n, b = n;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if ((x[i] - xs) * (x[i + 1] - xs) <= 0.0) {
        if (a == n) a = i;
        b = i + 1;
      }
    double area = 0.0;
    for (std::size_t i = a; i < b; ++i) area += 0.5 * (x[i] + x[i + 1] - 2 * xs) * (F[i + 1] - F[i]);
    return area;
  };
  double lo = x[last] + 1e-9, hi = x[first] - 1e-9;
  const double glo = chord(lo);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    ((chord(mid) > 0) == (glo > 0) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void viscous_shock(Runs& runs, Criterion& c) {
  const CriticalBundle& b = runs.first_bundle();
  const auto& d = runs.dissipative().outcome;
  const double eps = d.config.epsilon, cc = d.config.c;

  const double tb = d.t - b.t_c;
  const double front = b.x_c + shock_front(b, 0.0, tb);
  const double width = lip_physical(b, tb, 720).width();
  const RealField u = inverse(d.final_state);
  // the second catastrophe sits at negative x; look on the side of the first one
  const auto xs = inflection_shock_at(u, b.y_c, 0.0, u.grid()->half_width_x());
  if (c.check(xs.has_value(), fmt("steep front found on the row y = %.3g at t = %.3f", b.y_c, d.t)))
    c.check(std::abs(*xs - front) <= 0.1 * width,
            fmt("inflection x = %.5f, front x = %.5f, off %.3g = %.3f lip widths (<= 0.1)", *xs, front,
                std::abs(*xs - front), std::abs(*xs - front) / width));
  const auto& inviscid = runs.full().outcome;
  if (const auto xe = equal_area_shock(inviscid.final_state, inviscid.t, b.y_c, b.xi_c - 1.2, b.xi_c + 1.2))
    c.info(fmt("equal-area shock of the inviscid solution at t = %.2f: x = %.5f (%.3f lip widths from the front)",
               inviscid.t, *xe, std::abs(*xe - front) / width));

  if (!c.check(!d.captures.empty(), fmt("dissipative state captured at t_c = %.5f", b.t_c))) return;
  const RealField uc = inverse(d.captures.front().state);
  const auto& g = *uc.grid();
  const double sigma = dissipative_sigma(b, eps, cc);
  const double jump = std::pow(sigma, 0.25) * std::abs(pearcey(-3.0, 0.0) - pearcey(3.0, 0.0));
  const double half = 3.0 * b.k * std::pow(sigma, 0.75);
  const std::size_t iy = static_cast<std::size_t>(std::lround((b.y_c + g.half_width_y()) / g.dy())) % g.ny();
  double worst = 0.0;
  std::size_t n = 0;
  for (std::size_t ix = 0; ix < g.nx(); ++ix) {
    const double xb = g.x(ix) - b.x_c;
    if (std::abs(xb) > half) continue;
    ++n;
    worst = std::max(worst, std::abs(uc(iy, ix) - dissipative_local(xb, g.y(iy) - b.y_c, 0.0, b, eps, cc)));
  }
  c.info(fmt("sigma = %.4g, window |x - x_c| <= %.4g (%zu samples), jump amplitude %.4g", sigma, half, n, jump));
  c.check(n >= 3, fmt("%zu samples in the Pearcey window", n));
  c.check(worst <= 0.1 * jump,
          fmt("Pearcey overlay at t_c: max misfit %.4g = %.3f jump amplitudes (<= 0.1)", worst, worst / jump));
}

void no_blow_up(Runs& runs, Criterion& c) {
  const auto& o = runs.full().outcome;
  if (!c.check(!o.events.empty() && !o.diagnostics.empty(), "events and diagnostics available")) return;
  const DiagnosticsRecord at_tc = DiagnosticsSeries::measure(o.events.front().state, o.events.front().point.t, 1.0, true);
  const DiagnosticsRecord end = DiagnosticsSeries::measure(o.final_state, o.t, 1.0, true);
  c.check(std::abs(o.t - 0.32) < 1e-12, fmt("final time %.4f", o.t));
  c.check(end.max_f <= 1.1 * at_tc.max_f, fmt("max|F|: %.4f at 0.32, %.4f at t_c", end.max_f, at_tc.max_f));
  c.check(end.max_fx <= 1.1 * at_tc.max_fx, fmt("max|F_xi|: %.4f at 0.32, %.4f at t_c", end.max_fx, at_tc.max_fx));
  c.check(end.max_fy <= 1.1 * at_tc.max_fy, fmt("max|F_y|: %.4f at 0.32, %.4f at t_c", end.max_fy, at_tc.max_fy));
}

struct Entry {
  const char* key;
  const char* title;
  void (*fn)(Runs&, Criterion&);
};

const Entry kCriteria[] = {
    {"table1_first", "Table 1 first breaking (sym_sech, 512^2, Nt = 1000)", table1_first},
    {"table1_second", "Table 1 second breaking (512x2048, Nt = 5000) and 256x512 smoke", table1_second},
    {"table2", "Table 2 critical values (radial and skew profiles)", table2},
    {"conservation", "Conservation of M and dissipative loss", conservation},
    {"spectral", "Spectral health at t = 0.32", spectral_health},
    {"exact", "Exact-family oracle", exact_family},
    {"collapse", "Similarity collapse of the lip", similarity_collapse},
    {"pearcey", "Pearcey suite", pearcey_suite},
    {"burgers", "Burgers cross-oracle", burgers_oracle},
    {"shock", "Viscous-shock placement and Pearcey overlay", viscous_shock},
    {"noblowup", "No blow-up after the catastrophes", no_blow_up},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<std::string> only;
  int threads = 1;
  std::vector<std::string> keys;
  for (const auto& e : kCriteria) keys.push_back(e.key);
  app.add_option("--only", only, "criteria to run")->delimiter(',')->check(CLI::IsMember(keys));
  app.add_option("--threads", threads);
  CLI11_PARSE(app, argc, argv);
#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
  set_fft_threads(threads);

  const std::set<std::string> selected(only.begin(), only.end());
  Runs runs;
  std::vector<std::pair<std::string, bool>> summary;
  for (const auto& e : kCriteria) {
    if (!selected.empty() && !selected.count(e.key)) continue;
    Criterion c(e.title);
    try {
      e.fn(runs, c);
    } catch (const std::exception& ex) {
      c.error(ex.what());
    }
    summary.emplace_back(c.title(), c.passed());
  }

  std::cout << "\n";
  int failed = 0;
  for (const auto& [title, ok] : summary) {
    std::cout << (ok ? "PASS " : "FAIL ") << title << '\n';
    if (!ok) ++failed;
  }
  std::cout << summary.size() - failed << " of " << summary.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
