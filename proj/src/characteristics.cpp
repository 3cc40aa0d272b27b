#include "dkp/characteristics.hpp"

#include "dkp/errors.hpp"
#include "dkp/fft.hpp"
#include "dkp/kernels.hpp"
#include "dkp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace dkp {

RealField delta_field(const SpectralField& f, double t) {
  RealField fxi = physical_derivative(f, 1, 0);
  RealField d(f.grid());
  kernels::parallel::affine(d.values(), fxi.values(), 1.0, t);
  return d;
}

RealField delta_field(const RealField& f, double t) { return delta_field(forward(f), t); }

ParametricSurface reconstruct_u(const RealField& f, double t) {
  const auto& g = *f.grid();
  ParametricSurface s{f.grid(), t, RealField(f.grid()), f};
  for (std::size_t iy = 0; iy < g.ny(); ++iy)
    for (std::size_t ix = 0; ix < g.nx(); ++ix) s.x(iy, ix) = g.x(ix) + t * f(iy, ix);
  return s;
}

namespace {

std::vector<LipCurve> to_curves(const std::vector<ContourPolyline>& lines, double t) {
  std::vector<LipCurve> out;
  for (const auto& pl : lines) {
    LipCurve c;
    c.frame = Frame::physical;
    c.closed = pl.closed;
    c.samples.reserve(pl.vertices.size());
    for (const auto& v : pl.vertices) c.samples.push_back({v.a + t * v.aux, v.b});
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

}  // namespace

std::vector<LipCurve> multivalued_boundary(const SpectralField& f, double t) {
  const auto& g = *f.grid();
  const RealField d = delta_field(f, t);
  if (kernels::parallel::min_loc(d.values()).value >= 0.0) return {};
  const RealField fp = inverse(f);
  std::vector<double> dv(d.values().begin(), d.values().end());
  std::vector<double> fv(fp.values().begin(), fp.values().end());
  return to_curves(zero_contours(dv, fv, g.nx(), g.ny(), -g.half_width_x(), g.dx(),
                                 -g.half_width_y(), g.dy()),
                   t);
}

std::vector<LipCurve> multivalued_boundary(const SpectralField& f, double t, const Patch& p) {
  if (p.n_xi < 2 || p.n_y < 2 || !(p.xi1 > p.xi0) || !(p.y1 > p.y0))
    throw ContractError("invalid patch");
  const auto xs = linspace(p.xi0, p.xi1, p.n_xi);
  const auto ys = linspace(p.y0, p.y1, p.n_y);
  std::vector<double> d = evaluate_tensor(f, xs, ys, 1, 0);
  for (double& v : d) v = 1.0 + t * v;
  const std::vector<double> fv = evaluate_tensor(f, xs, ys, 0, 0);
  const double dxi = (p.xi1 - p.xi0) / static_cast<double>(p.n_xi - 1);
  const double dy = (p.y1 - p.y0) / static_cast<double>(p.n_y - 1);
  return to_curves(zero_contours(d, fv, p.n_xi, p.n_y, p.xi0, dxi, p.y0, dy), t);
}

DeltaMinimum polish_delta_minimum(const SpectralField& f, double t, double xi0, double y0) {
  const auto& g = *f.grid();
  const PointEvaluator pe(f);
  DeltaMinimum m;
  m.xi = xi0;
  m.y = y0;
  for (int it = 0; it < 40; ++it) {
    const DerivativeTable d = pe.at(m.xi, m.y);
    const double gx = d(2, 0), gy = d(1, 1);
    const double hxx = d(3, 0), hxy = d(2, 1), hyy = d(1, 2);
    const double det = hxx * hyy - hxy * hxy;
    double sx = 0.0, sy = 0.0;
    m.hessian_ok = hxx > 0.0 && det > 0.0;
    if (m.hessian_ok) {
      sx = -(hyy * gx - hxy * gy) / det;
      sy = -(-hxy * gx + hxx * gy) / det;
    } else if (hxx > 0.0) {
      sx = -gx / hxx;
    } else {
      sx = -std::copysign(0.5 * g.dx(), gx);
    }
    // trust region of one cell
    const double r = std::hypot(sx / g.dx(), sy / g.dy());
    if (r > 1.0) {
      sx /= r;
      sy /= r;
    }
    m.xi += sx;
    m.y += sy;
    if (std::abs(sx) < 1e-14 * (1.0 + std::abs(m.xi)) && std::abs(sy) < 1e-14 * (1.0 + std::abs(m.y)))
      break;
  }
  const DerivativeTable d = pe.at(m.xi, m.y);
  m.delta = 1.0 + t * d(1, 0);
  m.grad_norm = std::abs(t) * std::hypot(d(2, 0), d(1, 1));
  return m;
}

void complete_bundle(CriticalBundle& b) {
  const double tc = b.t_c;
  b.alpha = tc * b.F_xixixi;
  b.beta = b.F_xixiy / b.F_xixixi;
  b.gamma = b.F_xiyy / b.F_xixixi;
  b.delta1 = b.F_y - 2.0 * tc * tc * b.F_yy * b.F_y;
  b.delta2 = tc * b.F_yyy;
  b.k = tc * tc * tc * tc * b.F_xixixi / 6.0;
  b.beta_bar = b.F_y - b.F_xi * b.F_xixiy / b.F_xixixi;
  const double tfy = tc * b.F_y;
  b.sigma = b.epsilon * 6.0 * (1.0 + b.c * tfy * tfy) / (b.F_xixixi * tc * tc * tc * tc);
}

CriticalBundle critical_bundle(const SpectralField& f, const CriticalPoint& p, ModelBinding& model,
                               double epsilon, double c) {
  if (model.kind() != ModelKind::transformed)
    throw ContractError("critical_bundle needs the transformed model for F_t");
  const DerivativeTable d = PointEvaluator(f).at(p.xi, p.y);
  const SpectralField r = model.rhs(f, p.t);
  const DerivativeTable dr = PointEvaluator(r).at(p.xi, p.y);
  CriticalBundle b;
  b.t_c = p.t;
  b.xi_c = p.xi;
  b.y_c = p.y;
  b.F = d(0, 0);
  b.u_c = b.F;
  b.x_c = p.xi + p.t * b.F;
  b.F_xi = d(1, 0);
  b.F_xixi = d(2, 0);
  b.F_xixixi = d(3, 0);
  b.F_xixiy = d(2, 1);
  b.F_xiyy = d(1, 2);
  b.F_xiy = d(1, 1);
  b.F_y = d(0, 1);
  b.F_yy = d(0, 2);
  b.F_yyy = d(0, 3);
  b.F_t = dr(0, 0);
  b.F_ty = dr(0, 1);
  b.F_xit = dr(1, 0);
  b.epsilon = epsilon;
  b.c = c;
  if (std::abs(b.F_xixixi) < kDegenerateCubic)
    throw DegeneracyError("F_xixixi vanishes at the critical point");
  complete_bundle(b);
  return b;
}

double ConstraintResiduals::worst() const {
  return std::max({relative(0), relative(1), relative(2)});
}

ConstraintResiduals verify_constraints(const CriticalBundle& b) {
  ConstraintResiduals r;
  const double tc = b.t_c;
  const double ref = std::max(std::abs(b.F) / tc, std::numeric_limits<double>::min());
  r.residual[0] = b.F_t + tc * b.F_y * b.F_y;
  r.scale[0] = std::max({std::abs(b.F_t), tc * b.F_y * b.F_y, ref});
  r.residual[1] = b.F_xit;
  r.scale[1] = std::max({std::abs(b.F_xit), std::abs(b.F_xi) / tc, ref});
  r.residual[2] = b.F_ty + 2.0 * tc * b.F_yy * b.F_y;
  r.scale[2] = std::max({std::abs(b.F_ty), std::abs(2.0 * tc * b.F_yy * b.F_y), ref});
  return r;
}

namespace {

struct Field {
  const char* name;
  double CriticalBundle::*ptr;
};

constexpr Field kFields[] = {
    {"t_c", &CriticalBundle::t_c},         {"x_c", &CriticalBundle::x_c},
    {"y_c", &CriticalBundle::y_c},         {"u_c", &CriticalBundle::u_c},
    {"xi_c", &CriticalBundle::xi_c},       {"F", &CriticalBundle::F},
    {"F_xi", &CriticalBundle::F_xi},       {"F_xixi", &CriticalBundle::F_xixi},
    {"F_xixixi", &CriticalBundle::F_xixixi}, {"F_xixiy", &CriticalBundle::F_xixiy},
    {"F_xiyy", &CriticalBundle::F_xiyy},   {"F_xiy", &CriticalBundle::F_xiy},
    {"F_y", &CriticalBundle::F_y},         {"F_yy", &CriticalBundle::F_yy},
    {"F_yyy", &CriticalBundle::F_yyy},     {"F_t", &CriticalBundle::F_t},
    {"F_ty", &CriticalBundle::F_ty},       {"F_xit", &CriticalBundle::F_xit},
    {"epsilon", &CriticalBundle::epsilon}, {"c", &CriticalBundle::c},
    {"alpha", &CriticalBundle::alpha},     {"beta", &CriticalBundle::beta},
    {"gamma", &CriticalBundle::gamma},     {"delta1", &CriticalBundle::delta1},
    {"delta2", &CriticalBundle::delta2},   {"k", &CriticalBundle::k},
    {"beta_bar", &CriticalBundle::beta_bar}, {"sigma", &CriticalBundle::sigma},
};

}  // namespace

std::string format_bundle(const CriticalBundle& b) {
  std::string out = "# critical bundle\n";
  char buf[64];
  for (const Field& f : kFields) {
    std::snprintf(buf, sizeof buf, "%.17g", b.*(f.ptr));
    out += f.name;
    out += " = ";
    out += buf;
    out += '\n';
  }
  return out;
}

CriticalBundle parse_bundle(const std::string& text) {
  std::map<std::string, double CriticalBundle::*> index;
  for (const Field& f : kFields) index[f.name] = f.ptr;
  CriticalBundle b;
  std::map<std::string, bool> seen;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto z = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, z - a + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw ParseError(no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto it = index.find(key);
    if (it == index.end()) throw ParseError(no, "unknown bundle key '" + key + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != val.size()) throw ParseError(no, "bad number '" + val + "'");
    b.*(it->second) = v;
    seen[key] = true;
  }
  for (const Field& f : kFields)
    if (!seen.count(f.name)) throw ParseError(no, std::string("missing bundle key '") + f.name + "'");
  return b;
}

void write_bundle(const std::string& path, const CriticalBundle& b) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << format_bundle(b);
}

CriticalBundle read_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read bundle " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle(ss.str());
}

CatastropheDetector::CatastropheDetector(DetectorSettings settings) : settings_(settings) {}

void CatastropheDetector::on_start(const StepContext& ctx) {
  events_.clear();
  series_.clear();
  first_negative_.reset();
  const RealField d = delta_field(*ctx.state, ctx.t);
  series_.emplace_back(ctx.t, kernels::parallel::min_loc(d.values()).value);
}

std::vector<CatastropheDetector::Candidate> CatastropheDetector::candidates(
    const RealField& d) const {
  const auto& g = *d.grid();
  const std::size_t nx = g.nx(), ny = g.ny();
  std::vector<Candidate> out;
  if (events_.empty()) {
    const auto ml = kernels::parallel::min_loc(d.values());
    out.push_back({g.x(ml.index % nx), g.y(ml.index / nx), ml.value});
    return out;
  }
  // negative components attached to earlier events
  std::vector<char> mask(nx * ny, 0);
  std::vector<std::size_t> stack;
  const double r2 = settings_.exclusion_radius * settings_.exclusion_radius;
  for (const auto& e : events_) {
    for (std::size_t iy = 0; iy < ny; ++iy)
      for (std::size_t ix = 0; ix < nx; ++ix) {
        const double dx = g.x(ix) - e.point.xi, dy = g.y(iy) - e.point.y;
        if (dx * dx + dy * dy <= r2 && d(iy, ix) < 0.0 && !mask[iy * nx + ix]) {
          mask[iy * nx + ix] = 1;
          stack.push_back(iy * nx + ix);
        }
      }
  }
  std::vector<std::pair<double, double>> masked;
  while (!stack.empty()) {
    const std::size_t p = stack.back();
    stack.pop_back();
    const std::size_t iy = p / nx, ix = p % nx;
    masked.emplace_back(g.x(ix), g.y(iy));
    const std::size_t nb[4] = {iy * nx + (ix + 1) % nx, iy * nx + (ix + nx - 1) % nx,
                               ((iy + 1) % ny) * nx + ix, ((iy + ny - 1) % ny) * nx + ix};
    for (std::size_t q : nb)
      if (!mask[q] && d.values()[q] < 0.0) {
        mask[q] = 1;
        stack.push_back(q);
      }
  }
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double v = d(iy, ix);
      if (v >= settings_.polish_below || mask[iy * nx + ix]) continue;
      bool is_min = true;
      for (int oy = -1; oy <= 1 && is_min; ++oy)
        for (int ox = -1; ox <= 1; ++ox) {
          if (!ox && !oy) continue;
          const std::size_t jy = (iy + ny + oy) % ny, jx = (ix + nx + ox) % nx;
          if (d(jy, jx) < v) {
            is_min = false;
            break;
          }
        }
      if (!is_min) continue;
      const double x = g.x(ix), y = g.y(iy);
      bool near = false;
      for (const auto& e : events_)
        near = near || std::hypot(x - e.point.xi, y - e.point.y) <= settings_.exclusion_radius;
      for (std::size_t m = 0; m < masked.size() && !near; ++m)
        near = std::hypot(x - masked[m].first, y - masked[m].second) <= settings_.exclusion_radius;
      if (!near) out.push_back({x, y, v});
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  return out;
}

bool CatastropheDetector::on_step(const StepContext& ctx) {
  if (events_.size() >= settings_.max_events) return !settings_.stop_when_done;
  const RealField d = delta_field(*ctx.state, ctx.t);
  const double grid_min = kernels::parallel::min_loc(d.values()).value;
  series_.emplace_back(ctx.t, grid_min);
  if (grid_min < 0.0 && !first_negative_) first_negative_ = ctx.t;

  for (const Candidate& c : candidates(d)) {
    if (c.value >= settings_.polish_below) break;
    const DeltaMinimum now = polish_delta_minimum(*ctx.state, ctx.t, c.xi, c.y);
    if (now.delta >= 0.0) continue;
    events_.push_back(refine(ctx, c, now));
    break;
  }
  if (events_.size() >= settings_.max_events && settings_.stop_when_done) return false;
  return true;
}

DetectedEvent CatastropheDetector::refine(const StepContext& ctx, const Candidate&,
                                          const DeltaMinimum& now) {
  ModelBinding& model = *ctx.model;
  const double krasny = ctx.settings->krasny_threshold;
  const SpectralField& prev = *ctx.previous;
  const double t0 = ctx.t_prev;

  double xi = now.xi, y = now.y;
  auto probe = [&](double tau) {
    const SpectralField s = advance(model, prev, t0, tau - t0, krasny);
    const DeltaMinimum m = polish_delta_minimum(s, tau, xi, y);
    return m;
  };
  double lo = t0, hi = ctx.t;
  DeltaMinimum mlo = polish_delta_minimum(prev, t0, now.xi, now.y);
  DeltaMinimum mhi = now;
  double flo = mlo.delta, fhi = mhi.delta;
  if (flo < 0.0) {
    // already negative before this step; keep the bracket end as estimate
    flo = 0.0;
  }
  int side = 0;
  double root = hi;
  for (int it = 0; it < 60; ++it) {
    root = flo == fhi ? 0.5 * (lo + hi) : (lo * fhi - hi * flo) / (fhi - flo);
    if (!(root > lo && root < hi)) root = 0.5 * (lo + hi);
    if (hi - lo <= settings_.t_tol && it > 0) break;
    const DeltaMinimum m = probe(root);
    xi = m.xi;
    y = m.y;
    if (std::abs(m.delta) < 1e-14) {
      lo = hi = root;
      break;
    }
    if (m.delta < 0.0) {
      hi = root;
      fhi = m.delta;
      if (side == -1) flo *= 0.5;
      side = -1;
    } else {
      lo = root;
      flo = m.delta;
      if (side == 1) fhi *= 0.5;
      side = 1;
    }
  }
  if (lo == hi) root = lo;

  DetectedEvent ev;
  ev.step = ctx.step;
  ev.state = advance(model, prev, t0, root - t0, krasny);
  const DeltaMinimum m = polish_delta_minimum(ev.state, root, xi, y);
  const double F = PointEvaluator(ev.state).value(m.xi, m.y);
  ev.point.t = root;
  ev.point.xi = m.xi;
  ev.point.y = m.y;
  ev.point.u = F;
  ev.point.x = m.xi + root * F;
  ev.point.delta = m.delta;
  return ev;
}

}  // namespace dkp
