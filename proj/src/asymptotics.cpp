#include "dkp/asymptotics.hpp"

#include "dkp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dkp {

namespace {

// Terms of X that do not involve x_bar, times k.
double x_offset(double y, double t, const CriticalBundle& b) {
  const double tc = b.t_c;
  const double r = b.F_xixiy / b.F_xixixi;
  return t * (b.F + tc * b.F_t) + t * y * (b.F_y + tc * b.F_ty) +
         tc * (b.F_y * y + 0.5 * b.F_yy * y * y + b.F_yyy * y * y * y / 6.0) +
         tc * r * r * b.F_xixiy * y * y * y / 3.0 - 0.5 * tc * r * b.F_xiyy * y * y * y -
         b.F_xi * r * y * t;
}

}  // namespace

LocalXT map_XT(double x, double y, double t, const CriticalBundle& b) {
  const double tc = b.t_c;
  LocalXT r;
  r.X = (x - x_offset(y, t, b)) / b.k;
  r.T = (t + 0.5 * tc * tc * y * y * (b.F_xixiy * b.F_xixiy / b.F_xixixi - b.F_xiyy)) / b.k;
  return r;
}

double local_zeta(double xi_bar, double y_bar, const CriticalBundle& b) {
  return b.F_xi * (xi_bar + b.F_xixiy / b.F_xixixi * y_bar);
}

std::vector<double> solve_scurve(double X, double T) {
  // z^3 + p z + q = 0 with p = -T, q = X
  const double p = -T, q = X;
  const double disc = 4.0 * T * T * T - 27.0 * X * X;
  const double tol = 1e-12 * std::max(1.0, std::abs(T * T * T));
  std::vector<double> z;
  if (std::abs(disc) <= tol && T > 0.0) {
    const double m = std::sqrt(T / 3.0);
    const double dbl = X > 0.0 ? m : -m;  // double root
    z = {-2.0 * dbl, dbl, dbl};
  } else if (disc > 0.0) {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m) , -1.0, 1.0);
    const double th = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) z.push_back(m * std::cos(th - 2.0 * std::numbers::pi * k / 3.0));
  } else if (p == 0.0) {
    z = {std::cbrt(-q)};
  } else if (p < 0.0) {
    const double m = std::sqrt(-p / 3.0);
    const double arg = -1.5 * std::abs(q) / p / m;
    z = {-std::copysign(2.0 * m * std::cosh(std::acosh(std::max(1.0, arg)) / 3.0), q)};
  } else {
    const double m = std::sqrt(p / 3.0);
    z = {-2.0 * m * std::sinh(std::asinh(1.5 * q / p / m) / 3.0)};
  }
  for (double& r : z) {
    // one Newton correction
    const double f = r * r * r + p * r + q;
    const double d = 3.0 * r * r + p;
    if (d != 0.0 && std::abs(f / d) < 1e-6 * (1.0 + std::abs(r))) r -= f / d;
  }
  std::sort(z.begin(), z.end());
  return z;
}

std::vector<double> local_profile(double x, double y, double t, const CriticalBundle& b) {
  const LocalXT xt = map_XT(x, y, t, b);
  std::vector<double> u = solve_scurve(xt.X, xt.T);
  for (double& v : u) v = b.u_c + v + b.beta_bar * y;
  return u;
}

namespace {

struct Ellipse {
  double r, scale;
};

Ellipse lip_ellipse(const CriticalBundle& b, double t_bar) {
  const double ta = b.t_c * b.alpha;
  if (!(ta > 0.0)) throw DegeneracyError("t_c alpha must be positive for a lip");
  const double disc = b.gamma - b.beta * b.beta;
  if (!(disc > 0.0)) throw DegeneracyError("gamma <= beta^2: the lip is unbounded");
  return {std::sqrt(2.0 * t_bar / ta), 1.0 / std::sqrt(disc)};
}

double x1_of(double s, double Y1, const CriticalBundle& b) {
  return -b.alpha * (s * s * s / 3.0 + 0.5 * b.beta * s * s * Y1) + b.delta1 * Y1 +
         b.delta2 * Y1 * Y1 * Y1 / 6.0;
}

}  // namespace

LipCurve lip_similarity(const CriticalBundle& b, std::size_t n) {
  if (n < 8) throw ContractError("too few lip samples");
  const Ellipse e = lip_ellipse(b, 1.0);
  LipCurve c;
  c.frame = Frame::similarity;
  c.closed = true;
  c.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const double Y1 = e.r * std::sin(th) * e.scale;
    const double s = e.r * std::cos(th) - b.beta * Y1;
    c.samples.push_back({x1_of(s, Y1, b), Y1});
  }
  return c;
}

LipCurve lip_physical(const CriticalBundle& b, double t_bar, std::size_t n) {
  if (!(t_bar > 0.0)) throw ContractError("lip_physical needs t_bar > 0");
  if (n < 8) throw ContractError("too few lip samples");
  const Ellipse e = lip_ellipse(b, t_bar);
  const double tc = b.t_c;
  LipCurve c;
  c.frame = Frame::physical;
  c.t_bar = t_bar;
  c.closed = true;
  c.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const double y = e.r * std::sin(th) * e.scale;
    const double xi = e.r * std::cos(th) - b.beta * y;
    const double x = -b.alpha * (xi * xi * xi / 3.0 + 0.5 * b.beta * y * xi * xi) +
                     t_bar * (b.F - tc * tc * b.F_y * b.F_y) + t_bar * y * b.delta1 +
                     tc * (b.F_y * y + 0.5 * b.F_yy * y * y + b.F_yyy * y * y * y / 6.0);
    c.samples.push_back({x, y});
  }
  return c;
}

Point2 to_similarity(double x, double y, double t, const CriticalBundle& b) {
  const double tc = b.t_c;
  const double shift = t * (b.F - tc * tc * b.F_y * b.F_y) + tc * (b.F_y * y + 0.5 * b.F_yy * y * y);
  return {(x - shift) * std::pow(t, -1.5), y / std::sqrt(t)};
}

LipCurve to_similarity(const LipCurve& absolute, double t_bar, const CriticalBundle& b) {
  LipCurve c;
  c.frame = Frame::similarity;
  c.t_bar = t_bar;
  c.closed = absolute.closed;
  c.samples.reserve(absolute.samples.size());
  for (const Point2& p : absolute.samples)
    c.samples.push_back(to_similarity(p.a - b.x_c, p.b - b.y_c, t_bar, b));
  return c;
}

double cusp_tip(const CriticalBundle& b) {
  const Ellipse e = lip_ellipse(b, 1.0);
  return e.r * e.scale;
}

double lip_cusp(const CriticalBundle& b, double Y1) {
  const double tip = cusp_tip(b);
  const double d = std::max(0.0, tip - std::abs(Y1));
  return b.alpha / 3.0 * std::pow(2.0 * b.gamma * tip, 1.5) * std::pow(d, 1.5);
}

double shock_front(const CriticalBundle& b, double y, double t) { return x_offset(y, t, b); }

double shock_front_dt(const CriticalBundle& b, double y) {
  const double r = b.F_xixiy / b.F_xixixi;
  return (b.F + b.t_c * b.F_t) + y * (b.F_y + b.t_c * b.F_ty) - b.F_xi * r * y;
}

double shock_front_dy(const CriticalBundle& b, double y, double t) {
  const double tc = b.t_c;
  const double r = b.F_xixiy / b.F_xixixi;
  return t * (b.F_y + tc * b.F_ty) + tc * (b.F_y + b.F_yy * y + 0.5 * b.F_yyy * y * y) +
         tc * r * r * b.F_xixiy * y * y - 1.5 * tc * r * b.F_xiyy * y * y - b.F_xi * r * t;
}

double rh_residual(double u1, double u2, double xs_t, double xs_y) {
  return xs_t - 0.5 * (u1 + u2) + xs_y * xs_y;
}

}  // namespace dkp
