#pragma once

#include "dkp/characteristics.hpp"
#include "dkp/curves.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace dkp {

/// U(a, b) = -2 d/da log I(a, b), I = int exp(-(z^4 - 2 b z^2 + 4 a z)/8) dz.
struct PearceyEval {
  double a = 0.0, b = 0.0;
  double U = 0.0;
  double radius = 0.0;     ///< half-length of the truncated z interval
  std::size_t nodes = 0;   ///< trapezoid nodes of the accepted estimate
  double error = 0.0;      ///< change of U under the last node doubling
};

PearceyEval pearcey_U(double a, double b);
inline double pearcey(double a, double b) { return pearcey_U(a, b).U; }

/// Residual of a = U b - U^3 + 6 U U_a - 4 U_aa with central differences of step h.
double pearcey_ode_residual(double a, double b, double h);
/// Residual of U_b + U U_a - U_aa with central differences of step h.
double pearcey_burgers_residual(double a, double b, double h);

/// -sgn(a) (|a|^{1/3} + (b/3) |a|^{-1/3}), for |a| >= 10.
double pearcey_asymptote(double a, double b);

/// u_c + sigma^{1/4} U(X / sigma^{3/4}, T / sigma^{1/2}) + beta_bar y_bar with
/// sigma = 6 epsilon (1 + c (t_c F_y)^2) / (F_xixixi t_c^4).
double dissipative_local(double x_bar, double y_bar, double t_bar, const CriticalBundle& b,
                         double epsilon, double c);
double dissipative_sigma(const CriticalBundle& b, double epsilon, double c);

/// Whole-line Burgers problem v_t + v v_x = nu v_xx with v(x, 0) = v0(x).
struct BurgersProblem {
  std::function<double(double)> v0;
  /// int_0^eta v0; computed by composite Gauss-Legendre when empty.
  std::function<double(double)> primitive;
  double nu = 0.0;
};

/// Problem whose primitive is a shared cached Gauss-Legendre table.
BurgersProblem make_burgers(std::function<double(double)> v0, double nu);

/// Cole-Hopf solution v = (x - <eta>)/t, <.> weighted by exp(-G / 2 nu),
/// G = int_0^eta v0 + (x - eta)^2 / (2t).
double cole_hopf(const BurgersProblem& problem, double x, double t);

/// Cached cumulative Gauss-Legendre primitive of a one-dimensional function.
class Primitive {
 public:
  explicit Primitive(std::function<double(double)> f, double panel = 0.05);
  double operator()(double eta) const;

 private:
  double panel_integral(long k) const;
  std::function<double(double)> f_;
  double h_;
  mutable std::map<long, double> cumulative_;  // int_0^{k h}
};

/// u = B(x - y^2/(4t) - 2 u t)/sqrt(t), parameterized by s:
///   u = B(s)/sqrt(t), x = 2 sqrt(t) B(s) + s + y^2/(4t)
/// and in transformed variables
///   F = B(s)/sqrt(t), xi = sqrt(t) B(s) + s + y^2/(4t).
class ExactFamily {
 public:
  ExactFamily(std::function<double(double)> B, std::function<double(double)> dB);

  /// F(xi, y, t) for t below the F-breaking time (Newton in s).
  double F(double xi, double y, double t) const;
  /// u(x, y, t) before the u-breaking time.
  double u(double x, double y, double t) const;
  /// Parametric (x, u) samples along a row y for s in [s0, s1].
  std::vector<Point2> samples(double y, double t, double s0, double s1, std::size_t n) const;

  /// min over s of -1/(2 B'(s)), squared (over the sampled s range).
  double u_breaking_time(double s0, double s1, std::size_t n = 100001) const;
  /// 4 x the u-breaking time.
  double f_breaking_time(double s0, double s1, std::size_t n = 100001) const;

 private:
  double solve(double target, double coef) const;
  std::function<double(double)> b_, db_;
};

}  // namespace dkp
