#include "dkp/pearcey.hpp"

#include "dkp/asymptotics.hpp"
#include "dkp/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace dkp {

namespace {

constexpr double kTailLog = 45.0;      // integrand tail below e^{-45} of its peak
constexpr double kQuadTol = 1e-12;
constexpr std::size_t kMaxNodes = std::size_t{1} << 24;

// log of the Pearcey weight
double phi(double z, double a, double b) {
  const double z2 = z * z;
  return -(z2 * z2 - 2.0 * b * z2 + 4.0 * a * z) / 8.0;
}

}  // namespace

PearceyEval pearcey_U(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw ContractError("non-finite Pearcey argument");
  // d/da of the exponent is -z/2, so -2 d/da log I = <z>.
  // Stationary points of the exponent solve -z^3 + b z = a.
  const std::vector<double> roots = solve_scurve(a, b);
  double peak = -std::numeric_limits<double>::infinity();
  double reach = 0.0;
  for (double r : roots) {
    peak = std::max(peak, phi(r, a, b));
    reach = std::max(reach, std::abs(r));
  }
  double Z = reach + 1.0;
  while (phi(Z, a, b) - peak > -kTailLog || phi(-Z, a, b) - peak > -kTailLog) {
    Z *= 1.25;
    if (Z > 1e8) throw TruncationError("Pearcey tail bound unreachable");
  }

  PearceyEval out;
  out.a = a;
  out.b = b;
  out.radius = Z;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t n = 256; n <= kMaxNodes; n *= 2) {
    const double h = 2.0 * Z / static_cast<double>(n);
    double s0 = 0.0, s1 = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const double z = -Z + static_cast<double>(i) * h;
      const double w = std::exp(phi(z, a, b) - peak) * (i == 0 || i == n ? 0.5 : 1.0);
      s0 += w;
      s1 += w * z;
    }
    const double U = s1 / s0;
    if (std::isfinite(prev) && std::abs(U - prev) < kQuadTol) {
      out.U = U;
      out.nodes = n;
      out.error = std::abs(U - prev);
      return out;
    }
    prev = U;
  }
  throw TruncationError("Pearcey quadrature did not converge");
}

double pearcey_ode_residual(double a, double b, double h) {
  const double u = pearcey(a, b), up = pearcey(a + h, b), um = pearcey(a - h, b);
  const double ua = (up - um) / (2.0 * h);
  const double uaa = (up - 2.0 * u + um) / (h * h);
  return u * b - u * u * u + 6.0 * u * ua - 4.0 * uaa - a;
}

double pearcey_burgers_residual(double a, double b, double h) {
  const double u = pearcey(a, b), up = pearcey(a + h, b), um = pearcey(a - h, b);
  const double ub = (pearcey(a, b + h) - pearcey(a, b - h)) / (2.0 * h);
  const double ua = (up - um) / (2.0 * h);
  const double uaa = (up - 2.0 * u + um) / (h * h);
  return ub + u * ua - uaa;
}

double pearcey_asymptote(double a, double b) {
  const double m = std::abs(a);
  const double v = std::cbrt(m) + b / 3.0 / std::cbrt(m);
  return a > 0.0 ? -v : v;
}

double dissipative_sigma(const CriticalBundle& b, double epsilon, double c) {
  const double tc = b.t_c;
  const double tfy = tc * b.F_y;
  return epsilon * 6.0 * (1.0 + c * tfy * tfy) / (b.F_xixixi * tc * tc * tc * tc);
}

double dissipative_local(double x, double y, double t, const CriticalBundle& b, double epsilon,
                         double c) {
  const double sigma = dissipative_sigma(b, epsilon, c);
  if (!(sigma > 0.0)) throw DegeneracyError("sigma must be positive");
  const LocalXT xt = map_XT(x, y, t, b);
  return b.u_c + std::pow(sigma, 0.25) * pearcey(xt.X / std::pow(sigma, 0.75), xt.T / std::sqrt(sigma)) +
         b.beta_bar * y;
}

Primitive::Primitive(std::function<double(double)> f, double panel) : f_(std::move(f)), h_(panel) {
  if (!(h_ > 0.0)) throw ContractError("panel width must be positive");
  cumulative_[0] = 0.0;
}

double Primitive::panel_integral(long k) const {
  // 8-point Gauss-Legendre on [k h, (k+1) h]
  static constexpr std::array<double, 4> x = {0.1834346424956498, 0.5255324099163290,
                                              0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> w = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};
  const double mid = (static_cast<double>(k) + 0.5) * h_;
  const double half = 0.5 * h_;
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += w[i] * (f_(mid - half * x[i]) + f_(mid + half * x[i]));
  return s * half;
}

double Primitive::operator()(double eta) const {
  const long k = static_cast<long>(std::floor(eta / h_));
  auto it = cumulative_.find(k);
  if (it == cumulative_.end()) {
    if (k > 0) {
      auto last = std::prev(cumulative_.end());
      long j = last->first;
      double v = last->second;
      for (; j < k; ++j) {
        v += panel_integral(j);
        cumulative_[j + 1] = v;
      }
    } else {
      auto first = cumulative_.begin();
      long j = first->first;
      double v = first->second;
      for (; j > k; --j) {
        v -= panel_integral(j - 1);
        cumulative_[j - 1] = v;
      }
    }
    it = cumulative_.find(k);
  }
  // partial panel [k h, eta] by 8-point Gauss-Legendre
  const double a = static_cast<double>(k) * h_;
  const double len = eta - a;
  if (len <= 0.0) return it->second;
  static constexpr std::array<double, 4> x = {0.1834346424956498, 0.5255324099163290,
                                              0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> w = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};
  const double mid = a + 0.5 * len, half = 0.5 * len;
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += w[i] * (f_(mid - half * x[i]) + f_(mid + half * x[i]));
  return it->second + s * half;
}

BurgersProblem make_burgers(std::function<double(double)> v0, double nu) {
  auto cached = std::make_shared<Primitive>(v0);
  return {std::move(v0), [cached](double e) { return (*cached)(e); }, nu};
}

double cole_hopf(const BurgersProblem& p, double x, double t) {
  if (!(t > 0.0) || !(p.nu > 0.0)) throw ContractError("cole_hopf needs t > 0 and nu > 0");
  std::function<double(double)> prim = p.primitive;
  std::shared_ptr<Primitive> cached;
  if (!prim) {
    cached = std::make_shared<Primitive>(p.v0);
    prim = [cached](double e) { return (*cached)(e); };
  }
  // d/dx G = (x - eta)/t, so -2 nu d/dx log int e^{-G/2nu} = (x - <eta>)/t.
  auto expo = [&](double eta) {
    const double d = x - eta;
    return -(prim(eta) + d * d / (2.0 * t)) / (2.0 * p.nu);
  };
  // locate the peak on a coarse lattice around x
  double width = std::sqrt(2.0 * t * 2.0 * p.nu * kTailLog) + 1.0;
  double lo = x - width, hi = x + width;
  double peak = -std::numeric_limits<double>::infinity();
  for (int grow = 0;; ++grow) {
    const int m = 2000;
    for (int i = 0; i <= m; ++i) peak = std::max(peak, expo(lo + (hi - lo) * i / m));
    const bool ok_lo = expo(lo) - peak < -kTailLog;
    const bool ok_hi = expo(hi) - peak < -kTailLog;
    if (ok_lo && ok_hi) break;
    if (grow > 60) throw TruncationError("Cole-Hopf tail bound unreachable");
    if (!ok_lo) lo -= width;
    if (!ok_hi) hi += width;
    width *= 1.5;
  }
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t n = 512; n <= kMaxNodes; n *= 2) {
    const double h = (hi - lo) / static_cast<double>(n);
    double s0 = 0.0, s1 = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      const double eta = lo + static_cast<double>(i) * h;
      const double w = std::exp(expo(eta) - peak) * (i == 0 || i == n ? 0.5 : 1.0);
      s0 += w;
      s1 += w * eta;
    }
    const double mean = s1 / s0;
    if (std::isfinite(prev) && std::abs(mean - prev) < kQuadTol * std::max(1.0, std::abs(mean)))
      return (x - mean) / t;
    prev = mean;
  }
  throw TruncationError("Cole-Hopf quadrature did not converge");
}

ExactFamily::ExactFamily(std::function<double(double)> B, std::function<double(double)> dB)
    : b_(std::move(B)), db_(std::move(dB)) {}

double ExactFamily::solve(double target, double coef) const {
  // s + coef B(s) = target, monotone in s before breaking
  double s = target;
  for (int it = 0; it < 200; ++it) {
    const double f = s + coef * b_(s) - target;
    const double d = 1.0 + coef * db_(s);
    if (!(d > 0.0)) throw DegeneracyError("exact family: map is not invertible");
    double step = f / d;
    if (std::abs(step) > 0.5) step = std::copysign(0.5, step);
    s -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(s))) break;
  }
  return s;
}

double ExactFamily::F(double xi, double y, double t) const {
  const double st = std::sqrt(t);
  return b_(solve(xi - y * y / (4.0 * t), st)) / st;
}

double ExactFamily::u(double x, double y, double t) const {
  const double st = std::sqrt(t);
  return b_(solve(x - y * y / (4.0 * t), 2.0 * st)) / st;
}

std::vector<Point2> ExactFamily::samples(double y, double t, double s0, double s1, std::size_t n) const {
  const double st = std::sqrt(t);
  std::vector<Point2> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = s0 + (s1 - s0) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double B = b_(s);
    out.push_back({2.0 * st * B + s + y * y / (4.0 * t), B / st});
  }
  return out;
}

double ExactFamily::u_breaking_time(double s0, double s1, std::size_t n) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double s = s0 + (s1 - s0) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double d = db_(s);
    if (d < 0.0) best = std::min(best, -1.0 / (2.0 * d));
  }
  return best * best;
}

double ExactFamily::f_breaking_time(double s0, double s1, std::size_t n) const {
  return 4.0 * u_breaking_time(s0, s1, n);
}

}  // namespace dkp
