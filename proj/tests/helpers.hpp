#pragma once

#include "dkp/field.hpp"
#include "dkp/grid.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace test {

inline dkp::RealField sample(const dkp::GridPtr& g, const std::function<double(double, double)>& f) {
  dkp::RealField out(g);
  for (std::size_t iy = 0; iy < g->ny(); ++iy)
    for (std::size_t ix = 0; ix < g->nx(); ++ix) out(iy, ix) = f(g->x(ix), g->y(iy));
  return out;
}

inline double max_diff(const dkp::RealField& a, const dkp::RealField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double max_abs(const dkp::RealField& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

// smooth random field with a few low modes
inline dkp::RealField random_smooth(const dkp::GridPtr& g, unsigned seed, int modes = 4) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const double kx = M_PI / g->half_width_x(), ky = M_PI / g->half_width_y();
  dkp::RealField out(g);
  for (int p = 0; p <= modes; ++p)
    for (int q = -modes; q <= modes; ++q) {
      const double a = U(rng), b = U(rng);
      for (std::size_t iy = 0; iy < g->ny(); ++iy)
        for (std::size_t ix = 0; ix < g->nx(); ++ix) {
          const double ph = p * kx * g->x(ix) + q * ky * g->y(iy);
          out(iy, ix) += a * std::cos(ph) + b * std::sin(ph);
        }
    }
  return out;
}

}  // namespace test
