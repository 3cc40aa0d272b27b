#include "dkp/spectral.hpp"

#include "dkp/errors.hpp"
#include "dkp/fft.hpp"
#include "dkp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace dkp {

namespace {

cplx ipow(double k, int order) {
  // (i k)^order
  cplx r{1.0, 0.0};
  for (int n = 0; n < order; ++n) r *= cplx{0.0, k};
  return r;
}

void check_order(int ox, int oy) {
  if (ox < 0 || oy < 0 || ox > 4 || oy > 4) throw ContractError("derivative order must be in [0,4]");
}

}  // namespace

AlignedVector<cplx> derivative_multiplier(const Grid2D& g, int ox, int oy) {
  check_order(ox, oy);
  AlignedVector<cplx> m(g.spectral_size());
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    const bool kill_y = (oy % 2 == 1) && g.nyquist_y(iy);
    const cplx my = ipow(g.ky_at(iy), oy);
    for (std::size_t j = 0; j < g.nxh(); ++j) {
      const bool kill_x = (ox % 2 == 1) && g.nyquist_x(j);
      m[iy * g.nxh() + j] = (kill_x || kill_y) ? cplx{} : ipow(g.kx_half(j), ox) * my;
    }
  }
  return m;
}

AlignedVector<cplx> antiderivative_multiplier(const Grid2D& g) {
  AlignedVector<cplx> m(g.spectral_size());
  const double eta = kAntiderivativeEta * g.dkx();
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    for (std::size_t j = 0; j < g.nxh(); ++j) {
      const double k = g.kx_half(j);
      m[iy * g.nxh() + j] = g.nyquist_x(j) ? cplx{} : cplx{0.0, -k / (k * k + eta * eta)};
    }
  }
  return m;
}

SpectralField spectral_derivative(const SpectralField& f, int ox, int oy) {
  const auto mult = derivative_multiplier(*f.grid(), ox, oy);
  SpectralField out(f.grid());
  kernels::parallel::multiply(out.values(), f.values(), mult);
  return out;
}

SpectralField spectral_derivative(const RealField& f, int ox, int oy) {
  return spectral_derivative(forward(f), ox, oy);
}

RealField physical_derivative(const SpectralField& f, int ox, int oy) {
  return inverse(spectral_derivative(f, ox, oy));
}

SpectralField antiderivative_x(const SpectralField& f) {
  const auto mult = antiderivative_multiplier(*f.grid());
  SpectralField out(f.grid());
  kernels::parallel::multiply(out.values(), f.values(), mult);
  return out;
}

SpectralField antiderivative_x(const RealField& f) { return antiderivative_x(forward(f)); }

SpectralField krasny_filter(SpectralField f, double threshold) {
  krasny_filter_inplace(f, threshold);
  return f;
}

std::size_t krasny_filter_inplace(SpectralField& f, double threshold) {
  if (threshold < 0.0) throw ContractError("Krasny threshold must be non-negative");
  if (threshold == 0.0) return 0;
  return kernels::parallel::krasny(f.values(), threshold);
}

void dealias_two_thirds(SpectralField& f) {
  const auto& g = *f.grid();
  const double kx_cut = (2.0 / 3.0) * static_cast<double>(g.nx() / 2) * g.dkx();
  const double ky_cut = (2.0 / 3.0) * static_cast<double>(g.ny() / 2) * g.dky();
  for (std::size_t iy = 0; iy < g.ny(); ++iy)
    for (std::size_t j = 0; j < g.nxh(); ++j)
      if (g.kx_half(j) > kx_cut || std::abs(g.ky_at(iy)) > ky_cut) f(iy, j) = cplx{};
}

double spectral_energy(const SpectralField& f) {
  const auto& g = *f.grid();
  return g.area() * kernels::parallel::half_spectrum_energy(f.values(), g.nxh(), g.nx());
}

double physical_energy(const RealField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return s * f.grid()->cell_area();
}

double spectral_tail(const SpectralField& f, double shell) {
  const auto& g = *f.grid();
  const double kxm = static_cast<double>(g.nx() / 2) * g.dkx();
  const double kym = static_cast<double>(g.ny() / 2) * g.dky();
  double worst = 0.0;
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    const double ry = std::abs(g.ky_at(iy)) / kym;
    for (std::size_t j = 0; j < g.nxh(); ++j) {
      const double r = std::max(ry, g.kx_half(j) / kxm);
      if (r >= 1.0 - shell) worst = std::max(worst, std::abs(f(iy, j)));
    }
  }
  return worst;
}

PointEvaluator::PointEvaluator(const SpectralField& f) : field_(&f) {}

DerivativeTable PointEvaluator::at(double x, double y) const {
  const auto& f = *field_;
  const auto& g = *f.grid();
  constexpr int PX = DerivativeTable::kMaxX;
  constexpr int PY = DerivativeTable::kMaxY;
  const double xs = x + g.half_width_x();
  const double ys = y + g.half_width_y();
  const std::size_t nxh = g.nxh();

  std::vector<cplx> ex(nxh);
  for (std::size_t j = 0; j < nxh; ++j) ex[j] = std::polar(1.0, g.kx_half(j) * xs);

  DerivativeTable out;
  std::array<std::array<cplx, PY + 1>, PX + 1> acc{};
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    if (g.nyquist_y(iy)) continue;
    const double ky = g.ky_at(iy);
    // row sums S_p = sum_j w_j c (i kx)^p e^{i kx x}
    std::array<cplx, PX + 1> s{};
    for (std::size_t j = 0; j + 1 < nxh; ++j) {
      const double w = j == 0 ? 1.0 : 2.0;
      const double kx = g.kx_half(j);
      cplx term = w * f(iy, j) * ex[j];
      for (int p = 0; p <= PX; ++p) {
        s[p] += term;
        term *= cplx{0.0, kx};
      }
    }
    const cplx ey = std::polar(1.0, ky * ys);
    for (int p = 0; p <= PX; ++p) {
      cplx t = s[p] * ey;
      for (int q = 0; q <= PY; ++q) {
        acc[p][q] += t;
        t *= cplx{0.0, ky};
      }
    }
  }
  // Column kx = 0 is counted once with its full complex value; its
  // imaginary part cancels over +-ky for a Hermitian field.
  for (int p = 0; p <= PX; ++p)
    for (int q = 0; q <= PY; ++q) out.d[p][q] = acc[p][q].real();
  return out;
}

std::vector<double> evaluate_tensor(const SpectralField& f, const std::vector<double>& xs,
                                    const std::vector<double>& ys, int ox, int oy) {
  const auto& g = *f.grid();
  const std::size_t nxh = g.nxh();
  const std::size_t mx = xs.size();
  const std::size_t my = ys.size();

  // Stage 1: R[iy][a] = sum_j w_j c(iy,j) (i kx)^ox e^{i kx (x_a + Lx)}
  std::vector<cplx> ex(mx * nxh);
  for (std::size_t a = 0; a < mx; ++a)
    for (std::size_t j = 0; j + 1 < nxh; ++j)
      ex[a * nxh + j] = (j == 0 ? 1.0 : 2.0) * ipow(g.kx_half(j), ox) *
                        std::polar(1.0, g.kx_half(j) * (xs[a] + g.half_width_x()));
  std::vector<cplx> rows(g.ny() * mx);
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(g.ny());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t iy = 0; iy < ny; ++iy) {
    if (g.nyquist_y(static_cast<std::size_t>(iy))) continue;
    const cplx* c = &f(static_cast<std::size_t>(iy), 0);
    for (std::size_t a = 0; a < mx; ++a) {
      cplx s{};
      const cplx* e = &ex[a * nxh];
      for (std::size_t j = 0; j + 1 < nxh; ++j) s += c[j] * e[j];
      rows[static_cast<std::size_t>(iy) * mx + a] = s;
    }
  }
  // Stage 2: combine rows with e^{i ky y_b}
  std::vector<double> out(mx * my);
  const std::ptrdiff_t myp = static_cast<std::ptrdiff_t>(my);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < myp; ++b) {
    std::vector<cplx> ey(g.ny());
    for (std::size_t iy = 0; iy < g.ny(); ++iy)
      ey[iy] = ipow(g.ky_at(iy), oy) *
               std::polar(1.0, g.ky_at(iy) * (ys[static_cast<std::size_t>(b)] + g.half_width_y()));
    for (std::size_t a = 0; a < mx; ++a) {
      cplx s{};
      for (std::size_t iy = 0; iy < g.ny(); ++iy) {
        if (g.nyquist_y(iy)) continue;
        s += rows[iy * mx + a] * ey[iy];
      }
      out[static_cast<std::size_t>(b) * mx + a] = s.real();
    }
  }
  return out;
}

}  // namespace dkp
