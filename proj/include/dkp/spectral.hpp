#pragma once

#include "dkp/field.hpp"

#include <array>
#include <vector>

namespace dkp {

/// Regularization added to |k| in 1/k multipliers, in units of the
/// wavenumber spacing.
inline constexpr double kAntiderivativeEta = 1e-16;

/// Multiplier (i kx)^ox (i ky)^oy in the half layout. Odd orders vanish on
/// the corresponding Nyquist line.
AlignedVector<cplx> derivative_multiplier(const Grid2D& grid, int order_x, int order_y);

/// Multiplier of the x-antiderivative, -i kx / (kx^2 + eta^2); exactly zero
/// on kx = 0 and on the Nyquist column.
AlignedVector<cplx> antiderivative_multiplier(const Grid2D& grid);

SpectralField spectral_derivative(const SpectralField& f, int order_x, int order_y);
SpectralField spectral_derivative(const RealField& f, int order_x, int order_y);
/// Physical-space derivative (transforms in and out).
RealField physical_derivative(const SpectralField& f, int order_x, int order_y);

SpectralField antiderivative_x(const SpectralField& f);
SpectralField antiderivative_x(const RealField& f);

/// Zero every coefficient with modulus below `threshold`.
SpectralField krasny_filter(SpectralField f, double threshold);
std::size_t krasny_filter_inplace(SpectralField& f, double threshold);

/// Zero modes outside the 2/3 box (optional dealiasing of products).
void dealias_two_thirds(SpectralField& f);

/// Integral of f^2 over the domain from the coefficients (Parseval).
double spectral_energy(const SpectralField& f);
/// Integral of f^2 over the domain from physical samples.
double physical_energy(const RealField& f);

/// Largest coefficient modulus with max(|kx|/kx_max, |ky|/ky_max) >= 1 - shell.
double spectral_tail(const SpectralField& f, double shell = 0.1);

/// Partial derivatives of the trigonometric interpolant at one off-grid
/// point; entry [p][q] holds d^p/dx^p d^q/dy^q. Nyquist lines are dropped.
struct DerivativeTable {
  static constexpr int kMaxX = 4;
  static constexpr int kMaxY = 3;
  std::array<std::array<double, kMaxY + 1>, kMaxX + 1> d{};
  double operator()(int p, int q) const { return d[p][q]; }
};

/// Exact trigonometric-series evaluation of a spectral field away from the
/// grid, O(nx*ny) per point.
class PointEvaluator {
 public:
  explicit PointEvaluator(const SpectralField& f);
  DerivativeTable at(double x, double y) const;
  double value(double x, double y) const { return at(x, y)(0, 0); }

 private:
  const SpectralField* field_;
};

/// Values of d^p/dx^p d^q/dy^q of the interpolant on the tensor product
/// xs x ys (row-major, x fastest); separable, O(ny * nx * |xs| + ...).
std::vector<double> evaluate_tensor(const SpectralField& f, const std::vector<double>& xs,
                                    const std::vector<double>& ys, int order_x = 0,
                                    int order_y = 0);

}  // namespace dkp
