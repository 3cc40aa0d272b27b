#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace dkp {

/// Periodic rectangular grid on [-Lx, Lx) x [-Ly, Ly) with Fourier
/// wavenumber tables in the unshifted FFT layout (non-negative first).
///
/// Spectral arrays use the real-to-complex half layout: ny rows (all ky)
/// by nx/2+1 columns (kx >= 0). Row-major throughout, x fastest.
class Grid2D {
 public:
  Grid2D(std::size_t nx, std::size_t ny, double half_width_x, double half_width_y);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  /// Number of stored spectral columns, nx/2+1.
  std::size_t nxh() const { return nx_ / 2 + 1; }
  std::size_t physical_size() const { return nx_ * ny_; }
  std::size_t spectral_size() const { return ny_ * nxh(); }

  double half_width_x() const { return lx_; }
  double half_width_y() const { return ly_; }
  double dx() const { return 2.0 * lx_ / static_cast<double>(nx_); }
  double dy() const { return 2.0 * ly_ / static_cast<double>(ny_); }
  double dkx() const { return dkx_; }
  double dky() const { return dky_; }
  double cell_area() const { return dx() * dy(); }
  double area() const { return 4.0 * lx_ * ly_; }

  double x(std::size_t ix) const { return -lx_ + static_cast<double>(ix) * dx(); }
  double y(std::size_t iy) const { return -ly_ + static_cast<double>(iy) * dy(); }

  /// Full signed wavenumber tables (length nx and ny).
  const std::vector<double>& kx() const { return kx_; }
  const std::vector<double>& ky() const { return ky_; }
  /// Wavenumber of stored spectral column j (0 <= j <= nx/2).
  double kx_half(std::size_t j) const { return static_cast<double>(j) * dkx_; }
  double ky_at(std::size_t iy) const { return ky_[iy]; }

  bool nyquist_x(std::size_t j) const { return j == nx_ / 2; }
  bool nyquist_y(std::size_t iy) const { return iy == ny_ / 2; }

  bool same_shape(const Grid2D& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && lx_ == o.lx_ && ly_ == o.ly_;
  }

 private:
  std::size_t nx_, ny_;
  double lx_, ly_;
  double dkx_, dky_;
  std::vector<double> kx_, ky_;
};

using GridPtr = std::shared_ptr<const Grid2D>;

GridPtr make_grid(std::size_t nx, std::size_t ny, double half_width_x, double half_width_y);

}  // namespace dkp
