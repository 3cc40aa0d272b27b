#pragma once

#include "dkp/aligned.hpp"
#include "dkp/grid.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <variant>

namespace dkp {

using cplx = std::complex<double>;

/// Physical-space samples of a real scalar, ny rows by nx columns.
class RealField {
 public:
  RealField() = default;
  explicit RealField(GridPtr grid, double fill = 0.0);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  double& operator()(std::size_t iy, std::size_t ix) { return values_[iy * grid_->nx() + ix]; }
  double operator()(std::size_t iy, std::size_t ix) const { return values_[iy * grid_->nx() + ix]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

 private:
  GridPtr grid_;
  AlignedVector<double> values_;
};

/// Fourier coefficients of a real field in the half layout, normalized so
/// that the (0,0) coefficient is the mean of the physical samples.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(GridPtr grid);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return coeffs_.size(); }

  cplx& operator()(std::size_t iy, std::size_t jx) { return coeffs_[iy * grid_->nxh() + jx]; }
  const cplx& operator()(std::size_t iy, std::size_t jx) const {
    return coeffs_[iy * grid_->nxh() + jx];
  }

  /// Coefficient at full-layout indices (0 <= ix < nx), reconstructing the
  /// negative-kx half from Hermitian symmetry.
  cplx coefficient(std::size_t iy, std::size_t ix) const;

  std::span<cplx> values() { return coeffs_; }
  std::span<const cplx> values() const { return coeffs_; }
  cplx* data() { return coeffs_.data(); }
  const cplx* data() const { return coeffs_.data(); }

 private:
  GridPtr grid_;
  AlignedVector<cplx> coeffs_;
};

enum class Representation { physical, spectral };
enum class Direction { forward, inverse };

/// Representation-tagged field for callers that only know the tag at runtime.
using Field2D = std::variant<RealField, SpectralField>;

inline Representation representation(const Field2D& f) {
  return std::holds_alternative<RealField>(f) ? Representation::physical : Representation::spectral;
}

/// Largest |imag| / (max|real| + 1) violation of Hermitian symmetry among
/// the self-conjugate columns (kx = 0 and Nyquist).
double hermitian_defect(const SpectralField& f);

bool all_finite(const RealField& f);
bool all_finite(const SpectralField& f);

}  // namespace dkp
