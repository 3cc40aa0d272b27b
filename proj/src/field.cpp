#include "dkp/field.hpp"

#include "dkp/errors.hpp"
#include "dkp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace dkp {

RealField::RealField(GridPtr grid, double fill)
    : grid_(std::move(grid)), values_(grid_->physical_size(), fill) {}

SpectralField::SpectralField(GridPtr grid)
    : grid_(std::move(grid)), coeffs_(grid_->spectral_size(), cplx{}) {}

cplx SpectralField::coefficient(std::size_t iy, std::size_t ix) const {
  const std::size_t nx = grid_->nx();
  const std::size_t ny = grid_->ny();
  if (ix >= nx || iy >= ny) throw ContractError("spectral index out of range");
  if (ix <= nx / 2) return (*this)(iy, ix);
  // c(ky, kx) = conj(c(-ky, -kx))
  const std::size_t my = (ny - iy) % ny;
  return std::conj((*this)(my, nx - ix));
}

double hermitian_defect(const SpectralField& f) {
  const auto& g = *f.grid();
  double worst = 0.0;
  double scale = 0.0;
  for (auto c : f.values()) scale = std::max(scale, std::abs(c));
  for (std::size_t j : {std::size_t{0}, g.nx() / 2}) {
    for (std::size_t iy = 0; iy < g.ny(); ++iy) {
      const std::size_t my = (g.ny() - iy) % g.ny();
      worst = std::max(worst, std::abs(f(iy, j) - std::conj(f(my, j))));
    }
  }
  return worst / (scale + 1.0);
}

bool all_finite(const RealField& f) { return kernels::parallel::all_finite(f.values()); }
bool all_finite(const SpectralField& f) { return kernels::parallel::all_finite(f.values()); }

}  // namespace dkp
