#include "dkp/grid.hpp"

#include "dkp/errors.hpp"

#include <cmath>
#include <numbers>

namespace dkp {

namespace {
bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<double> wavenumbers(std::size_t n, double dk) {
  std::vector<double> k(n);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = static_cast<std::ptrdiff_t>(i);
    if (s >= half) s -= static_cast<std::ptrdiff_t>(n);
    k[i] = static_cast<double>(s) * dk;
  }
  return k;
}
}  // namespace

Grid2D::Grid2D(std::size_t nx, std::size_t ny, double half_width_x, double half_width_y)
    : nx_(nx), ny_(ny), lx_(half_width_x), ly_(half_width_y) {
  if (!power_of_two(nx) || !power_of_two(ny) || nx < 8 || ny < 8)
    throw ContractError("grid sizes must be powers of two >= 8");
  if (!(half_width_x > 0.0) || !(half_width_y > 0.0) || !std::isfinite(half_width_x) ||
      !std::isfinite(half_width_y))
    throw ContractError("grid half widths must be positive and finite");
  dkx_ = std::numbers::pi / lx_;
  dky_ = std::numbers::pi / ly_;
  kx_ = wavenumbers(nx, dkx_);
  ky_ = wavenumbers(ny, dky_);
}

GridPtr make_grid(std::size_t nx, std::size_t ny, double half_width_x, double half_width_y) {
  return std::make_shared<const Grid2D>(nx, ny, half_width_x, half_width_y);
}

}  // namespace dkp
