#include "dkp/models.hpp"

#include "dkp/errors.hpp"
#include "dkp/fft.hpp"
#include "dkp/kernels.hpp"
#include "dkp/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace dkp {

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::transformed ? "transformed" : "dissipative";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "transformed") return ModelKind::transformed;
  if (name == "dissipative") return ModelKind::dissipative;
  throw ContractError("unknown model kind '" + std::string(name) + "'");
}

DiagonalOperator linear_operator(ModelKind kind, const GridPtr& grid, double epsilon, double c) {
  if (epsilon < 0.0 || c < 0.0) throw ContractError("epsilon and c must be non-negative");
  const auto& g = *grid;
  DiagonalOperator op{grid, AlignedVector<cplx>(g.spectral_size())};
  const double eta = kAntiderivativeEta * g.dkx();
  const bool diss = kind == ModelKind::dissipative;
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    const double ky = g.ky_at(iy);
    for (std::size_t j = 0; j < g.nxh(); ++j) {
      const double kx = g.kx_half(j);
      const double inv = g.nyquist_x(j) ? 0.0 : kx / (kx * kx + eta * eta);
      cplx m{0.0, ky * ky * inv};
      if (diss) m -= epsilon * (kx * kx + c * ky * ky);
      op.multipliers[iy * g.nxh() + j] = m;
    }
  }
  return op;
}

ModelBinding::ModelBinding(ModelKind kind, GridPtr grid, double epsilon, double c,
                           ModelOptions options)
    : kind_(kind),
      grid_(grid),
      epsilon_(epsilon),
      c_(c),
      options_(options),
      linear_(linear_operator(kind, grid, epsilon, c)),
      work_(grid),
      fxi_(grid),
      fy_(grid),
      g_(grid),
      prod_(grid),
      means_(grid->ny()) {
  if (kind == ModelKind::transformed && epsilon != 0.0)
    throw ContractError("the transformed model has no dissipation");
  dx_ = derivative_multiplier(*grid, 1, 0);
  dy_ = derivative_multiplier(*grid, 0, 1);
  // d_xi^{-1} applied to F_yy: (-i kx/(kx^2+eta^2)) * (-ky^2)
  g0_ = antiderivative_multiplier(*grid);
  const auto dyy = derivative_multiplier(*grid, 0, 2);
  for (std::size_t i = 0; i < g0_.size(); ++i) g0_[i] *= dyy[i];
}

NonlinearFn ModelBinding::stage_function() {
  return [this](const SpectralField& in, double t, SpectralField& out) { nonlinear(in, t, out); };
}

void ModelBinding::nonlinear(const SpectralField& in, double t, SpectralField& out) {
  if (kind_ == ModelKind::transformed)
    transformed(in, t, out);
  else
    dissipative(in, out);
  if (options_.dealias) dealias_two_thirds(out);
}

void ModelBinding::transformed(const SpectralField& in, double t, SpectralField& out) {
  namespace k = kernels::parallel;
  k::multiply(work_.values(), in.values(), dx_);
  inverse_into(work_, fxi_);
  k::multiply(work_.values(), in.values(), dy_);
  inverse_into(work_, fy_);
  k::multiply(work_.values(), in.values(), g0_);
  inverse_into(work_, g_);
  k::transformed_product(prod_.values(), fxi_.values(), g_.values(), fy_.values(), t);
  if (options_.project_mean) {
    k::row_means(means_, prod_.values(), grid_->nx());
    for (double& m : means_) m = -m;
    k::add_row_term(prod_.values(), means_, fxi_.values(), t, grid_->nx());
  }
  if (!k::all_finite(std::span<const double>(prod_.values())))
    throw BlowUpError(t, "non-finite nonlinear term");
  forward_into(prod_, out);
}

void ModelBinding::dissipative(const SpectralField& in, SpectralField& out) {
  namespace k = kernels::parallel;
  inverse_into(in, fxi_);
  k::half_square(prod_.values(), fxi_.values());
  if (!k::all_finite(std::span<const double>(prod_.values())))
    throw BlowUpError(0.0, "non-finite nonlinear term");
  forward_into(prod_, work_);
  k::multiply(out.values(), work_.values(), dx_);
  for (cplx& v : out.values()) v = -v;
}

SpectralField ModelBinding::rhs(const SpectralField& in, double t) {
  SpectralField out(grid_);
  nonlinear(in, t, out);
  const auto& l = linear_.multipliers;
  for (std::size_t i = 0; i < l.size(); ++i) out.values()[i] += l[i] * in.values()[i];
  return out;
}

SpectralField nonlinear_transformed(const SpectralField& f, double t, bool project_mean) {
  ModelBinding m(ModelKind::transformed, f.grid(), 0.0, 0.0, {project_mean, false});
  SpectralField out(f.grid());
  m.nonlinear(f, t, out);
  return out;
}

SpectralField nonlinear_dissipative(const SpectralField& u) {
  ModelBinding m(ModelKind::dissipative, u.grid(), 0.0, 0.0);
  SpectralField out(u.grid());
  m.nonlinear(u, 0.0, out);
  return out;
}

std::string_view to_string(ProfileId id) {
  switch (id) {
    case ProfileId::sym_sech: return "sym_sech";
    case ProfileId::asym_gauss_radial: return "asym_gauss_radial";
    case ProfileId::asym_gauss_skew: return "asym_gauss_skew";
    case ProfileId::custom: return "custom";
  }
  return "custom";
}

ProfileId parse_profile_id(std::string_view name) {
  for (ProfileId id : {ProfileId::sym_sech, ProfileId::asym_gauss_radial,
                       ProfileId::asym_gauss_skew, ProfileId::custom})
    if (to_string(id) == name) return id;
  throw ContractError("unknown initial profile '" + std::string(name) + "'");
}

double InitialProfile::operator()(double x, double y) const {
  switch (id) {
    case ProfileId::sym_sech: {
      const double r = std::hypot(x, y);
      const double s = 1.0 / std::cosh(r);
      // tanh(r)/r -> 1 at the origin
      const double tr = r < 1e-8 ? 1.0 - r * r / 3.0 : std::tanh(r) / r;
      return amplitude * 12.0 * s * s * tr * x;
    }
    case ProfileId::asym_gauss_radial:
      return amplitude * 6.0 * (y - 1.0) * std::exp(-x * x - y * y) * (1.0 - 2.0 * x - 2.0 * x * x);
    case ProfileId::asym_gauss_skew:
      return amplitude * 6.0 * (-2.0 * x - 3.0 * y) * std::exp(-x * x - 5.0 * y * y - 3.0 * x * y);
    case ProfileId::custom:
      if (!custom) throw ContractError("custom profile without an evaluator");
      return amplitude * custom(x, y);
  }
  return 0.0;
}

RealField initial_profile(const InitialProfile& profile, const GridPtr& grid) {
  RealField u(grid);
  const auto& g = *grid;
  for (std::size_t iy = 0; iy < g.ny(); ++iy)
    for (std::size_t ix = 0; ix < g.nx(); ++ix) u(iy, ix) = profile(g.x(ix), g.y(iy));
  return u;
}

double boundary_ratio(const InitialProfile& profile, const GridPtr& grid) {
  const auto& g = *grid;
  double peak = 0.0;
  double edge = 0.0;
  for (std::size_t iy = 0; iy < g.ny(); ++iy) {
    for (std::size_t ix = 0; ix < g.nx(); ++ix) {
      const double v = std::abs(profile(g.x(ix), g.y(iy)));
      peak = std::max(peak, v);
      if (ix == 0 || iy == 0) edge = std::max(edge, v);
    }
  }
  return peak > 0.0 ? edge / peak : 0.0;
}

}  // namespace dkp
