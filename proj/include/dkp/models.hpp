#pragma once

#include "dkp/etd.hpp"
#include "dkp/field.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace dkp {

enum class ModelKind { transformed, dissipative };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

/// Linear part of the model in the half layout.
///   transformed:  i ky^2 / k_xi
///   dissipative:  i ky^2 / kx - epsilon (kx^2 + c ky^2)
/// 1/k is regularized as k/(k^2 + eta^2), which is exactly 0 on kx = 0.
DiagonalOperator linear_operator(ModelKind kind, const GridPtr& grid, double epsilon, double c);

struct ModelOptions {
  /// Choose the y-dependent constant of the xi-antiderivative so the
  /// xi-mean of F stays zero (transformed model only).
  bool project_mean = true;
  /// Truncate products to the 2/3 box.
  bool dealias = false;
};

/// Binds a model's linear operator and nonlinear stage function to a grid.
/// Holds scratch buffers: one instance per thread.
class ModelBinding {
 public:
  ModelBinding(ModelKind kind, GridPtr grid, double epsilon = 0.0, double c = 0.0,
               ModelOptions options = {});

  ModelKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  double c() const { return c_; }
  const GridPtr& grid() const { return grid_; }
  const ModelOptions& options() const { return options_; }
  const DiagonalOperator& linear() const { return linear_; }

  /// out = N(in, t). Throws BlowUpError on a non-finite intermediate.
  void nonlinear(const SpectralField& in, double t, SpectralField& out);
  NonlinearFn stage_function();

  /// Full right-hand side L in + N(in, t).
  SpectralField rhs(const SpectralField& in, double t);

 private:
  void transformed(const SpectralField& in, double t, SpectralField& out);
  void dissipative(const SpectralField& in, SpectralField& out);

  ModelKind kind_;
  GridPtr grid_;
  double epsilon_, c_;
  ModelOptions options_;
  DiagonalOperator linear_;
  AlignedVector<cplx> dx_, dy_, g0_;
  SpectralField work_;
  RealField fxi_, fy_, g_, prod_;
  std::vector<double> means_;
};

/// t (F_xi d_xi^{-1} F_yy - F_y^2), plus the mean projection when requested.
SpectralField nonlinear_transformed(const SpectralField& f, double t, bool project_mean = true);
/// -(u^2 / 2)_x
SpectralField nonlinear_dissipative(const SpectralField& u);

enum class ProfileId { sym_sech, asym_gauss_radial, asym_gauss_skew, custom };

std::string_view to_string(ProfileId id);
ProfileId parse_profile_id(std::string_view name);

/// Initial data as closed-form x-derivatives:
///   sym_sech           -6 d_x sech^2 sqrt(x^2 + y^2)
///   asym_gauss_radial   6 d_x (x + 1)(y - 1) exp(-x^2 - y^2)
///   asym_gauss_skew     6 d_x exp(-x^2 - 5y^2 - 3xy)
struct InitialProfile {
  ProfileId id = ProfileId::sym_sech;
  double amplitude = 1.0;
  std::function<double(double, double)> custom;

  double operator()(double x, double y) const;
};

RealField initial_profile(const InitialProfile& profile, const GridPtr& grid);

/// Largest |u0| on the domain boundary divided by the largest |u0| on the grid.
double boundary_ratio(const InitialProfile& profile, const GridPtr& grid);

}  // namespace dkp
