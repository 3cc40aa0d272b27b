#pragma once

#include "dkp/curves.hpp"
#include "dkp/evolve.hpp"
#include "dkp/field.hpp"
#include "dkp/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dkp {

/// Delta = 1 + t F_xi on the grid.
RealField delta_field(const SpectralField& f, double t);
RealField delta_field(const RealField& f, double t);

/// Samples (x, y, u) with x = xi + t F and u = F on the (xi, y) grid; y is
/// the grid row coordinate.
struct ParametricSurface {
  GridPtr grid;
  double t = 0.0;
  RealField x;
  RealField u;
};

ParametricSurface reconstruct_u(const RealField& f, double t);

/// Rectangular sub-window of the (xi, y) plane sampled by trigonometric
/// interpolation.
struct Patch {
  double xi0, xi1, y0, y1;
  std::size_t n_xi = 256, n_y = 256;
};

/// Images under xi -> xi + t F of the Delta = 0 contours, one curve per
/// connected component. Empty when Delta > 0 everywhere.
std::vector<LipCurve> multivalued_boundary(const SpectralField& f, double t);
std::vector<LipCurve> multivalued_boundary(const SpectralField& f, double t, const Patch& patch);

/// Result of Newton-polishing a minimum of Delta.
struct DeltaMinimum {
  double xi = 0.0, y = 0.0;
  double delta = 0.0;
  double grad_norm = 0.0;
  bool hessian_ok = false;
};

DeltaMinimum polish_delta_minimum(const SpectralField& f, double t, double xi0, double y0);

/// Position part of a critical point.
struct CriticalPoint {
  double t = 0.0, x = 0.0, y = 0.0, u = 0.0, xi = 0.0;
  double delta = 0.0;
};

struct CriticalBundle {
  double t_c = 0.0, x_c = 0.0, y_c = 0.0, u_c = 0.0, xi_c = 0.0;
  double F = 0.0, F_xi = 0.0, F_xixi = 0.0, F_xixixi = 0.0, F_xixiy = 0.0, F_xiyy = 0.0;
  double F_xiy = 0.0, F_y = 0.0, F_yy = 0.0, F_yyy = 0.0;
  double F_t = 0.0, F_ty = 0.0, F_xit = 0.0;
  double epsilon = 0.0, c = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta1 = 0.0, delta2 = 0.0;
  double k = 0.0, beta_bar = 0.0, sigma = 0.0;
};

/// Fill the derived constants from the raw derivatives (epsilon, c included).
void complete_bundle(CriticalBundle& b);

inline constexpr double kDegenerateCubic = 1e-8;

/// Derivatives at (xi_c, y_c) by exact trigonometric summation; the time
/// derivatives come from the model right-hand side. Throws DegeneracyError
/// when |F_xixixi| < kDegenerateCubic.
CriticalBundle critical_bundle(const SpectralField& f, const CriticalPoint& p, ModelBinding& model,
                               double epsilon = 0.0, double c = 0.0);

/// Residuals of F_t + t F_y^2 = 0, F_xit = 0, F_ty + 2 t F_yy F_y = 0, each
/// divided by the larger of its biggest term and |F|/t_c.
struct ConstraintResiduals {
  double residual[3]{};
  double scale[3]{};
  double relative(int i) const { return std::abs(residual[i]) / scale[i]; }
  double worst() const;
  bool pass(double tol = 1e-2) const { return worst() <= tol; }
};

ConstraintResiduals verify_constraints(const CriticalBundle& b);

std::string format_bundle(const CriticalBundle& b);
/// Throws ParseError on unknown keys, malformed numbers or missing fields.
CriticalBundle parse_bundle(const std::string& text);
void write_bundle(const std::string& path, const CriticalBundle& b);
CriticalBundle read_bundle(const std::string& path);

struct DetectorSettings {
  double t_tol = 1e-4;
  double exclusion_radius = 1.0;
  std::size_t max_events = 1;
  bool stop_when_done = true;
  /// Only grid minima below this are Newton-polished.
  double polish_below = 0.05;
};

struct DetectedEvent {
  CriticalPoint point;
  SpectralField state;  ///< F at t_c
  std::size_t step = 0;
};

/// Observer that traces min Delta and locates successive catastrophes.
class CatastropheDetector : public Observer {
 public:
  explicit CatastropheDetector(DetectorSettings settings = {});

  void on_start(const StepContext& ctx) override;
  bool on_step(const StepContext& ctx) override;

  const std::vector<DetectedEvent>& events() const { return events_; }
  /// (t, grid min of Delta) per step.
  const std::vector<std::pair<double, double>>& min_delta_series() const { return series_; }
  /// Time of the first step at which the grid min of Delta was negative.
  std::optional<double> first_negative_step() const { return first_negative_; }

 private:
  struct Candidate {
    double xi, y, value;
  };
  std::vector<Candidate> candidates(const RealField& delta) const;
  DetectedEvent refine(const StepContext& ctx, const Candidate& c, const DeltaMinimum& now);

  DetectorSettings settings_;
  std::vector<DetectedEvent> events_;
  std::vector<std::pair<double, double>> series_;
  std::optional<double> first_negative_;
};

}  // namespace dkp
