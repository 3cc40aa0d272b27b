#pragma once

#include "dkp/characteristics.hpp"
#include "dkp/curves.hpp"

#include <vector>

namespace dkp {

/// Local coordinates (X, T) of a point (x_bar, y_bar, t_bar) measured from
/// the critical point; the cubic -zeta^3 + T zeta = X then describes u.
struct LocalXT {
  double X = 0.0;
  double T = 0.0;
};

LocalXT map_XT(double x_bar, double y_bar, double t_bar, const CriticalBundle& b);

/// The shift zeta_0 = F_xi (xi_bar + beta y_bar) at a given xi_bar.
double local_zeta(double xi_bar, double y_bar, const CriticalBundle& b);

/// Real roots of -zeta^3 + T zeta = X in ascending order: one root, or three
/// (with a repeated value on the fold |X| = 2 (T/3)^{3/2}).
std::vector<double> solve_scurve(double X, double T);

/// u values u_c + zeta_i + beta_bar y_bar for every s-curve root.
std::vector<double> local_profile(double x_bar, double y_bar, double t_bar, const CriticalBundle& b);

inline constexpr std::size_t kLipSamples = 1024;

/// Time-independent lip in (X1, Y1). Throws DegeneracyError unless
/// t_c alpha > 0 and gamma > beta^2 (bounded lip).
LipCurve lip_similarity(const CriticalBundle& b, std::size_t samples = kLipSamples);

/// Lip boundary in (x_bar, y_bar) at t_bar > 0.
LipCurve lip_physical(const CriticalBundle& b, double t_bar, std::size_t samples = kLipSamples);

/// (X1, Y1) of a physical point relative to the critical point.
Point2 to_similarity(double x_bar, double y_bar, double t_bar, const CriticalBundle& b);
/// Rescale a curve given in absolute (x, y) to the similarity frame.
LipCurve to_similarity(const LipCurve& absolute, double t_bar, const CriticalBundle& b);

/// Y1 of the lip cusps (symmetric data): sqrt(2 / (t_c alpha gamma)).
double cusp_tip(const CriticalBundle& b);
/// Leading-order |X1| near the cusp: (alpha/3) (2 gamma Y1_tip)^{3/2} (Y1_tip - |Y1|)^{3/2}.
double lip_cusp(const CriticalBundle& b, double Y1);

/// Shock front x_s(y_bar, t_bar): the X = 0 locus.
double shock_front(const CriticalBundle& b, double y_bar, double t_bar);
double shock_front_dt(const CriticalBundle& b, double y_bar);
double shock_front_dy(const CriticalBundle& b, double y_bar, double t_bar);

/// x_s,t - (u1 + u2)/2 + (x_s,y)^2
double rh_residual(double u1, double u2, double xs_t, double xs_y);

}  // namespace dkp
