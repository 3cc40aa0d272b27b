#include "dkp/etd.hpp"

#include "dkp/errors.hpp"
#include "dkp/kernels.hpp"

#include <cmath>
#include <numbers>

namespace dkp {

namespace {

EtdWeights closed_form(cplx z, double h) {
  const cplx ez = std::exp(z);
  const cplx ez2 = std::exp(0.5 * z);
  const cplx z2 = z * z;
  const cplx z3 = z2 * z;
  EtdWeights w;
  w.e = ez;
  w.e2 = ez2;
  w.q = h * (ez2 - 1.0) / z;
  w.f1 = h * (-4.0 - z + ez * (4.0 - 3.0 * z + z2)) / z3;
  w.f2 = h * (2.0 + z + ez * (z - 2.0)) / z3;
  w.f3 = h * (-4.0 - 3.0 * z - z2 + ez * (4.0 - z)) / z3;
  return w;
}

EtdWeights contour_mean(cplx z, double h) {
  // Each weight is analytic in z, so its value at z equals the mean of its
  // values on a circle around z (radius 1 keeps every node away from 0).
  EtdWeights w{};
  for (int m = 0; m < kContourPoints; ++m) {
    const double th = std::numbers::pi * (m + 0.5) / kContourPoints * 2.0;
    const EtdWeights p = closed_form(z + std::polar(1.0, th), h);
    w.q += p.q;
    w.f1 += p.f1;
    w.f2 += p.f2;
    w.f3 += p.f3;
  }
  const double s = 1.0 / kContourPoints;
  w.q *= s;
  w.f1 *= s;
  w.f2 *= s;
  w.f3 *= s;
  w.e = std::exp(z);
  w.e2 = std::exp(0.5 * z);
  // real z gives real weights; drop the contour roundoff
  if (z.imag() == 0.0) {
    w.q.imag(0.0);
    w.f1.imag(0.0);
    w.f2.imag(0.0);
    w.f3.imag(0.0);
  }
  return w;
}

}  // namespace

EtdWeights etd_weights(cplx lambda, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ContractError("time step must be positive");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw ContractError("non-finite linear multiplier");
  const cplx z = lambda * dt;
  return std::abs(z) < kContourSwitch ? contour_mean(z, dt) : closed_form(z, dt);
}

EtdTableau build_tableau(const DiagonalOperator& op, double dt) {
  const std::size_t n = op.multipliers.size();
  EtdTableau t;
  t.dt = dt;
  t.e.resize(n);
  t.e2.resize(n);
  t.q.resize(n);
  t.f1.resize(n);
  t.f2.resize(n);
  t.f3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const EtdWeights w = etd_weights(op.multipliers[i], dt);
    t.e[i] = w.e;
    t.e2[i] = w.e2;
    t.q[i] = w.q;
    t.f1[i] = w.f1;
    t.f2[i] = w.f2;
    t.f3[i] = w.f3;
  }
  return t;
}

EtdStepper::EtdStepper(GridPtr grid)
    : nv_(grid), na_(grid), nb_(grid), nc_(grid), a_(grid), b_(grid), c_(grid), acc_(grid) {}

void EtdStepper::step(SpectralField& v, double t, const EtdTableau& tab, const NonlinearFn& nonlinear) {
  namespace k = kernels::parallel;
  const double h = tab.dt;
  if (tab.e.size() != v.size()) throw ContractError("tableau does not match the state size");

  nonlinear(v, t, nv_);
  k::etd_stage(a_.values(), tab.e2, v.values(), tab.q, nv_.values());
  nonlinear(a_, t + 0.5 * h, na_);
  k::etd_stage(b_.values(), tab.e2, v.values(), tab.q, na_.values());
  nonlinear(b_, t + 0.5 * h, nb_);
  k::etd_stage_c(c_.values(), tab.e2, a_.values(), tab.q, nb_.values(), nv_.values());
  nonlinear(c_, t + h, nc_);

  k::multiply(acc_.values(), tab.e, v.values());
  k::etd_accumulate(acc_.values(), tab.f1, nv_.values(), 1.0);
  k::etd_accumulate(acc_.values(), tab.f2, na_.values(), 2.0);
  k::etd_accumulate(acc_.values(), tab.f2, nb_.values(), 2.0);
  k::etd_accumulate(acc_.values(), tab.f3, nc_.values(), 1.0);
  if (!k::all_finite(std::span<const cplx>(acc_.values())))
    throw BlowUpError(t + h, "non-finite state after ETD step");
  std::swap(v, acc_);
}

SpectralField etd_step(const SpectralField& state, double t, const EtdTableau& tableau,
                       const NonlinearFn& nonlinear) {
  EtdStepper stepper(state.grid());
  SpectralField v = state;
  stepper.step(v, t, tableau, nonlinear);
  return v;
}

}  // namespace dkp
