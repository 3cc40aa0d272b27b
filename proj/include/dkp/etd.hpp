#pragma once

#include "dkp/field.hpp"

#include <functional>

namespace dkp {

/// Diagonal linear operator in the half spectral layout.
struct DiagonalOperator {
  GridPtr grid;
  AlignedVector<cplx> multipliers;
};

/// Cox-Matthews ETD4RK weights for one step size. With z = L h:
///   e = e^z, e2 = e^{z/2}, q = h (e^{z/2} - 1)/z,
///   f1 = h (-4 - z + e^z (4 - 3z + z^2))/z^3,
///   f2 = h (2 + z + e^z (z - 2))/z^3,
///   f3 = h (-4 - 3z - z^2 + e^z (4 - z))/z^3.
struct EtdTableau {
  double dt = 0.0;
  AlignedVector<cplx> e, e2, q, f1, f2, f3;
};

struct EtdWeights {
  cplx e, e2, q, f1, f2, f3;
};

/// Points on the unit circle used when |z| < kContourSwitch.
inline constexpr int kContourPoints = 32;
inline constexpr double kContourSwitch = 0.5;

/// Weights for a single multiplier value.
EtdWeights etd_weights(cplx lambda, double dt);

EtdTableau build_tableau(const DiagonalOperator& op, double dt);

/// out = N(in, t). Must not alias.
using NonlinearFn = std::function<void(const SpectralField& in, double t, SpectralField& out)>;

/// One ETD4RK step with reusable scratch. Not thread-safe per instance.
class EtdStepper {
 public:
  explicit EtdStepper(GridPtr grid);

  /// Advances `state` from t to t + tableau.dt in place. Throws BlowUpError
  /// (carrying the end time) if the result is not finite; `state` is then
  /// left untouched.
  void step(SpectralField& state, double t, const EtdTableau& tableau, const NonlinearFn& nonlinear);

 private:
  SpectralField nv_, na_, nb_, nc_, a_, b_, c_, acc_;
};

SpectralField etd_step(const SpectralField& state, double t, const EtdTableau& tableau,
                       const NonlinearFn& nonlinear);

}  // namespace dkp
