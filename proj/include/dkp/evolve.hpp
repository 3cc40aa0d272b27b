#pragma once

#include "dkp/errors.hpp"
#include "dkp/etd.hpp"
#include "dkp/models.hpp"

#include <cstddef>
#include <vector>

namespace dkp {

struct EvolveSettings {
  double t0 = 0.0;
  double t_end = 0.0;
  std::size_t nt = 0;
  double krasny_threshold = 1e-10;
};

/// What an observer sees after each step. `previous` is the state at
/// `t_prev`, kept so observers can re-integrate short sub-intervals.
struct StepContext {
  std::size_t step = 0;
  double t = 0.0;
  double t_prev = 0.0;
  const SpectralField* state = nullptr;
  const SpectralField* previous = nullptr;
  ModelBinding* model = nullptr;
  const EvolveSettings* settings = nullptr;
};

class Observer {
 public:
  virtual ~Observer() = default;
  /// Called once with step = 0 at t0 (previous == state).
  virtual void on_start(const StepContext&) {}
  /// Return false to stop the march after this step.
  virtual bool on_step(const StepContext& ctx) = 0;
  virtual void on_finish(const StepContext&) {}
};

struct EvolveResult {
  SpectralField state;
  double t = 0.0;
  std::size_t steps = 0;
  bool stopped_early = false;
};

/// Raised when the march produces a non-finite state; carries the last
/// finite state.
class EvolveBlowUp : public BlowUpError {
 public:
  EvolveBlowUp(double t, SpectralField last, double t_last)
      : BlowUpError(t, "solution blew up"), last_(std::move(last)), t_last_(t_last) {}
  const SpectralField& last_state() const { return last_; }
  double last_time() const { return t_last_; }

 private:
  SpectralField last_;
  double t_last_;
};

/// Fixed-step ETD4RK march with the Krasny filter after every step.
EvolveResult evolve(ModelBinding& model, SpectralField initial, const EvolveSettings& settings,
                    const std::vector<Observer*>& observers = {});

/// Advance `state` from t by one step of size h (fresh tableau), then filter.
SpectralField advance(ModelBinding& model, const SpectralField& state, double t, double h,
                      double krasny_threshold);

/// Advance from t0 to t1 in n equal steps.
SpectralField advance_to(ModelBinding& model, const SpectralField& state, double t0, double t1,
                         std::size_t n, double krasny_threshold);

}  // namespace dkp
