#include "dkp/evolve.hpp"

#include "dkp/spectral.hpp"

namespace dkp {

EvolveResult evolve(ModelBinding& model, SpectralField initial, const EvolveSettings& settings,
                    const std::vector<Observer*>& observers) {
  if (settings.nt == 0 || !(settings.t_end > settings.t0))
    throw ContractError("evolve needs nt > 0 and t_end > t0");
  if (!initial.grid()->same_shape(*model.grid())) throw ContractError("state/model grid mismatch");

  const double h = (settings.t_end - settings.t0) / static_cast<double>(settings.nt);
  const EtdTableau tableau = build_tableau(model.linear(), h);
  EtdStepper stepper(model.grid());
  const NonlinearFn nl = model.stage_function();

  SpectralField state = std::move(initial);
  SpectralField previous = state;
  StepContext ctx;
  ctx.model = &model;
  ctx.settings = &settings;
  ctx.t = ctx.t_prev = settings.t0;
  ctx.state = &state;
  ctx.previous = &previous;
  for (Observer* o : observers) o->on_start(ctx);

  EvolveResult result;
  std::size_t n = 0;
  for (; n < settings.nt; ++n) {
    const double t = settings.t0 + static_cast<double>(n) * h;
    const double t_next = n + 1 == settings.nt ? settings.t_end : t + h;
    std::copy(state.values().begin(), state.values().end(), previous.values().begin());
    try {
      stepper.step(state, t, tableau, nl);
    } catch (const BlowUpError& e) {
      throw EvolveBlowUp(std::max(e.time(), t + h), previous, t);
    }
    krasny_filter_inplace(state, settings.krasny_threshold);

    ctx.step = n + 1;
    ctx.t_prev = t;
    ctx.t = t_next;
    bool go = true;
    for (Observer* o : observers) go = o->on_step(ctx) && go;
    if (!go) {
      result.stopped_early = true;
      ++n;
      break;
    }
  }
  for (Observer* o : observers) o->on_finish(ctx);
  result.t = ctx.t;
  result.steps = n;
  result.state = std::move(state);
  return result;
}

SpectralField advance(ModelBinding& model, const SpectralField& state, double t, double h,
                      double krasny_threshold) {
  if (h == 0.0) return state;
  SpectralField out = etd_step(state, t, build_tableau(model.linear(), h), model.stage_function());
  krasny_filter_inplace(out, krasny_threshold);
  return out;
}

SpectralField advance_to(ModelBinding& model, const SpectralField& state, double t0, double t1,
                         std::size_t n, double krasny_threshold) {
  if (n == 0) throw ContractError("advance_to needs at least one step");
  const double h = (t1 - t0) / static_cast<double>(n);
  if (h == 0.0) return state;
  const EtdTableau tab = build_tableau(model.linear(), h);
  EtdStepper stepper(model.grid());
  const NonlinearFn nl = model.stage_function();
  SpectralField v = state;
  for (std::size_t i = 0; i < n; ++i) {
    stepper.step(v, t0 + static_cast<double>(i) * h, tab, nl);
    krasny_filter_inplace(v, krasny_threshold);
  }
  return v;
}

}  // namespace dkp
