#pragma once

#include "dkp/field.hpp"

namespace dkp {

enum class PlanRigor { estimate, measure };

/// Global FFT settings; call before the first transform of a given size.
void set_fft_threads(int threads);
void set_fft_rigor(PlanRigor rigor);

SpectralField forward(const RealField& f);
RealField inverse(const SpectralField& f);

/// Allocation-free variants; `out` must already be shaped for the grid.
void forward_into(const RealField& in, SpectralField& out);
void inverse_into(const SpectralField& in, RealField& out);

/// Runtime-tagged transform. Throws ContractError when the representation
/// does not match the direction.
Field2D transform(const Field2D& field, Direction direction);

}  // namespace dkp
