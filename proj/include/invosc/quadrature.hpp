#pragma once

#include <functional>

#include "invosc/analytic.hpp"
#include "invosc/grid.hpp"
#include "invosc/kernels.hpp"

namespace invosc {

/// Default interval count for verification-grade quadrature.
inline constexpr int default_quadrature_intervals = 8192;

using Evaluator = std::function<cplx(double x, double t)>;

template <class F>
SampledField sample_field(const Grid1D& grid, F&& f)
{
    std::vector<cplx> values(grid.size());
    kernels::parallel::sample(grid, f, values);
    return SampledField(grid, std::move(values));
}

/// Samples a confined mode on [0, box_length(t)] with m intervals.
SampledField sample_confined(const ConfinedMode& mode, double t, int m,
                             PhaseConvention conv = PhaseConvention::Corrected);

/// Composite Simpson estimate of the integral; throws Error(InvalidGrid) for odd m.
cplx simpson_integrate(const SampledField& field);

/// Integral of conj(f) g over the shared grid; throws Error(IncompatibleGrids) otherwise.
cplx inner_product(const SampledField& f, const SampledField& g);

/// Samples of -f'' - omega^2 x^2 f. Needs m >= 16.
SampledField apply_hamiltonian(const SampledField& field, OscillatorParams params);

/// <psi1|H|psi1> over [0, box_length(t)] by 4th-order differences and Simpson.
cplx expectation_energy(const ConfinedMode& mode, double t, int m = default_quadrature_intervals,
                        PhaseConvention conv = PhaseConvention::Corrected);

/// <psi1| i d/dt |psi1> with a central time difference of step dt. Equals
/// expectation_energy for an exact solution of the Schrodinger equation.
cplx time_derivative_energy(const ConfinedMode& mode, double t, double dt, int m = default_quadrature_intervals,
                            PhaseConvention conv = PhaseConvention::Corrected);

/// max over the region interior of |i dpsi/dt + psi_xx + omega^2 x^2 psi| with a
/// central time difference of step dt and 4th-order spatial stencils.
double schrodinger_residual(const Evaluator& evaluator, const Grid1D& region, double t, double dt,
                            OscillatorParams params);

}  // namespace invosc
