#include "invosc/quadrature.hpp"

#include <cmath>

#include "invosc/error.hpp"

namespace invosc {

SampledField sample_confined(const ConfinedMode& mode, double t, int m, PhaseConvention conv)
{
    const Grid1D grid(0.0, box_length(mode.box(), t), m);
    return sample_field(grid, [&](double x) { return psi1_eval(mode, x, t, conv); });
}

cplx simpson_integrate(const SampledField& field)
{
    return kernels::parallel::simpson(field.values(), field.grid().spacing());
}

cplx inner_product(const SampledField& f, const SampledField& g)
{
    if (!(f.grid() == g.grid()))
        throw Error(ErrorCode::IncompatibleGrids, "inner product operands live on different grids");
    return kernels::parallel::simpson_conj_product(f.values(), g.values(), f.grid().spacing());
}

SampledField apply_hamiltonian(const SampledField& field, OscillatorParams params)
{
    if (field.grid().intervals() < 16)
        throw Error(ErrorCode::InvalidGrid, "Hamiltonian stencils need at least 16 intervals");
    std::vector<cplx> out(field.grid().size());
    kernels::parallel::apply_hamiltonian(field.values(), field.grid(), params.omega, out);
    return SampledField(field.grid(), std::move(out));
}

cplx expectation_energy(const ConfinedMode& mode, double t, int m, PhaseConvention conv)
{
    const SampledField psi = sample_confined(mode, t, m, conv);
    const SampledField h_psi = apply_hamiltonian(psi, mode.box().params());
    return inner_product(psi, h_psi);
}

cplx time_derivative_energy(const ConfinedMode& mode, double t, double dt, int m, PhaseConvention conv)
{
    if (!(dt > 0.0))
        throw Error(ErrorCode::InvalidArgument, "time step must be > 0");
    // The box moves, so sample all three times on the grid of time t; the
    // evaluator is total on the real line.
    const Grid1D grid(0.0, box_length(mode.box(), t), m);
    const SampledField psi = sample_field(grid, [&](double x) { return psi1_eval(mode, x, t, conv); });
    const SampledField plus = sample_field(grid, [&](double x) { return psi1_eval(mode, x, t + dt, conv); });
    const SampledField minus = sample_field(grid, [&](double x) { return psi1_eval(mode, x, t - dt, conv); });
    std::vector<cplx> i_dt(grid.size());
    const cplx scale(0.0, 1.0 / (2.0 * dt));
    for (std::size_t j = 0; j < i_dt.size(); ++j) i_dt[j] = scale * (plus.values()[j] - minus.values()[j]);
    return inner_product(psi, SampledField(grid, std::move(i_dt)));
}

double schrodinger_residual(const Evaluator& evaluator, const Grid1D& region, double t, double dt,
                            OscillatorParams params)
{
    if (!(dt > 0.0))
        throw Error(ErrorCode::InvalidArgument, "time step must be > 0");
    std::vector<cplx> minus(region.size()), now(region.size()), plus(region.size());
    kernels::parallel::sample(region, [&](double x) { return evaluator(x, t - dt); }, minus);
    kernels::parallel::sample(region, [&](double x) { return evaluator(x, t); }, now);
    kernels::parallel::sample(region, [&](double x) { return evaluator(x, t + dt); }, plus);
    return kernels::parallel::schrodinger_residual_max(minus, now, plus, region, dt, params.omega);
}

}  // namespace invosc
