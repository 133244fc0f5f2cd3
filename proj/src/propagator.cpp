#include "invosc/propagator.hpp"

#include <cmath>
#include <set>
#include <string>

#include "invosc/error.hpp"
#include "invosc/kernels.hpp"

namespace invosc {

ComovingField::ComovingField(const BoxConfig& box, int m, std::vector<cplx> values, double t_lab)
    : box_(box), grid_(0.0, box.l0(), m), values_(std::move(values)), t_lab_(t_lab)
{
    if (values_.size() != grid_.size())
        throw Error(ErrorCode::InvalidArgument, "comoving field needs m + 1 samples");
    if (values_.front() != cplx{} || values_.back() != cplx{})
        throw Error(ErrorCode::InvalidArgument, "comoving field must vanish at both walls");
    if (!std::isfinite(t_lab))
        throw Error(ErrorCode::InvalidArgument, "lab time must be finite");
}

double ComovingField::norm() const
{
    return std::sqrt(kernels::parallel::sum_abs2(values_, grid_.spacing()));
}

cplx ComovingField::mode_overlap(int n) const
{
    const double k = n * std::numbers::pi / box_.l0();
    const double amp = std::sqrt(2.0 / box_.l0());
    cplx acc = 0.0;
    for (std::size_t j = 1; j + 1 < values_.size(); ++j)
        acc += amp * std::sin(k * grid_.point(j)) * values_[j];
    return acc * grid_.spacing();
}

ComovingField init_mode_superposition(const BoxConfig& box, std::span<const ModeCoefficient> coeffs, int m)
{
    if (coeffs.empty())
        throw Error(ErrorCode::InvalidSuperposition, "no mode coefficients given");
    std::set<int> seen;
    bool any_nonzero = false;
    for (const auto& c : coeffs) {
        if (c.n < 1)
            throw Error(ErrorCode::InvalidSuperposition, "mode index must be >= 1, got " + std::to_string(c.n));
        if (!seen.insert(c.n).second)
            throw Error(ErrorCode::InvalidSuperposition, "duplicate mode index " + std::to_string(c.n));
        if (!std::isfinite(c.amplitude.real()) || !std::isfinite(c.amplitude.imag()))
            throw Error(ErrorCode::InvalidSuperposition, "non-finite amplitude");
        any_nonzero = any_nonzero || c.amplitude != cplx{};
    }
    if (!any_nonzero)
        throw Error(ErrorCode::InvalidSuperposition, "all amplitudes are zero");

    const Grid1D grid(0.0, box.l0(), m);
    const double omega = box.omega();
    std::vector<cplx> values(grid.size());
    for (const auto& c : coeffs) {
        const ConfinedMode mode = make_confined_mode(c.n, box);
        // Constant phase so that the lab mapping at t = 0 is the corrected psi1.
        const cplx phase = omega == 0.0 ? cplx(1.0) : std::polar(1.0, mode.epsilon() / (4.0 * omega));
        const cplx weight = c.amplitude * mode.norm() * phase;
        for (std::size_t j = 1; j + 1 < values.size(); ++j)
            values[j] += weight * std::sin(mode.sqrt_epsilon() * grid.point(j));
    }
    return ComovingField(box, m, std::move(values), 0.0);
}

CrankNicolsonStepper::CrankNicolsonStepper(const Grid1D& grid, double dtau)
    : dtau_(dtau)
{
    if (!(dtau > 0.0) || !std::isfinite(dtau))
        throw Error(ErrorCode::InvalidArgument, "dtau must be finite and > 0");
    const long double dy = grid.spacing();
    const long double r = static_cast<long double>(dtau) / (dy * dy);
    diag_ = wide(1.0L, r);
    off_ = wide(0.0L, -0.5L * r);
    rhs_diag_ = wide(1.0L, -r);
    rhs_off_ = wide(0.0L, 0.5L * r);

    const std::size_t unknowns = grid.size() - 2;
    c_prime_.resize(unknowns);
    inv_denom_.resize(unknowns);
    rhs_.resize(unknowns);
    wide prev_c = 0.0L;
    for (std::size_t k = 0; k < unknowns; ++k) {
        inv_denom_[k] = 1.0L / (diag_ - off_ * prev_c);
        c_prime_[k] = off_ * inv_denom_[k];
        prev_c = c_prime_[k];
    }
}

void CrankNicolsonStepper::advance(std::span<cplx> values) const
{
    const std::size_t unknowns = c_prime_.size();
    if (values.size() != unknowns + 2)
        throw Error(ErrorCode::InvalidGrid, "field size does not match stepper");
    const auto at = [&](std::size_t j) { return wide(values[j].real(), values[j].imag()); };
    for (std::size_t k = 0; k < unknowns; ++k) {
        const std::size_t j = k + 1;
        rhs_[k] = rhs_diag_ * at(j) + rhs_off_ * (at(j - 1) + at(j + 1));
    }
    // Forward sweep overwrites rhs_ with d'.
    wide prev_d = 0.0L;
    for (std::size_t k = 0; k < unknowns; ++k) {
        rhs_[k] = (rhs_[k] - off_ * prev_d) * inv_denom_[k];
        prev_d = rhs_[k];
    }
    wide next = 0.0L;
    for (std::size_t k = unknowns; k-- > 0;) {
        next = rhs_[k] - c_prime_[k] * next;
        values[k + 1] = cplx(static_cast<double>(next.real()), static_cast<double>(next.imag()));
    }
}

ComovingField cn_step(const ComovingField& field, double dtau)
{
    ComovingField out = field;
    CrankNicolsonStepper(field.grid(), dtau).advance(out);
    return out;
}

ComovingField propagate_to(ComovingField field, double t_target, int steps)
{
    if (!std::isfinite(t_target) || !(t_target > field.t_lab()))
        throw Error(ErrorCode::InvalidTargetTime, "target time must be later than the field's lab time");
    if (steps < 1)
        throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");
    const OscillatorParams params = field.box().params();
    const double span = tau_of(params, t_target) - tau_of(params, field.t_lab());
    if (span > 0.0) {
        const CrankNicolsonStepper stepper(field.grid(), span / steps);
        for (int s = 0; s < steps; ++s) stepper.advance(field);
    }
    field.t_lab_ = t_target;
    return field;
}

LabField lab_frame(const ComovingField& field)
{
    const double omega = field.box().omega();
    const double t = field.t_lab();
    const Grid1D x_grid = field.grid().scaled(scale_factor(field.box().params(), t));
    const double damping = std::exp(-omega * t);
    std::vector<cplx> values(x_grid.size());
    const std::span<const cplx> phi = field.values();
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const double x = x_grid.point(static_cast<std::size_t>(j));
        values[j] = std::polar(damping, 0.5 * omega * x * x) * phi[j];
    }
    return LabField{x_grid, std::move(values), t};
}

double lab_norm(const LabField& field)
{
    return std::sqrt(kernels::parallel::sum_abs2(field.values, field.x_grid.spacing()));
}

double lab_l2_error(const LabField& field, const Evaluator& exact)
{
    std::vector<cplx> diff(field.values.size());
    kernels::parallel::sample(field.x_grid, [&](double x) { return exact(x, field.t_lab); }, diff);
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = field.values[j] - diff[j];
    return std::sqrt(kernels::parallel::sum_abs2(diff, field.x_grid.spacing()));
}

}  // namespace invosc
