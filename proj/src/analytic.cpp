#include "invosc/analytic.hpp"

#include <cmath>
#include <string>

#include "invosc/error.hpp"

namespace invosc {

BoxConfig::BoxConfig(double l0, OscillatorParams params)
    : l0_(l0), params_(params)
{
    if (!std::isfinite(l0) || l0 <= 0.0)
        throw Error(ErrorCode::InvalidArgument, "box length l0 must be finite and > 0, got " + std::to_string(l0));
    if (!std::isfinite(params.omega))
        throw Error(ErrorCode::InvalidArgument, "omega must be finite");
}

const char* to_string(PhaseConvention conv) noexcept
{
    return conv == PhaseConvention::Corrected ? "corrected" : "as-printed";
}

ConfinedMode::ConfinedMode(int n, const BoxConfig& box)
    : n_(n),
      box_(box),
      sqrt_epsilon_(n * std::numbers::pi / box.l0()),
      epsilon_(sqrt_epsilon_ * sqrt_epsilon_),
      norm_(std::sqrt(2.0 / box.l0()))
{
}

ConfinedMode make_confined_mode(int n, const BoxConfig& box)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidQuantumNumber, "quantum number must be >= 1, got " + std::to_string(n));
    return ConfinedMode(n, box);
}

double scale_factor(OscillatorParams params, double t) noexcept
{
    return std::exp(2.0 * params.omega * t);
}

double box_length(const BoxConfig& box, double t) noexcept
{
    return box.l0() * scale_factor(box.params(), t);
}

cplx psi1_eval(const ConfinedMode& mode, double x, double t, PhaseConvention conv)
{
    const double omega = mode.omega();
    const double eps = mode.epsilon();
    if (omega == 0.0) {
        const double s = std::sin(mode.sqrt_epsilon() * x);
        return std::polar(mode.norm() * s, -eps * t);
    }
    const double sign = conv == PhaseConvention::Corrected ? 1.0 : -1.0;
    const double decay = std::exp(-4.0 * omega * t);
    const double phase = 0.5 * omega * x * x + sign * eps / (4.0 * omega) * decay;
    const double amplitude = mode.norm() * std::exp(-omega * t)
                             * std::sin(std::exp(-2.0 * omega * t) * mode.sqrt_epsilon() * x);
    return std::polar(amplitude, phase);
}

cplx psi2_eval(const ScatteringMode& mode, double x, double t)
{
    const double omega = mode.params.omega;
    if (omega == 0.0)
        throw Error(ErrorCode::UndefinedPhase, "psi2 phase k^2/(4 omega) is undefined at omega = 0; use a free plane wave");
    const double k = mode.k;
    const double phase = 0.5 * omega * x * x + k * std::exp(-2.0 * omega * t) * x
                         + k * k / (4.0 * omega) * std::exp(-4.0 * omega * t);
    return std::polar(std::exp(-omega * t), phase);
}

double energy_level(const ConfinedMode& mode, double t) noexcept
{
    return mode.epsilon() * std::exp(-4.0 * mode.omega() * t);
}

double decay_intensity(OscillatorParams params, double t) noexcept
{
    return std::exp(-2.0 * params.omega * t);
}

double decay_rate(OscillatorParams params) noexcept
{
    return 4.0 * params.omega;
}

double tau_of(OscillatorParams params, double t) noexcept
{
    const double omega = params.omega;
    if (omega == 0.0)
        return t;
    // expm1 keeps the omega -> 0 limit continuous.
    return -std::expm1(-4.0 * omega * t) / (4.0 * omega);
}

}  // namespace invosc
