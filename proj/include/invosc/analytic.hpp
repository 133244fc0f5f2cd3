#pragma once

// Closed-form solutions of the inverted oscillator H = -d^2/dx^2 - omega^2 x^2
// in units hbar = hbar^2/2m = 1.
//
// The confined family lives in a box [0, L(t)] whose wall follows the classical
// trajectory L(t) = l0 * exp(2 omega t). Evaluators are total on the real line;
// masking to the box is left to callers.

#include <complex>
#include <numbers>

namespace invosc {

using cplx = std::complex<double>;

struct OscillatorParams {
    double omega = 0.0;
};

class BoxConfig {
public:
    /// Throws Error(InvalidArgument) unless l0 is finite and positive and omega finite.
    BoxConfig(double l0, OscillatorParams params);

    double l0() const noexcept { return l0_; }
    double omega() const noexcept { return params_.omega; }
    const OscillatorParams& params() const noexcept { return params_; }

private:
    double l0_;
    OscillatorParams params_;
};

/// Sign of the (epsilon / 4 omega) exp(-4 omega t) phase in the confined solution.
/// Corrected (+) solves the Schrodinger equation exactly; AsPrinted (-) leaves a
/// residual 2 epsilon exp(-4 omega t) psi and is kept to demonstrate that.
enum class PhaseConvention { Corrected, AsPrinted };

const char* to_string(PhaseConvention conv) noexcept;

class ConfinedMode {
public:
    int n() const noexcept { return n_; }
    const BoxConfig& box() const noexcept { return box_; }
    double omega() const noexcept { return box_.omega(); }
    /// Separation constant (n pi / l0)^2.
    double epsilon() const noexcept { return epsilon_; }
    double sqrt_epsilon() const noexcept { return sqrt_epsilon_; }
    /// sqrt(2 / l0); constant in time.
    double norm() const noexcept { return norm_; }

private:
    friend ConfinedMode make_confined_mode(int n, const BoxConfig& box);
    ConfinedMode(int n, const BoxConfig& box);

    int n_;
    BoxConfig box_;
    double sqrt_epsilon_;
    double epsilon_;
    double norm_;
};

/// Throws Error(InvalidQuantumNumber) for n < 1 (there is no ground state n = 0).
ConfinedMode make_confined_mode(int n, const BoxConfig& box);

struct ScatteringMode {
    double k = 0.0;
    OscillatorParams params;

    /// Separation constant of the plane-wave family, epsilon = -k^2.
    double epsilon() const noexcept { return -k * k; }
};

/// Classical trajectory q(t) = exp(2 omega t).
double scale_factor(OscillatorParams params, double t) noexcept;

/// Wall position l0 * exp(2 omega t).
double box_length(const BoxConfig& box, double t) noexcept;

/// N exp(i omega x^2/2 - omega t +/- i (eps / 4 omega) e^{-4 omega t}) sin(e^{-2 omega t} sqrt(eps) x).
/// For omega == 0 the divergent constant phase is dropped and the particle-in-a-box
/// state N e^{-i eps t} sin(sqrt(eps) x) is returned.
cplx psi1_eval(const ConfinedMode& mode, double x, double t,
               PhaseConvention conv = PhaseConvention::Corrected);

/// exp(i omega x^2/2 + i k e^{-2 omega t} x - omega t + i (k^2 / 4 omega) e^{-4 omega t}).
/// Throws Error(UndefinedPhase) for omega == 0.
cplx psi2_eval(const ScatteringMode& mode, double x, double t);

/// e^{-4 omega t} n^2 pi^2 / l0^2.
double energy_level(const ConfinedMode& mode, double t) noexcept;

/// |psi2|^2 = e^{-2 omega t}.
double decay_intensity(OscillatorParams params, double t) noexcept;

/// Gamma in |psi2|^2 = e^{-Gamma t / 2}, i.e. 4 omega.
double decay_rate(OscillatorParams params) noexcept;

/// Reparameterized time tau(t) = (1 - e^{-4 omega t}) / (4 omega), tau = t at omega = 0.
/// Under d tau = e^{-4 omega t} dt the comoving equation becomes the free one.
double tau_of(OscillatorParams params, double t) noexcept;

}  // namespace invosc
