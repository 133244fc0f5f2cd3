#pragma once

// Pass/fail checks for every quantitative property of the confined inverted
// oscillator, each carrying its measured deviation and tolerance.

#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

#include "invosc/analytic.hpp"
#include "invosc/propagator.hpp"
#include "invosc/quadrature.hpp"

namespace invosc {

/// Most checks pass when the deviation is at most the tolerance; a few
/// (convergence ratios, the printed-sign residual) pass when it is at least.
enum class Comparison { AtMost, AtLeast };

struct CheckResult {
    std::string name;
    std::string params;
    double value = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::AtMost;
    bool pass = false;
};

CheckResult make_check(std::string name, std::string params, double value, double tolerance,
                       Comparison comparison = Comparison::AtMost);

struct Report {
    std::vector<CheckResult> results;
    bool all_pass = false;
};

/// Fixed tolerances used by the full report.
struct Tolerances {
    double orthonormality = 1e-10;
    double energy_relative = 1e-5;
    double energy_imaginary = 1e-6;
    double free_energy_relative = 1e-6;
    double parity = 1e-14;
    double time_reversal = 1e-12;
    double decay_slope = 1e-10;
    double residual = 1e-5;
    double residual_convergence = 3.5;
    double as_printed_residual = 1e-2;
    double propagation_l2 = 1e-5;
    double propagation_free_l2 = 1e-6;
    double norm_drift = 1e-12;
    double mode_mixing = 1e-12;
    double wall = 1e-12;
    double gas = 1e-12;
};

struct PropagationConfig {
    double omega = 0.25;
    int n = 1;
    double t_target = 0.5;
    int m = default_propagation_intervals;
    int steps = default_cn_steps;
};

struct VerifyConfig {
    double l0 = std::numbers::pi;
    double omega = 0.5;
    int n_max = 5;
    int m = default_quadrature_intervals;
    std::vector<double> norm_times{0.0, 0.5, 1.0};
    int energy_n_max = 3;
    std::vector<double> energy_times{0.0, 0.5};
    int residual_n_max = 3;
    std::vector<double> residual_times{0.0, 0.3};
    int residual_m = 4096;
    double residual_dt = 1e-4;
    double psi2_k = 1.0;
    int symmetry_samples = 1000;
    double parity_time = 0.7;
    double reversal_time = 0.4;
    std::vector<double> decay_times{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    PropagationConfig propagation;
    double beta0 = 1.0;
    int gas_n_max = 20;
    std::vector<double> gas_times{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    /// Convention treated as the exact solution by energy, residual and propagation checks.
    PhaseConvention convention = PhaseConvention::Corrected;
    Tolerances tol;
};

/// Gram matrix of psi1 modes 1..n_max over [0, box_length(t)]; value = max |G - I|.
CheckResult check_orthonormality(const BoxConfig& box, int n_max, double t, int m,
                                 const Tolerances& tol = {});

struct EnergyChecks {
    CheckResult relative;      // max |<H> - E_n(t)| / E_n(t)
    CheckResult imaginary;     // max |Im <H>|
    CheckResult time_derivative;  // max |<i d/dt> - E_n(t)| / E_n(t)
    CheckResult monotonic;     // count of E_n(t2) >= E_n(t1) with t2 > t1 (omega > 0)
};

EnergyChecks check_energy_law(const BoxConfig& box, int n_max, const std::vector<double>& t_list, int m,
                              PhaseConvention conv = PhaseConvention::Corrected, const Tolerances& tol = {});

/// Free-particle limit: relative deviation of <H> from n^2 pi^2 / l0^2 at the given omega
/// (0 or a tiny value for the continuity check).
CheckResult check_free_limit(const BoxConfig& box, int n_max, const std::vector<double>& t_list, int m,
                             const Tolerances& tol = {});

struct SymmetryChecks {
    CheckResult parity;
    CheckResult time_reversal;
};

SymmetryChecks check_symmetries(const ConfinedMode& mode, double t, int samples, const Tolerances& tol = {});

struct DecayChecks {
    CheckResult slope;  // |fitted slope of ln|psi2|^2 + 2 omega|
    CheckResult rate;   // |Gamma - 4 omega|
};

/// Throws Error(InvalidFit) for fewer than two distinct times. At omega = 0 the
/// free plane wave stands in for psi2.
DecayChecks check_decay(OscillatorParams params, const std::vector<double>& t_list, double k = 1.0,
                        const Tolerances& tol = {});

struct ResidualChecks {
    CheckResult exact;            // finest-level residual of the chosen convention
    CheckResult convergence;      // min residual(dt) / residual(dt/2)
    CheckResult as_printed;       // min residual of the printed sign
    CheckResult as_printed_plateau;  // cases where refinement lowered the printed-sign residual
                                     // by more than the exact solution's truncation error
    CheckResult psi2;             // plane-wave residual
};

ResidualChecks check_residuals(const BoxConfig& box, int n_max, const std::vector<double>& t_list, int m,
                               double dt, PhaseConvention conv = PhaseConvention::Corrected, double k = 1.0,
                               const Tolerances& tol = {});

struct PropagationChecks {
    CheckResult l2_error;
    CheckResult norm_drift;
    CheckResult mode_mixing;
    CheckResult wall;  // |phi| at both comoving walls after propagation
};

PropagationChecks check_propagation(const BoxConfig& box, int n, double t_target, int m, int steps,
                                    PhaseConvention conv = PhaseConvention::Corrected, const Tolerances& tol = {});

/// Equal-weight n = 1, 2 superposition; value = max | |c_n(t)| - |c_n(0)| |.
CheckResult check_superposition(const BoxConfig& box, double t_target, int m, int steps, const Tolerances& tol = {});

/// max |psi1(box_length(t), t)| over modes and times: the node rides on the wall.
CheckResult check_moving_wall(const BoxConfig& box, int n_max, const std::vector<double>& t_list,
                              const Tolerances& tol = {});

struct GasChecks {
    CheckResult normalization;
    CheckResult energy_ratio;
    CheckResult tl2_invariant;
    CheckResult gibbs_consistency;
    CheckResult cooling;  // count of non-decreasing U or T steps for omega > 0
};

GasChecks check_gas(const BoxConfig& box, double beta0, int n_max, const std::vector<double>& t_list,
                    const Tolerances& tol = {});

/// Runs every check in a fixed order. A check that throws becomes a failed row.
Report run_full_report(const VerifyConfig& config = {});

/// CSV: header `check,params,value,tolerance,pass`, 15 significant digits, LF endings.
void write_report_csv(const Report& report, std::ostream& out);

}  // namespace invosc
