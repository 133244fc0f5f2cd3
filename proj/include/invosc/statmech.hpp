#pragma once

// Ideal Boltzmann gas in the expanding confined inverted oscillator.
//
// Levels scale as E_n(t) = E_n(0) e^{-4 omega t} and no transitions occur, so
// occupations prepared at inverse temperature beta0 stay frozen. They remain a
// Gibbs distribution at the instantaneous levels for T(t) = T0 e^{-4 omega t},
// which makes T L^2 an invariant of the expansion.

#include <span>
#include <vector>

#include "invosc/analytic.hpp"

namespace invosc {

inline constexpr int max_level_cutoff = 1'000'000;
inline constexpr double tail_ratio_bound = 1e-12;

class GasState {
public:
    const BoxConfig& box() const noexcept { return box_; }
    double beta0() const noexcept { return beta0_; }
    int n_max() const noexcept { return static_cast<int>(occupations_.size()); }
    /// occupations()[n - 1] is p_n.
    std::span<const double> occupations() const noexcept { return occupations_; }

private:
    friend GasState gibbs_occupations(const BoxConfig& box, double beta0, int n_max);
    GasState(const BoxConfig& box, double beta0, std::vector<double> occupations)
        : box_(box), beta0_(beta0), occupations_(std::move(occupations)) {}

    BoxConfig box_;
    double beta0_;
    std::vector<double> occupations_;
};

/// p_n proportional to exp(-beta0 E_n(0)). The cutoff doubles until
/// p_{n_max} < 1e-12 p_1; throws Error(CutoffInsufficient) past 10^6 levels and
/// Error(InvalidTemperature) for beta0 <= 0.
GasState gibbs_occupations(const BoxConfig& box, double beta0, int n_max);

/// U(t) = sum p_n E_n(t).
double frozen_mean_energy(const GasState& gas, double t);

/// T0 e^{-4 omega t} with T0 = 1 / beta0.
double effective_temperature(const GasState& gas, double t);

/// max_n |p_n - exp(-beta(t) E_n(t)) / Z(t)| with beta(t) = 1 / effective_temperature.
double gibbs_deviation(const GasState& gas, double t);

struct CoolingRow {
    double t;
    double box_length;
    double mean_energy;
    double temperature;
    double temperature_length2;
};

/// One row per time; throws Error(InvalidSchedule) for an empty or unsorted grid.
std::vector<CoolingRow> cooling_curve(const GasState& gas, std::span<const double> t_grid);

}  // namespace invosc
