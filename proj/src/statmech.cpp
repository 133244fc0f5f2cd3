#include "invosc/statmech.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "invosc/error.hpp"

namespace invosc {

namespace {

// E_n(0) = n^2 pi^2 / l0^2
double initial_level(const BoxConfig& box, int n)
{
    const double k = n * std::numbers::pi / box.l0();
    return k * k;
}

// exp(-beta (E_n - E_1)) for n = 1..n_max, normalized; summed from the tail up.
std::vector<double> boltzmann_weights(const BoxConfig& box, double beta, int n_max, double level_scale)
{
    std::vector<double> w(static_cast<std::size_t>(n_max));
    const double e1 = initial_level(box, 1) * level_scale;
    for (int n = 1; n <= n_max; ++n)
        w[static_cast<std::size_t>(n - 1)] = std::exp(-beta * (initial_level(box, n) * level_scale - e1));
    double z = 0.0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) z += *it;
    for (double& p : w) p /= z;
    return w;
}

}  // namespace

GasState gibbs_occupations(const BoxConfig& box, double beta0, int n_max)
{
    if (!std::isfinite(beta0) || beta0 <= 0.0)
        throw Error(ErrorCode::InvalidTemperature, "beta0 must be finite and > 0");
    if (n_max < 2)
        throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");

    const auto tail_ratio = [&](int cutoff) {
        return std::exp(-beta0 * (initial_level(box, cutoff) - initial_level(box, 1)));
    };
    int cutoff = n_max;
    while (cutoff > max_level_cutoff || !(tail_ratio(cutoff) < tail_ratio_bound)) {
        if (cutoff >= max_level_cutoff)
            throw Error(ErrorCode::CutoffInsufficient,
                        "more than " + std::to_string(max_level_cutoff) + " levels needed at beta0 = " + std::to_string(beta0));
        cutoff = std::min(2 * cutoff, max_level_cutoff);
    }
    return GasState(box, beta0, boltzmann_weights(box, beta0, cutoff, 1.0));
}

double frozen_mean_energy(const GasState& gas, double t)
{
    const auto p = gas.occupations();
    const double decay = std::exp(-4.0 * gas.box().omega() * t);
    double u = 0.0;
    for (std::size_t i = p.size(); i-- > 0;)
        u += p[i] * (initial_level(gas.box(), static_cast<int>(i + 1)) * decay);
    return u;
}

double effective_temperature(const GasState& gas, double t)
{
    return std::exp(-4.0 * gas.box().omega() * t) / gas.beta0();
}

double gibbs_deviation(const GasState& gas, double t)
{
    const double beta = 1.0 / effective_temperature(gas, t);
    const double decay = std::exp(-4.0 * gas.box().omega() * t);
    const std::vector<double> fresh = boltzmann_weights(gas.box(), beta, gas.n_max(), decay);
    const auto p = gas.occupations();
    double worst = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(p[i] - fresh[i]));
    return worst;
}

std::vector<CoolingRow> cooling_curve(const GasState& gas, std::span<const double> t_grid)
{
    if (t_grid.empty())
        throw Error(ErrorCode::InvalidSchedule, "time schedule is empty");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw Error(ErrorCode::InvalidSchedule, "time schedule must be sorted ascending");
    std::vector<CoolingRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        const double length = box_length(gas.box(), t);
        const double temperature = effective_temperature(gas, t);
        rows.push_back({t, length, frozen_mean_energy(gas, t), temperature, temperature * length * length});
    }
    return rows;
}

}  // namespace invosc
