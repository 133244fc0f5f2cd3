#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "invosc/error.hpp"
#include "invosc/statmech.hpp"
#include "oracles.hpp"

using namespace invosc;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& err) {
        return err.code();
    }
    FAIL("expected invosc::Error");
    return ErrorCode::InvalidArgument;
}

double sum(std::span<const double> p)
{
    double s = 0.0;
    for (double v : p) s += v;
    return s;
}

}  // namespace

TEST_CASE("long double oracle agrees with the frozen high-precision values")
{
    const auto sums = oracle::gibbs(oracle::pi, 1.0L);
    CHECK(static_cast<double>(sums.p1) == Approx(oracle::p1_l0pi_beta1).epsilon(1e-15));
    CHECK(static_cast<double>(sums.mean_energy) == Approx(oracle::u0_l0pi_beta1).epsilon(1e-15));
}

TEST_CASE("Gibbs occupations at l0 = pi, beta0 = 1")
{
    const GasState gas = gibbs_occupations(BoxConfig(pi, {0.5}), 1.0, 20);
    CHECK(gas.n_max() == 20);
    CHECK(gas.occupations()[0] == Approx(oracle::p1_l0pi_beta1).epsilon(1e-12));
    CHECK(std::abs(sum(gas.occupations()) - 1.0) < 1e-12);
    CHECK(frozen_mean_energy(gas, 0.0) == Approx(oracle::u0_l0pi_beta1).epsilon(1e-12));
    CHECK(gas.occupations()[19] < 1e-12 * gas.occupations()[0]);
}

TEST_CASE("ground level dominates at low temperature")
{
    const GasState cold = gibbs_occupations(BoxConfig(pi, {0.5}), 50.0, 4);
    CHECK(cold.occupations()[0] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cutoff extends at high temperature and is capped")
{
    const BoxConfig box(pi, {0.5});
    const GasState hot = gibbs_occupations(box, 1e-3, 2);
    CHECK(hot.n_max() > 2);
    const auto p = hot.occupations();
    CHECK(p.back() < 1e-12 * p.front());
    CHECK(std::abs(sum(p) - 1.0) < 1e-12);
    const auto reference = oracle::gibbs(oracle::pi, 1e-3L, hot.n_max());
    CHECK(p.front() == Approx(static_cast<double>(reference.p1)).epsilon(1e-12));

    CHECK(code_of([&] { gibbs_occupations(box, 1e-12, 2); }) == ErrorCode::CutoffInsufficient);
}

TEST_CASE("temperature validation")
{
    const BoxConfig box(pi, {0.5});
    CHECK(code_of([&] { gibbs_occupations(box, 0.0, 20); }) == ErrorCode::InvalidTemperature);
    CHECK(code_of([&] { gibbs_occupations(box, -1.0, 20); }) == ErrorCode::InvalidTemperature);
}

TEST_CASE("frozen mean energy and effective temperature")
{
    const GasState gas = gibbs_occupations(BoxConfig(pi, {0.5}), 1.0, 20);
    CHECK(std::abs(frozen_mean_energy(gas, 1.0) / frozen_mean_energy(gas, 0.0) - std::exp(-2.0)) < 1e-12);
    CHECK(effective_temperature(gas, 0.0) == 1.0);
    CHECK(effective_temperature(gas, 1.0) == Approx(0.135335).epsilon(1e-6));

    const GasState still = gibbs_occupations(BoxConfig(pi, {0.0}), 1.0, 20);
    CHECK(frozen_mean_energy(still, 5.0) == frozen_mean_energy(still, 0.0));
}

TEST_CASE("occupations stay Gibbs at the instantaneous levels")
{
    const GasState gas = gibbs_occupations(BoxConfig(2.0, {0.7}), 0.3, 10);
    for (double t : {0.0, 0.4, 1.3, 2.0}) CHECK(gibbs_deviation(gas, t) < 1e-12);
}

TEST_CASE("cooling curve")
{
    const GasState gas = gibbs_occupations(BoxConfig(pi, {0.5}), 1.0, 20);
    const std::vector<double> t0{0.0};
    const auto first = cooling_curve(gas, t0);
    REQUIRE(first.size() == 1);
    CHECK(first[0].t == 0.0);
    CHECK(first[0].box_length == pi);
    CHECK(first[0].mean_energy == frozen_mean_energy(gas, 0.0));
    CHECK(first[0].temperature == 1.0);
    CHECK(first[0].temperature_length2 == Approx(pi * pi).epsilon(1e-15));

    std::vector<double> ts;
    for (int i = 0; i <= 20; ++i) ts.push_back(0.1 * i);
    const auto rows = cooling_curve(gas, ts);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].mean_energy < rows[i - 1].mean_energy);
        CHECK(rows[i].temperature < rows[i - 1].temperature);
        CHECK(std::abs(rows[i].temperature_length2 - rows[0].temperature_length2) / rows[0].temperature_length2 < 1e-12);
    }

    const std::vector<double> unsorted{0.0, 1.0, 0.5};
    CHECK(code_of([&] { cooling_curve(gas, unsorted); }) == ErrorCode::InvalidSchedule);
    CHECK(code_of([&] { cooling_curve(gas, std::vector<double>{}); }) == ErrorCode::InvalidSchedule);
}
