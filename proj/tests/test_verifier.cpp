#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "invosc/error.hpp"
#include "invosc/verifier.hpp"

using namespace invosc;

namespace {

constexpr double pi = std::numbers::pi;

const CheckResult* find(const Report& report, const std::string& name)
{
    for (const auto& r : report.results)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("check result pass flag follows its comparison")
{
    CHECK(make_check("a", "", 1e-11, 1e-10).pass);
    CHECK_FALSE(make_check("a", "", 1e-9, 1e-10).pass);
    CHECK(make_check("a", "", 4.0, 3.5, Comparison::AtLeast).pass);
    CHECK_FALSE(make_check("a", "", 3.0, 3.5, Comparison::AtLeast).pass);
    CHECK_FALSE(make_check("a", "", NAN, 1.0).pass);
}

TEST_CASE("orthonormality")
{
    const CheckResult r = check_orthonormality(BoxConfig(pi, {0.5}), 5, 0.5, 8192);
    CHECK(r.pass);
    CHECK(r.value < 1e-10);
    CHECK(check_orthonormality(BoxConfig(pi, {0.0}), 5, 2.3, 8192).value < 1e-10);
    CHECK_THROWS_AS(check_orthonormality(BoxConfig(pi, {0.5}), 1, 0.0, 8192), Error);
}

TEST_CASE("energy law and free limit")
{
    const auto e = check_energy_law(BoxConfig(pi, {0.5}), 3, {0.0, 0.5}, 8192);
    CHECK(e.relative.value < 1e-5);
    CHECK(e.imaginary.value < 1e-6);
    CHECK(e.time_derivative.pass);
    CHECK(e.monotonic.value == 0.0);
    CHECK(check_free_limit(BoxConfig(pi, {0.0}), 3, {0.0, 0.5}, 8192).value < 1e-6);

    const auto printed = check_energy_law(BoxConfig(pi, {0.5}), 2, {0.5}, 4096, PhaseConvention::AsPrinted);
    CHECK(printed.relative.pass);  // <H> is blind to an x-independent phase
    CHECK_FALSE(printed.time_derivative.pass);
}

TEST_CASE("symmetries")
{
    const BoxConfig box(pi, {0.5});
    CHECK(check_symmetries(make_confined_mode(2, box), 0.7, 1000).parity.value < 1e-14);
    CHECK(check_symmetries(make_confined_mode(1, box), 0.4, 1000).time_reversal.value < 1e-12);
    CHECK(check_symmetries(make_confined_mode(1, BoxConfig(pi, {0.0})), 0.4, 1000).time_reversal.value < 1e-12);
}

TEST_CASE("decay fit")
{
    std::vector<double> ts;
    for (int i = 0; i <= 8; ++i) ts.push_back(0.25 * i);
    const auto d = check_decay({0.5}, ts);
    CHECK(d.slope.value < 1e-10);
    CHECK(d.rate.value == 0.0);
    CHECK(check_decay({0.0}, ts).slope.value < 1e-12);
    try {
        check_decay({0.5}, {1.0});
        FAIL("expected invalid-fit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidFit);
    }
    CHECK_THROWS_AS(check_decay({0.5}, {1.0, 1.0}), Error);
}

TEST_CASE("residual checks")
{
    const auto r = check_residuals(BoxConfig(pi, {0.5}), 3, {0.3}, 4096, 1e-4);
    CHECK(r.exact.value < 1e-5);
    CHECK(r.convergence.value >= 3.5);
    CHECK(r.as_printed.value > 1e-2);
    CHECK(r.as_printed.pass);
    CHECK(r.as_printed_plateau.pass);
    CHECK(r.psi2.value < 1e-5);
}

TEST_CASE("propagation checks")
{
    const auto p = check_propagation(BoxConfig(pi, {0.25}), 1, 0.5, 2048, 4096);
    CHECK(p.l2_error.value < 1e-5);
    CHECK(p.norm_drift.value < 1e-12);
    CHECK(p.mode_mixing.value < 1e-12);
    CHECK(p.wall.value == 0.0);
    CHECK(check_superposition(BoxConfig(pi, {0.25}), 0.5, 2048, 4096).value < 1e-12);
    CHECK(check_propagation(BoxConfig(pi, {0.0}), 1, 0.5, 2048, 4096).l2_error.value < 1e-6);
}

TEST_CASE("default report passes and covers every claim")
{
    const Report report = run_full_report();
    CHECK(report.all_pass);
    const std::set<std::string> expected{
        "orthonormality", "moving_wall", "energy_law", "energy_imaginary", "energy_time_derivative",
        "energy_decreasing", "free_particle_limit", "parity", "time_reversal", "decay_slope", "decay_rate",
        "residual_exact", "residual_convergence", "residual_as_printed", "residual_as_printed_plateau",
        "residual_psi2", "propagation_l2", "propagation_norm_drift", "propagation_mode_mixing", "propagation_wall",
        "superposition_drift", "propagation_free_l2", "tau_limit", "gas_normalization", "gas_energy_ratio",
        "gas_tl2_invariant", "gas_gibbs_consistency", "gas_cooling"};
    for (const auto& name : expected) CHECK_MESSAGE(find(report, name) != nullptr, name);
    for (const auto& r : report.results) CHECK_MESSAGE(r.pass, r.name << " " << r.value);
}

TEST_CASE("treating the printed sign as exact fails the report")
{
    VerifyConfig config;
    config.convention = PhaseConvention::AsPrinted;
    const Report report = run_full_report(config);
    CHECK_FALSE(report.all_pass);
    CHECK_FALSE(find(report, "residual_exact")->pass);
    CHECK_FALSE(find(report, "energy_time_derivative")->pass);
    CHECK_FALSE(find(report, "propagation_l2")->pass);
}

TEST_CASE("a throwing check becomes a failed row")
{
    VerifyConfig config;
    config.decay_times = {1.0};
    const Report report = run_full_report(config);
    CHECK_FALSE(report.all_pass);
    const CheckResult* row = find(report, "decay_slope");
    REQUIRE(row != nullptr);
    CHECK_FALSE(row->pass);
    CHECK(row->params.find("invalid-fit") != std::string::npos);
}

TEST_CASE("report CSV format")
{
    Report report;
    report.results.push_back(make_check("x", "a=1;b=2", 1.0 / 3.0, 1e-10));
    report.results.push_back(make_check("y", "c,d", -0.0, 0.0));
    std::ostringstream os;
    write_report_csv(report, os);
    CHECK(os.str() ==
          "check,params,value,tolerance,pass\n"
          "x,a=1;b=2,0.333333333333333,1e-10,false\n"
          "y,c;d,0,0,true\n");
}

TEST_CASE("reports are reproducible bit for bit")
{
    std::ostringstream a, b;
    write_report_csv(run_full_report(), a);
    write_report_csv(run_full_report(), b);
    CHECK(a.str() == b.str());
}
