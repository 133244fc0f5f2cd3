#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "invosc/error.hpp"
#include "invosc/kernels.hpp"
#include "oracles.hpp"

using namespace invosc;
namespace serial = invosc::kernels::serial;
namespace parallel = invosc::kernels::parallel;

namespace {

double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("second derivative stencils are exact for quintics")
{
    const Grid1D grid(-1.0, 2.0, 12);
    std::vector<cplx> f(grid.size()), expected(grid.size()), out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.point(j);
        f[j] = cplx(x * x * x * x * x - 2.0 * x * x, 3.0 * x * x * x + 1.0);
        expected[j] = cplx(20.0 * x * x * x - 4.0, 18.0 * x);
    }
    serial::second_derivative(f, grid.spacing(), out);
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(out[j] - expected[j]) < 1e-9);
    parallel::second_derivative(f, grid.spacing(), out);
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(std::abs(out[j] - expected[j]) < 1e-9);
}

TEST_CASE("second derivative converges at 4th order")
{
    double previous = 0.0;
    for (int m : {64, 128, 256}) {
        const Grid1D grid(0.0, 2.0, m);
        std::vector<cplx> f(grid.size()), out(grid.size());
        serial::sample(grid, [](double x) { return cplx(std::sin(3.0 * x), std::cos(2.0 * x)); }, f);
        serial::second_derivative(f, grid.spacing(), out);
        double err = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double x = grid.point(j);
            err = std::max(err, std::abs(out[j] - cplx(-9.0 * std::sin(3.0 * x), -4.0 * std::cos(2.0 * x))));
        }
        if (previous > 0.0) CHECK(previous / err > 12.0);
        previous = err;
    }
}

TEST_CASE("Simpson rejects odd interval counts")
{
    std::vector<cplx> even_points(10, 1.0);
    CHECK_THROWS_AS(serial::simpson(even_points, 0.1), Error);
    CHECK_THROWS_AS(parallel::simpson(even_points, 0.1), Error);
}

TEST_CASE("property: parallel kernels agree with the serial reference")
{
    std::mt19937_64 rng(7);
    for (int m : {16, 1022, 5000, 12288}) {
        const Grid1D grid(-2.0, 3.0, m);
        const double h = grid.spacing();
        const auto f = oracle::random_field(rng, grid.size(), false);
        const auto g = oracle::random_field(rng, grid.size(), false);
        const auto k = oracle::random_field(rng, grid.size(), false);

        CHECK(rel_diff(parallel::simpson(f, h), serial::simpson(f, h)) < 1e-12);
        CHECK(rel_diff(parallel::simpson_conj_product(f, g, h), serial::simpson_conj_product(f, g, h)) < 1e-12);
        CHECK(parallel::sum_abs2(f, h) == doctest::Approx(serial::sum_abs2(f, h)).epsilon(1e-12));

        std::vector<cplx> a(grid.size()), b(grid.size());
        serial::apply_hamiltonian(f, grid, 0.7, a);
        parallel::apply_hamiltonian(f, grid, 0.7, b);
        CHECK(a == b);

        CHECK(parallel::schrodinger_residual_max(f, g, k, grid, 1e-3, 0.4)
              == serial::schrodinger_residual_max(f, g, k, grid, 1e-3, 0.4));
    }
}

TEST_CASE("parallel sampling matches serial sampling exactly")
{
    const Grid1D grid(0.0, 5.0, 4096);
    std::vector<cplx> a(grid.size()), b(grid.size());
    const auto f = [](double x) { return std::polar(std::exp(-x), x * x); };
    serial::sample(grid, f, a);
    parallel::sample(grid, f, b);
    CHECK(a == b);
}

TEST_CASE("grid endpoints are exact")
{
    const Grid1D grid(0.0, 3.0 * std::exp(1.0), 4097 - 1);
    CHECK(grid.point(0) == 0.0);
    CHECK(grid.point(grid.size() - 1) == 3.0 * std::exp(1.0));
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 4), Error);
    CHECK_THROWS_AS(Grid1D(1.0, 1.0, 16), Error);
}
