#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "invosc/analytic.hpp"
#include "invosc/grid.hpp"
#include "invosc/kernels.hpp"

using namespace invosc;

namespace {

struct Fixture {
    Grid1D grid;
    std::vector<cplx> minus, now, plus, out;

    explicit Fixture(std::size_t m) : grid(0.0, 3.0, static_cast<int>(m)), minus(m + 1), now(m + 1), plus(m + 1), out(m + 1)
    {
        for (std::size_t j = 0; j <= m; ++j) {
            const double x = grid.point(j);
            now[j] = std::polar(std::sin(x), 0.3 * x);
            minus[j] = now[j] * std::polar(1.0, 1e-4);
            plus[j] = now[j] * std::polar(1.0, -1e-4);
        }
    }
};

template <bool Parallel>
void bm_simpson(benchmark::State& state)
{
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            benchmark::DoNotOptimize(kernels::parallel::simpson_conj_product(f.now, f.plus, f.grid.spacing()));
        else
            benchmark::DoNotOptimize(kernels::serial::simpson_conj_product(f.now, f.plus, f.grid.spacing()));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void bm_hamiltonian(benchmark::State& state)
{
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::parallel::apply_hamiltonian(f.now, f.grid, 0.5, f.out);
        else
            kernels::serial::apply_hamiltonian(f.now, f.grid, 0.5, f.out);
        benchmark::DoNotOptimize(f.out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void bm_sample(benchmark::State& state)
{
    Fixture f(static_cast<std::size_t>(state.range(0)));
    const ConfinedMode mode = make_confined_mode(2, BoxConfig(3.0, {0.5}));
    const auto eval = [&](double x) { return psi1_eval(mode, x, 0.3); };
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::parallel::sample(f.grid, eval, f.out);
        else
            kernels::serial::sample(f.grid, eval, f.out);
        benchmark::DoNotOptimize(f.out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void bm_residual(benchmark::State& state)
{
    Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel)
            benchmark::DoNotOptimize(kernels::parallel::schrodinger_residual_max(f.minus, f.now, f.plus, f.grid, 1e-4, 0.5));
        else
            benchmark::DoNotOptimize(kernels::serial::schrodinger_residual_max(f.minus, f.now, f.plus, f.grid, 1e-4, 0.5));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_simpson<false>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_simpson<true>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_hamiltonian<false>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_hamiltonian<true>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_sample<false>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_sample<true>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_residual<false>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);
BENCHMARK(bm_residual<true>)->RangeMultiplier(8)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
